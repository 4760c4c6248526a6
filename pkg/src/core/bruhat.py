#!/usr/bin/env python3
"""
🌱 Orden de Bruhat: comparación, cubrimientos, intervalos, conjuntos con descensos restringidos y joins.
"""

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from src.core.coxeter import CoxeterSystem, GroupElement
from src.utils.config import DEFAULT_DESCENT_BUDGET, DEFAULT_INTERVAL_BUDGET
from src.utils.errors import BudgetExceededError, PreconditionError


class BruhatOracle:
    """Comparaciones de Bruhat con caché local a un lote de consultas."""

    def __init__(self, system: CoxeterSystem):
        self.system = system
        self._cache: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], bool] = {}

    def leq(self, x: GroupElement, w: GroupElement) -> bool:
        if x.system is not self.system or w.system is not self.system:
            raise PreconditionError("No se pueden comparar elementos de sistemas distintos")
        pair = (x.key, w.key)
        cached = self._cache.get(pair)
        if cached is None:
            cached = self._cache[pair] = _lifting(x, w)
        return cached

    def lt(self, x: GroupElement, w: GroupElement) -> bool:
        return x != w and self.leq(x, w)


def _lifting(x: GroupElement, w: GroupElement) -> bool:
    # s = menor descenso izquierdo de w; sx<x ⇒ (sx ≤ sw), si no (x ≤ sw)
    while True:
        if x.length > w.length:
            return False
        if x.is_identity():
            return True
        if x.length == w.length:
            return x == w
        s = min(w.left_descents())
        if x.has_left_descent(s):
            x = x.mul_left(s)
        w = w.mul_left(s)


def bruhat_leq(x: GroupElement, w: GroupElement, oracle: Optional[BruhatOracle] = None) -> bool:
    return (oracle or BruhatOracle(x.system)).leq(x, w)


def lower_covers(w: GroupElement) -> List[GroupElement]:
    """Elementos w·t con t reflexión, w(β) < 0 y longitud ℓ(w) - 1."""
    system = w.system
    n = system.num_positive
    covers = []
    for beta, t in enumerate(system.reflections):
        if w.perm[beta] >= n:
            candidate = w * t
            if candidate.length == w.length - 1:
                covers.append(candidate)
    return sorted(covers, key=GroupElement.sort_key)


def upper_covers(w: GroupElement) -> List[GroupElement]:
    system = w.system
    n = system.num_positive
    covers = []
    for beta, t in enumerate(system.reflections):
        if w.perm[beta] < n:
            candidate = w * t
            if candidate.length == w.length + 1:
                covers.append(candidate)
    return sorted(covers, key=GroupElement.sort_key)


def lower_interval(w: GroupElement, budget: int = DEFAULT_INTERVAL_BUDGET) -> Set[GroupElement]:
    """[e, w] como productos de subpalabras de una palabra reducida de w."""
    interval: Set[GroupElement] = {w.system.identity}
    for label in w.word():
        s = w.system.label_index[label]
        interval |= {x.mul_right(s) for x in interval}
        if len(interval) > budget:
            raise BudgetExceededError(len(interval), budget, "elementos del intervalo")
    return interval


def subword_leq(x: GroupElement, w: GroupElement) -> bool:
    """Oráculo independiente: x ≤ w si x es producto de una subpalabra de una palabra reducida de w."""
    return x in lower_interval(w)


@dataclass
class DescentRestrictedSet:
    """desc(T, U) = {x : LD(x) ⊆ T, RD(x) ⊆ U}, enumerado sin recorrer todo W."""

    system: CoxeterSystem
    T: FrozenSet[str]
    U: FrozenSet[str]
    budget: int = DEFAULT_DESCENT_BUDGET
    _left_ok: FrozenSet[int] = field(init=False, repr=False)
    _right_ok: FrozenSet[int] = field(init=False, repr=False)

    def __post_init__(self):
        self._left_ok = self.system.indices_of(self.T)
        self._right_ok = self.system.indices_of(self.U)

    @cached_property
    def members(self) -> List[GroupElement]:
        # LD(x) ⊆ T es cerrado por prefijos, así que basta extender por la derecha
        identity = self.system.identity
        seen = {identity.key}
        queue = deque([identity])
        left_closed: List[GroupElement] = [identity]
        while queue:
            x = queue.popleft()
            for s in range(self.system.rank):
                if x.has_right_descent(s):
                    continue
                y = x.mul_right(s)
                if y.key in seen or not y.left_descents() <= self._left_ok:
                    continue
                seen.add(y.key)
                left_closed.append(y)
                queue.append(y)
                if len(left_closed) > self.budget:
                    raise BudgetExceededError(len(left_closed), self.budget, "elementos con descensos restringidos")
        members = [x for x in left_closed if x.right_descents() <= self._right_ok]
        return sorted(members, key=GroupElement.sort_key)

    def __contains__(self, x: GroupElement) -> bool:
        return x.left_descents() <= self._left_ok and x.right_descents() <= self._right_ok

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)


@lru_cache(maxsize=256)
def _descent_restricted_cached(system: CoxeterSystem, T: FrozenSet[str], U: FrozenSet[str], budget: int):
    return DescentRestrictedSet(system, T, U, budget)


def descent_restricted(system: CoxeterSystem, T: Iterable[str], U: Iterable[str],
                       budget: int = DEFAULT_DESCENT_BUDGET) -> DescentRestrictedSet:
    return _descent_restricted_cached(system, frozenset(T), frozenset(U), budget)


@dataclass(frozen=True)
class JoinResult:
    """Resultado de ⋁X: existe (element) o no existe (bounds = cotas superiores minimales)."""

    exists: bool
    element: Optional[GroupElement]
    bounds: Tuple[GroupElement, ...]


def minimal_upper_bounds(elements: Iterable[GroupElement], oracle: Optional[BruhatOracle] = None,
                         budget: int = DEFAULT_DESCENT_BUDGET) -> List[GroupElement]:
    """Cotas superiores minimales de X, buscadas en desc(∪LD, ∪RD) por longitud creciente."""
    xs = list(dict.fromkeys(elements))
    if not xs:
        return []
    system = xs[0].system
    oracle = oracle or BruhatOracle(system)
    T = frozenset().union(*(system.labels_of(x.left_descents()) for x in xs))
    U = frozenset().union(*(system.labels_of(x.right_descents()) for x in xs))
    floor = max(x.length for x in xs)
    bounds: List[GroupElement] = []
    for candidate in descent_restricted(system, T, U, budget):
        if candidate.length < floor:
            continue
        if any(oracle.leq(b, candidate) for b in bounds):
            continue
        if all(oracle.leq(x, candidate) for x in xs):
            bounds.append(candidate)
    return bounds


def join(elements: Iterable[GroupElement], system: Optional[CoxeterSystem] = None,
         oracle: Optional[BruhatOracle] = None, budget: int = DEFAULT_DESCENT_BUDGET) -> JoinResult:
    """⋁X; por convenio ⋁∅ = e."""
    xs = list(elements)
    if not xs:
        if system is None:
            raise PreconditionError("El join del conjunto vacío necesita el sistema")
        return JoinResult(True, system.identity, (system.identity,))
    bounds = minimal_upper_bounds(xs, oracle, budget)
    if len(bounds) == 1:
        return JoinResult(True, bounds[0], tuple(bounds))
    return JoinResult(False, None, tuple(bounds))

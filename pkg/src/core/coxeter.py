#!/usr/bin/env python3
"""
🌱 Aritmética exacta de grupos de Weyl finitos: raíces, elementos, longitudes y descensos.

Un elemento se representa por la permutación que induce sobre la lista de raíces:
primero las N raíces positivas (ordenadas por altura, la raíz simple i en la
posición i) y después sus opuestas en las posiciones N..2N-1.
"""

import math
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from operator import itemgetter
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from src.utils.config import DEFAULT_GROUP_BUDGET, SUPPORTED_RANKS
from src.utils.errors import BudgetExceededError, PreconditionError, UnsupportedTypeError, WordError
from src.utils.helpers import format_word, label_sort_key, sha256_of_text, split_word

LEFT = "left"
RIGHT = "right"

_DESCRIPTOR = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*$")


def supported_types() -> str:
    return ", ".join(f"{fam}{min(r)}-{fam}{max(r)}" if len(r) > 1 else f"{fam}{r[0]}"
                     for fam, r in SUPPORTED_RANKS.items())


def _dynkin(family: str, rank: int) -> Tuple[List[str], List[Tuple[str, str, int]]]:
    """Etiquetas y aristas (a, b, m) del diagrama; m es el orden de s_a s_b."""
    if family == "A":
        labels = [str(k) for k in range(1, rank + 1)]
        edges = [(str(k), str(k + 1), 3) for k in range(1, rank)]
    elif family == "B":
        labels = [str(k) for k in range(rank)]
        edges = [("0", "1", 4)] + [(str(k), str(k + 1), 3) for k in range(1, rank - 1)]
    elif family == "D":
        n = rank - 2
        labels = ["0-", "0+"] + [str(k) for k in range(1, n + 1)]
        edges = [("0+", "1", 3), ("0-", "1", 3)] + [(str(k), str(k + 1), 3) for k in range(1, n)]
    elif family == "E":
        labels = [str(k) for k in range(1, rank + 1)]
        chain = [1, 3, 4, 5, 6, 7, 8][: rank - 1]
        edges = [(str(a), str(b), 3) for a, b in zip(chain, chain[1:])] + [("2", "4", 3)]
    elif family == "F":
        labels = ["1", "2", "3", "4"]
        edges = [("1", "2", 3), ("2", "3", 4), ("3", "4", 3)]
    else:
        labels = ["1", "2"]
        edges = [("1", "2", 6)]
    labels.sort(key=label_sort_key)
    return labels, edges


def parse_descriptor(descriptor: str) -> Tuple[str, int]:
    match = _DESCRIPTOR.match(descriptor or "")
    if not match:
        raise UnsupportedTypeError(descriptor, supported_types())
    family, rank = match.group(1).upper(), int(match.group(2))
    if rank not in SUPPORTED_RANKS[family]:
        raise UnsupportedTypeError(descriptor, supported_types())
    return family, rank


def group_order(family: str, rank: int) -> int:
    """Orden clásico de W, usado como oráculo independiente y para los presupuestos."""
    if family == "A":
        return math.factorial(rank + 1)
    if family == "B":
        return 2**rank * math.factorial(rank)
    if family == "D":
        return 2 ** (rank - 1) * math.factorial(rank)
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600, ("F", 4): 1152, ("G", 2): 12}[(family, rank)]


class GroupElement:
    """Elemento de W dado por su acción sobre la lista de raíces."""

    __slots__ = ("system", "perm", "key", "_length", "_word", "__weakref__")

    def __init__(self, system: "CoxeterSystem", perm: Tuple[int, ...]):
        self.system = system
        self.perm = perm
        self.key = perm[: system.rank]
        self._length: Optional[int] = None
        self._word: Optional[Tuple[str, ...]] = None

    @property
    def length(self) -> int:
        if self._length is None:
            n = self.system.num_positive
            self._length = sum(1 for image in self.perm[:n] if image >= n)
        return self._length

    def is_identity(self) -> bool:
        return self.key == self.system.identity.key

    def right_descents(self) -> FrozenSet[int]:
        n = self.system.num_positive
        return frozenset(i for i in range(self.system.rank) if self.perm[i] >= n)

    def left_descents(self) -> FrozenSet[int]:
        n = self.system.num_positive
        return frozenset(i for i in range(self.system.rank) if self.perm.index(i) >= n)

    def has_right_descent(self, i: int) -> bool:
        return self.perm[i] >= self.system.num_positive

    def has_left_descent(self, i: int) -> bool:
        return self.perm.index(i) >= self.system.num_positive

    def mul_right(self, i: int) -> "GroupElement":
        """w·s_i"""
        return GroupElement(self.system, itemgetter(*self.system.simple_tables[i])(self.perm))

    def mul_left(self, i: int) -> "GroupElement":
        """s_i·w"""
        return GroupElement(self.system, itemgetter(*self.perm)(self.system.simple_tables[i]))

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if not isinstance(other, GroupElement):
            return NotImplemented
        return GroupElement(self.system, itemgetter(*other.perm)(self.perm))

    def inverse(self) -> "GroupElement":
        inv = [0] * len(self.perm)
        for r, image in enumerate(self.perm):
            inv[image] = r
        return GroupElement(self.system, tuple(inv))

    def word(self) -> Tuple[str, ...]:
        """Palabra reducida lexicográficamente mínima en el orden de etiquetas."""
        if self._word is None:
            letters: List[str] = []
            current = self
            while not current.is_identity():
                s = min(current.left_descents())
                letters.append(self.system.labels[s])
                current = current.mul_left(s)
            self._word = tuple(letters)
        return self._word

    def text(self) -> str:
        return self.system.format(self.word())

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return self.length, tuple(self.system.label_index[s] for s in self.word())

    def __eq__(self, other):
        return isinstance(other, GroupElement) and self.system is other.system and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"<{self.system.tag} {self.text() or 'e'}>"


@dataclass(frozen=True)
class Word:
    labels: Tuple[str, ...]
    reduced: bool

    def __str__(self):
        return " ".join(self.labels)


class CoxeterSystem:
    """Sistema de Coxeter cristalográfico etiquetado con su sistema de raíces."""

    def __init__(self, family: str, rank: int):
        self.family = family
        self.rank = rank
        self.tag = f"{family}{rank}"
        self.labels, self.edges = _dynkin(family, rank)
        self.label_index: Dict[str, int] = {label: i for i, label in enumerate(self.labels)}
        self.cartan = self._cartan_matrix()
        self.roots = self._root_list()
        self.num_positive = len(self.roots) // 2
        self.simple_tables = self._simple_tables()
        self.identity = GroupElement(self, tuple(range(len(self.roots))))

    # Construcción
    def _cartan_matrix(self) -> np.ndarray:
        cartan = 2 * np.eye(self.rank, dtype=np.int64)
        for a, b, m in self.edges:
            i, j = self.label_index[a], self.label_index[b]
            cartan[i, j] = {3: -1, 4: -2, 6: -3}[m]
            cartan[j, i] = -1
        return cartan

    def _root_list(self) -> np.ndarray:
        simple = np.eye(self.rank, dtype=np.int64)
        seen = {tuple(row): row for row in simple}
        frontier = list(simple)
        while frontier:
            fresh = []
            for beta in frontier:
                pairing = self.cartan @ beta
                for i in range(self.rank):
                    image = beta.copy()
                    image[i] -= pairing[i]
                    key = tuple(int(c) for c in image)
                    if key not in seen:
                        seen[key] = image
                        fresh.append(image)
            frontier = fresh
        positive = sorted((k for k in seen if all(c >= 0 for c in k)), key=lambda k: (sum(k), tuple(-c for c in k)))
        return np.array(positive + [tuple(-c for c in k) for k in positive], dtype=np.int64)

    def _simple_tables(self) -> List[Tuple[int, ...]]:
        index = {tuple(int(c) for c in row): r for r, row in enumerate(self.roots)}
        pairing = self.roots @ self.cartan.T
        tables = []
        for i in range(self.rank):
            images = self.roots.copy()
            images[:, i] -= pairing[:, i]
            tables.append(tuple(index[tuple(int(c) for c in row)] for row in images))
        return tables

    # Datos derivados
    @property
    def n(self) -> int:
        """Parámetro n de las familias B_{n+1} y D_{n+2}."""
        return self.rank - {"B": 1, "D": 2}.get(self.family, 0)

    @cached_property
    def w0(self) -> GroupElement:
        current = self.identity
        while True:
            ascents = [i for i in range(self.rank) if not current.has_right_descent(i)]
            if not ascents:
                return current
            current = current.mul_right(ascents[0])

    @cached_property
    def sigma(self) -> Dict[str, str]:
        """Automorfismo del diagrama inducido por la conjugación con w0."""
        n = self.num_positive
        return {self.labels[i]: self.labels[self.w0.perm[i] - n] for i in range(self.rank)}

    @cached_property
    def reflections(self) -> List[GroupElement]:
        """t_β para cada raíz positiva β, en el orden de la lista de raíces."""
        result: List[Optional[GroupElement]] = [None] * self.num_positive
        for r in range(self.num_positive):
            if r < self.rank:
                result[r] = self.identity.mul_right(r)
                continue
            pairing = self.cartan @ self.roots[r]
            i = next(i for i in range(self.rank) if pairing[i] > 0)
            smaller = self.simple_tables[i][r]
            result[r] = result[smaller].mul_left(i).mul_right(i)
        return result

    @cached_property
    def checksum(self) -> str:
        payload = f"{self.tag}|{','.join(self.labels)}|{self.cartan.tolist()}"
        return sha256_of_text(payload)

    @property
    def order(self) -> int:
        return group_order(self.family, self.rank)

    def simple(self, label: str) -> GroupElement:
        return self.identity.mul_right(self.label_index[label])

    def format(self, tokens: Sequence[str]) -> str:
        return format_word(tokens, compact=self.family in ("E", "F", "G"))

    def labels_of(self, indices: Iterable[int]) -> FrozenSet[str]:
        return frozenset(self.labels[i] for i in indices)

    def indices_of(self, labels: Iterable[str]) -> FrozenSet[int]:
        return frozenset(self.label_index[label] for label in labels)

    def __repr__(self):
        return f"CoxeterSystem({self.tag})"


@lru_cache(maxsize=None)
def build_system(type_descriptor: str) -> CoxeterSystem:
    """Construye y valida el sistema de un descriptor como "B3" o "E8"."""
    family, rank = parse_descriptor(type_descriptor)
    return CoxeterSystem(family, rank)


def element_from_word(system: CoxeterSystem, word: Union[str, Sequence[str]]) -> GroupElement:
    """Producto de las reflexiones simples listadas; la palabra no tiene por qué ser reducida."""
    tokens = split_word(word, system.labels) if isinstance(word, str) else tuple(word)
    current = system.identity
    for token in tokens:
        if token not in system.label_index:
            raise WordError(token)
        current = current.mul_right(system.label_index[token])
    return current


def is_reduced_word(system: CoxeterSystem, word: Union[str, Sequence[str]]) -> bool:
    tokens = split_word(word, system.labels) if isinstance(word, str) else tuple(word)
    return element_from_word(system, tokens).length == len(tokens)


def descents(w: GroupElement, side: str) -> FrozenSet[str]:
    """LD(w) o RD(w) como conjunto de etiquetas."""
    indices = w.left_descents() if side == LEFT else w.right_descents()
    return w.system.labels_of(indices)


def ascents(w: GroupElement, side: str) -> FrozenSet[str]:
    return frozenset(w.system.labels) - descents(w, side)


def canonical_reduced_word(w: GroupElement) -> Word:
    return Word(w.word(), True)


def count_reduced_words(w: GroupElement) -> int:
    """R(w) = Σ_{s∈RD(w)} R(ws), R(e) = 1."""
    memo: Dict[Tuple[int, ...], int] = {w.system.identity.key: 1}

    def count(x: GroupElement) -> int:
        if x.key not in memo:
            memo[x.key] = sum(count(x.mul_right(s)) for s in x.right_descents())
        return memo[x.key]

    stack = [w]
    while stack:
        x = stack[-1]
        pending = [y for y in (x.mul_right(s) for s in x.right_descents()) if y.key not in memo]
        if pending:
            stack.extend(pending)
        else:
            count(x)
            stack.pop()
    return memo[w.key]


def has_unique_reduced_word(w: GroupElement) -> bool:
    current = w
    while not current.is_identity():
        rd = current.right_descents()
        if len(rd) != 1:
            return False
        current = current.mul_right(next(iter(rd)))
    return True


def support(w: GroupElement) -> FrozenSet[str]:
    return frozenset(w.word())


def to_signed_permutation(system: CoxeterSystem, w: GroupElement) -> Tuple[int, ...]:
    """Ventana (w(1), ..., w(n+1)) de un elemento de tipo B; s_0 cambia el signo de 1."""
    if system.family != "B":
        raise PreconditionError(f"La notación de permutaciones con signo requiere tipo B, no {system.tag}")
    size = system.rank
    window = list(range(1, size + 1))
    for label in reversed(w.word()):
        k = int(label)
        for pos, value in enumerate(window):
            sign = -1 if value < 0 else 1
            if k == 0 and abs(value) == 1:
                window[pos] = -value
            elif k > 0 and abs(value) == k:
                window[pos] = sign * (k + 1)
            elif k > 0 and abs(value) == k + 1:
                window[pos] = sign * k
    return tuple(window)


def format_signed_permutation(window: Sequence[int]) -> str:
    return "(" + ", ".join(f"~{-v}" if v < 0 else str(v) for v in window) + ")"


@dataclass
class IndexedGroup:
    """Enumeración completa de W en BFS por longitud, con tablas de multiplicación simple."""

    system: CoxeterSystem
    elements: List[GroupElement] = field(default_factory=list)
    index: Dict[Tuple[int, ...], int] = field(default_factory=dict)
    lengths: List[int] = field(default_factory=list)
    left_table: List[Tuple[int, ...]] = field(default_factory=list)
    right_table: List[Tuple[int, ...]] = field(default_factory=list)

    def __len__(self):
        return len(self.elements)

    def position(self, w: GroupElement) -> int:
        return self.index[w.key]


def enumerate_group(system: CoxeterSystem, max_order: int = DEFAULT_GROUP_BUDGET) -> IndexedGroup:
    """Enumera W por BFS en longitud; rechaza grupos mayores que el presupuesto."""
    order = system.order
    if order > max_order:
        raise BudgetExceededError(order, max_order, "elementos de W")
    group = IndexedGroup(system)
    queue = deque([system.identity])
    group.index[system.identity.key] = 0
    group.elements.append(system.identity)
    while queue:
        w = queue.popleft()
        for s in range(system.rank):
            ws = w.mul_right(s)
            if ws.key not in group.index:
                group.index[ws.key] = len(group.elements)
                group.elements.append(ws)
                queue.append(ws)
    group.lengths = [w.length for w in group.elements]
    group.right_table = [tuple(group.index[w.mul_right(s).key] for s in range(system.rank)) for w in group.elements]
    group.left_table = [tuple(group.index[w.mul_left(s).key] for s in range(system.rank)) for w in group.elements]
    return group

#!/usr/bin/env python3
"""
🌱 Bigrassmannianos, elementos join-irreducibles, disectores y conjuntos JM, JM' y JM''.

Incluye los constructores explícitos de JI(i, j) en tipos B y D y las aplicaciones φ, φ⁺ y φ⁻.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from src.core.bruhat import BruhatOracle, descent_restricted, join, lower_covers, lower_interval, upper_covers
from src.core.coxeter import (
    LEFT,
    RIGHT,
    CoxeterSystem,
    GroupElement,
    build_system,
    descents,
    element_from_word,
    enumerate_group,
    is_reduced_word,
)
from src.utils.config import DEFAULT_DESCENT_BUDGET, DEFAULT_GROUP_BUDGET
from src.utils.errors import DerivationError, InvalidIndexError, PreconditionError, WordError

ZERO_PLUS = "0+"
ZERO_MINUS = "0-"


def _is_bigrassmannian_in(x: GroupElement, s: int, t: int) -> bool:
    return x.left_descents() == frozenset((s,)) and x.right_descents() == frozenset((t,))


def bigrassmannians(system: CoxeterSystem, s: str, t: str,
                    budget: int = DEFAULT_DESCENT_BUDGET) -> List[GroupElement]:
    """BG(s, t) = desc({s}, {t}) ∖ {e}."""
    si, ti = system.label_index[s], system.label_index[t]
    return [x for x in descent_restricted(system, [s], [t], budget) if _is_bigrassmannian_in(x, si, ti)]


def is_bigrassmannian(x: GroupElement) -> bool:
    return len(x.left_descents()) == 1 and len(x.right_descents()) == 1


def is_join_irreducible(x: GroupElement, oracle: Optional[BruhatOracle] = None,
                        budget: int = DEFAULT_DESCENT_BUDGET) -> bool:
    """x ≠ e y las coberturas inferiores de x tienen una cota superior que no está por encima de x.

    x es siempre una cota superior minimal de sus coberturas; basta con que no sea la única.
    """
    if x.is_identity() or not is_bigrassmannian(x):
        return False
    covers = lower_covers(x)
    if len(covers) == 1:
        return True
    oracle = oracle or BruhatOracle(x.system)
    result = join(covers, oracle=oracle, budget=budget)
    return not result.exists


def is_join_irreducible_definitional(x: GroupElement, elements: Sequence[GroupElement],
                                     oracle: Optional[BruhatOracle] = None) -> bool:
    """Existe y con x mínimo en P ∖ {z ≤ y}, buscando y en todo el grupo."""
    if x.is_identity():
        return False
    oracle = oracle or BruhatOracle(x.system)
    below = [z for z in lower_interval(x) if z != x]
    for y in elements:
        if oracle.leq(x, y):
            continue
        if all(oracle.leq(z, y) for z in below):
            return True
    return False


def codissector(x: GroupElement, elements: Sequence[GroupElement],
                oracle: Optional[BruhatOracle] = None) -> Optional[GroupElement]:
    """Máximo único de W ∖ {z ≥ x}, o None si no existe."""
    oracle = oracle or BruhatOracle(x.system)
    complement = {z for z in elements if not oracle.leq(x, z)}
    maxima = [z for z in complement if not any(c in complement for c in upper_covers(z))]
    return maxima[0] if len(maxima) == 1 else None


def is_dissector(x: GroupElement, elements: Optional[Sequence[GroupElement]] = None,
                 oracle: Optional[BruhatOracle] = None, max_order: int = DEFAULT_GROUP_BUDGET) -> bool:
    if elements is None:
        elements = enumerate_group(x.system, max_order).elements
    return codissector(x, elements, oracle) is not None


@lru_cache(maxsize=1024)
def join_irreducibles(system: CoxeterSystem, s: str, t: str,
                      budget: int = DEFAULT_DESCENT_BUDGET) -> Tuple[GroupElement, ...]:
    """JI(s, t) filtrando BG(s, t) con el criterio de coberturas."""
    oracle = BruhatOracle(system)
    return tuple(x for x in bigrassmannians(system, s, t, budget) if is_join_irreducible(x, oracle, budget))


def all_join_irreducibles(system: CoxeterSystem, budget: int = DEFAULT_DESCENT_BUDGET) -> List[GroupElement]:
    return [x for s in system.labels for t in system.labels for x in join_irreducibles(system, s, t, budget)]


def all_bigrassmannians(system: CoxeterSystem, budget: int = DEFAULT_DESCENT_BUDGET) -> List[GroupElement]:
    return [x for s in system.labels for t in system.labels for x in bigrassmannians(system, s, t, budget)]


def _maximal(elements: Iterable[GroupElement], oracle: BruhatOracle) -> List[GroupElement]:
    xs = sorted(set(elements), key=GroupElement.sort_key)
    return [x for x in xs if not any(y != x and y.length > x.length and oracle.leq(x, y) for y in xs)]


@dataclass
class JoinExpressionSets:
    """JM(w), JM'(w) y JM''(w) = JM ∩ JM'."""

    w: GroupElement
    jm: List[GroupElement]
    jm_prime: List[GroupElement]
    jm_double_prime: List[GroupElement]
    jm_join_ok: bool = True
    jm_double_prime_join_ok: Optional[bool] = None

    def restricted(self, s: str, t: str) -> List[GroupElement]:
        """ₛJMₜ(w)."""
        return [z for z in self.jm if descents(z, LEFT) == {s} and descents(z, RIGHT) == {t}]


def jm_sets(w: GroupElement, oracle: Optional[BruhatOracle] = None, budget: int = DEFAULT_DESCENT_BUDGET,
            check_joins: bool = True, include_prime: bool = True) -> JoinExpressionSets:
    """JM(w) y, si include_prime, también JM'(w) y JM''(w); sin include_prime solo se recorren LD(w)×RD(w)."""
    system = w.system
    oracle = oracle or BruhatOracle(system)
    left, right = descents(w, LEFT), descents(w, RIGHT)
    below_all: List[GroupElement] = []
    below_restricted: List[GroupElement] = []
    for s in system.labels:
        for t in system.labels:
            restricted = s in left and t in right
            if not (restricted or include_prime):
                continue
            for x in join_irreducibles(system, s, t, budget):
                if x.length <= w.length and oracle.leq(x, w):
                    below_all.append(x)
                    if restricted:
                        below_restricted.append(x)
    jm = _maximal(below_restricted, oracle)
    jm_prime = _maximal(below_all, oracle) if include_prime else []
    prime_set = set(jm_prime)
    jm_double_prime = [x for x in jm if x in prime_set]
    sets = JoinExpressionSets(w, jm, jm_prime, jm_double_prime)
    if check_joins:
        sets.jm_join_ok = join(jm, system=system, oracle=oracle, budget=budget).element == w
        if include_prime:
            result = join(jm_double_prime, system=system, oracle=oracle, budget=budget)
            sets.jm_double_prime_join_ok = result.exists and result.element == w
    return sets


# Constructores explícitos de tipo B_{n+1} (etiquetas 0..n, doble enlace 0=1)

def _path(a: int, b: int) -> List[int]:
    """s_{ab}: camino más corto de a a b en el diagrama de Dynkin."""
    return list(range(a, b - 1, -1)) if a >= b else list(range(a, b + 1))


def _t(a: int, b: int) -> List[int]:
    if a == 0 and b == 0:
        return [0, 1, 0]
    return list(range(a, -1, -1)) + list(range(1, b + 1))


def _concat(factors: Iterable[List[int]]) -> Tuple[str, ...]:
    return tuple(str(letter) for factor in factors for letter in factor)


B_KINDS = ("b", "oa", "ob", "x", "f")


def _b_word(n: int, i: int, j: int, kind: str, k: int) -> Tuple[str, ...]:
    if kind == "b":
        if i != 0 or not 1 <= k <= n + 1 - j:
            raise InvalidIndexError(f"b_k requiere i = 0 y 1 ≤ k ≤ {n + 1 - j}")
        return _concat([_path(m, 0) for m in range(k)] + [_path(k + m, 1 + m) for m in range(j)])
    if not 1 <= i <= j:
        raise InvalidIndexError(f"El tipo {kind} requiere 1 ≤ i ≤ j, no ({i},{j})")
    if kind == "oa":
        if not 1 <= k <= min(i, n + 1 - j):
            raise InvalidIndexError(f"O_A requiere 1 ≤ k ≤ {min(i, n + 1 - j)}")
        return _concat(_path(i + m, i - k + 1 + m) for m in range(k + j - i))
    if kind == "ob":
        if not i < k <= n + 1 - j:
            raise InvalidIndexError(f"O_B requiere {i} < k ≤ {n + 1 - j}")
        return _concat([_path(m, 0) for m in range(i, k)] + [_path(k + m, 1 + m) for m in range(j)])
    if kind == "x":
        if not 1 <= k <= n + 1 - j:
            raise InvalidIndexError(f"X requiere 1 ≤ k ≤ {n + 1 - j}")
        return _concat([_t(i + m, i) for m in range(k)] + [_path(i + k + m, i + 1 + m) for m in range(j - i)])
    if kind == "f":
        if not 1 <= k <= n - j:
            raise InvalidIndexError(f"f_k requiere 1 ≤ k ≤ {n - j}")
        return _concat([_t(i + m, i - 1) for m in range(k)] + [_path(i + k + m, i + m) for m in range(j - i + 1)])
    raise InvalidIndexError(f"Clase desconocida {kind!r}; use una de {', '.join(B_KINDS)}")


def _checked(system: CoxeterSystem, tokens: Sequence[str]) -> GroupElement:
    if not is_reduced_word(system, tokens):
        raise DerivationError(f"La expresión {' '.join(tokens)} no es reducida")
    return element_from_word(system, tokens)


def b_kind_for(i: int, k: int) -> str:
    """Clase O_A u O_B del elemento b_{∘,k} de JI(i, j)."""
    return "oa" if k <= i else "ob"


def typeB_word(n: int, i: int, j: int, kind: str, k: int) -> Tuple[str, ...]:
    """Expresión del constructor; para i > j es la expresión invertida de (j, i)."""
    if n < 1 or not (0 <= i <= n and 0 <= j <= n):
        raise InvalidIndexError(f"Índices ({i},{j}) fuera de rango para B{n + 1}")
    if i > j:
        return tuple(reversed(typeB_word(n, j, i, kind, k)))
    if i == 0 and kind != "b":
        raise InvalidIndexError("Con i = 0 o j = 0 solo existe la clase b")
    return _b_word(n, i, j, kind, k)


def typeB_ji(n: int, i: int, j: int, kind: str, k: int) -> GroupElement:
    """Elemento de B_{n+1} construido factor a factor; para i > j se invierte el de (j, i)."""
    tokens = typeB_word(n, i, j, kind, k)
    return _checked(build_system(f"B{n + 1}"), tokens)


@dataclass(frozen=True)
class CatalogEntry:
    kind: str
    k: int
    element: GroupElement


def typeB_catalog(n: int, i: int, j: int) -> List[CatalogEntry]:
    """JI(i, j) de B_{n+1} según los constructores; f_k se añade aparte (está en BG ∖ JI)."""
    low, high = min(i, j), max(i, j)
    if low == 0:
        return [CatalogEntry("b", k, typeB_ji(n, i, j, "b", k)) for k in range(1, n + 2 - high)]
    entries = [CatalogEntry(b_kind_for(low, k), k, typeB_ji(n, i, j, b_kind_for(low, k), k))
               for k in range(1, n + 2 - high)]
    entries += [CatalogEntry("x", k, typeB_ji(n, i, j, "x", k)) for k in range(1, n + 2 - high)]
    return entries


def typeB_f_elements(n: int, i: int, j: int) -> List[CatalogEntry]:
    """f_k = b∘,k+1 ∨ b×,k en BG(i, j) ∖ JI(i, j).

    Con min(i, j) = 1 se tiene b×,k < b∘,k+1 y f_k coincide con b∘,k+1; esos k no aportan elemento nuevo.
    """
    low, high = min(i, j), max(i, j)
    if low == 0:
        return []
    catalog = {entry.element for entry in typeB_catalog(n, i, j)}
    entries = [CatalogEntry("f", k, typeB_ji(n, i, j, "f", k)) for k in range(1, n + 1 - high)]
    return [entry for entry in entries if entry.element not in catalog]


def _o(k: int) -> Tuple[str, int]:
    return ("o", k)


def typeB_relations(n: int, i: int, j: int) -> List[Tuple[Tuple[str, int], Tuple[str, int], bool]]:
    """Relaciones generadoras (a, b, mata_zócalo) de JI(i, j); las claves son (clase, k) con 'o' = b_∘."""
    low, high = min(i, j), max(i, j)
    if low == 0:
        return [(("b", k), ("b", k + 1), True) for k in range(1, n + 1 - high)]
    relations = []
    relations += [(_o(k), _o(k + 1), True) for k in range(1, n - high + 1)]
    relations += [(("x", k), ("x", k + 1), True) for k in range(1, n - high + 1)]
    relations += [(_o(k), ("x", k), True) for k in range(1, n + 2 - high)]
    relations += [(("x", k), _o(k + low), None) for k in range(1, n + 2 - high - low)]
    return relations


def b_entry_key(entry: CatalogEntry) -> Tuple[str, int]:
    return ("o", entry.k) if entry.kind in ("oa", "ob") else (entry.kind, entry.k)


# Tipo D_{n+2} a partir de B_{n+1}

def _reject_alternating(tokens: Sequence[str]) -> None:
    for pos in range(len(tokens) - 3):
        if tuple(tokens[pos:pos + 4]) == ("0", "1", "0", "1"):
            raise PreconditionError(f"La palabra {' '.join(tokens)} contiene 0101; φ± no está definida")


def phi(tokens: Sequence[str]) -> Tuple[str, ...]:
    """0 ↦ 0+ 0-, el resto igual."""
    out: List[str] = []
    for token in tokens:
        out.extend((ZERO_PLUS, ZERO_MINUS) if token == "0" else (token,))
    return tuple(out)


def phi_signed(tokens: Sequence[str], first: str = ZERO_PLUS) -> Tuple[str, ...]:
    """Sustituye los 0 alternando 0+ y 0-, empezando por `first`."""
    if first not in (ZERO_PLUS, ZERO_MINUS):
        raise WordError(first, "φ± solo admite 0+ o 0-")
    _reject_alternating(tokens)
    out = []
    current = first
    for token in tokens:
        if token == "0":
            out.append(current)
            current = ZERO_MINUS if current == ZERO_PLUS else ZERO_PLUS
        else:
            out.append(token)
    return tuple(out)


def phi_maps(tokens: Sequence[str]) -> Dict[str, Tuple[str, ...]]:
    return {"phi": phi(tokens), "phi+": phi_signed(tokens, ZERO_PLUS), "phi-": phi_signed(tokens, ZERO_MINUS)}


def _b_tokens(n: int, i: int, j: int, kind: str, k: int) -> Tuple[str, ...]:
    return typeB_word(n, i, j, kind, k)


def _d_index(label: str) -> int:
    return 0 if label in (ZERO_PLUS, ZERO_MINUS) else int(label)


D_KINDS = ("d", "oa", "d+", "d-", "x", "g")


def typeD_ji(n: int, i: str, j: str, kind: str, k: int) -> GroupElement:
    """Elemento de D_{n+2}: d_k = φ±(b_k) en la fila 0±, φ(b_∘), φ±(b_∘), φ(b_×) y g_k = φ(f_k)."""
    system = build_system(f"D{n + 2}")
    for label in (i, j):
        if label not in system.label_index:
            raise InvalidIndexError(f"Etiqueta {label!r} no válida en D{n + 2}")
    i_zero, j_zero = i in (ZERO_PLUS, ZERO_MINUS), j in (ZERO_PLUS, ZERO_MINUS)
    if (j_zero and not i_zero) or (not i_zero and not j_zero and int(i) > int(j)):
        return typeD_ji(n, j, i, kind, k).inverse()
    if i_zero:
        if kind != "d":
            raise InvalidIndexError("En la fila 0± solo existe la clase d")
        target_j = 0 if j_zero else int(j)
        tokens = phi_signed(_b_tokens(n, 0, target_j, "b", k), i)
        element = _checked(system, tokens)
        if j_zero and descents(element, RIGHT) != {j}:
            raise InvalidIndexError(f"d_{k} no pertenece a JI({i},{j})")
        return element
    a, b = int(i), int(j)
    if kind == "oa":
        return _checked(system, phi(_b_tokens(n, a, b, "oa", k)))
    if kind in ("d+", "d-"):
        tokens = phi_signed(_b_tokens(n, a, b, "ob", k), ZERO_PLUS if kind == "d+" else ZERO_MINUS)
        return _checked(system, tokens)
    if kind == "x":
        return _checked(system, phi(_b_tokens(n, a, b, "x", k)))
    if kind == "g":
        return _checked(system, phi(_b_tokens(n, a, b, "f", k)))
    raise InvalidIndexError(f"Clase desconocida {kind!r}; use una de {', '.join(D_KINDS)}")


def typeD_catalog(n: int, i: str, j: str) -> List[CatalogEntry]:
    i_zero, j_zero = i in (ZERO_PLUS, ZERO_MINUS), j in (ZERO_PLUS, ZERO_MINUS)
    if i_zero or j_zero:
        if i_zero and j_zero:
            # JI(0±, 0±) alterna entre las dos columnas según la paridad de k
            entries = []
            for k in range(1, n + 2):
                tokens = phi_signed(_b_tokens(n, 0, 0, "b", k), i)
                element = _checked(build_system(f"D{n + 2}"), tokens)
                if descents(element, RIGHT) == {j}:
                    entries.append(CatalogEntry("d", k, element))
            return entries
        high = _d_index(j if i_zero else i)
        return [CatalogEntry("d", k, typeD_ji(n, i, j, "d", k)) for k in range(1, n + 2 - high)]
    low, high = sorted((int(i), int(j)))
    entries = [CatalogEntry("oa", k, typeD_ji(n, i, j, "oa", k)) for k in range(1, min(low, n + 1 - high) + 1)]
    for k in range(low + 1, n + 2 - high):
        entries.append(CatalogEntry("d+", k, typeD_ji(n, i, j, "d+", k)))
        entries.append(CatalogEntry("d-", k, typeD_ji(n, i, j, "d-", k)))
    entries += [CatalogEntry("x", k, typeD_ji(n, i, j, "x", k)) for k in range(1, n + 2 - high)]
    return entries


def typeD_g_elements(n: int, i: str, j: str) -> List[CatalogEntry]:
    if i in (ZERO_PLUS, ZERO_MINUS) or j in (ZERO_PLUS, ZERO_MINUS):
        return []
    high = max(int(i), int(j))
    catalog = {entry.element for entry in typeD_catalog(n, i, j)}
    entries = [CatalogEntry("g", k, typeD_ji(n, i, j, "g", k)) for k in range(1, n + 1 - high)]
    return [entry for entry in entries if entry.element not in catalog]


def typeD_relations(n: int, i: str, j: str) -> List[Tuple[Tuple[str, int], Tuple[str, int], Optional[bool]]]:
    i_zero, j_zero = i in (ZERO_PLUS, ZERO_MINUS), j in (ZERO_PLUS, ZERO_MINUS)
    if i_zero or j_zero:
        ks = [entry.k for entry in typeD_catalog(n, i, j)]
        return [(("d", a), ("d", b), True) for a, b in zip(ks, ks[1:])]
    low, high = sorted((int(i), int(j)))
    top = n + 1 - high
    relations = []
    relations += [(("oa", k), ("oa", k + 1), True) for k in range(1, min(low - 1, n - high) + 1)]
    if low <= n - high:
        relations += [(("oa", low), ("d+", low + 1), True), (("oa", low), ("d-", low + 1), True)]
    for k in range(low + 1, n - high + 1):
        for a in ("d+", "d-"):
            for b in ("d+", "d-"):
                relations.append(((a, k), (b, k + 1), True))
    relations += [(("x", k), ("x", k + 1), True) for k in range(1, n - high + 1)]
    relations += [(("oa", k), ("x", k), True) for k in range(1, min(low, top) + 1)]
    for k in range(low + 1, top + 1):
        relations += [(("d+", k), ("x", k), True), (("d-", k), ("x", k), True)]
    for k in range(1, n - high - low + 1):
        relations += [(("x", k), ("d+", k + low + 1), None), (("x", k), ("d-", k + low + 1), None)]
    return relations


def d_entry_key(entry: CatalogEntry) -> Tuple[str, int]:
    return (entry.kind, entry.k)


# Posets JI(s, t)

@dataclass
class JIPoset:
    """JI(s, t) (y opcionalmente BG(s, t)) como grafo de Hasse de networkx."""

    system: CoxeterSystem
    s: str
    t: str
    graph: nx.DiGraph
    elements: List[GroupElement] = field(default_factory=list)

    def node(self, x: GroupElement) -> Dict:
        return self.graph.nodes[x]

    def edges(self) -> List[Tuple[GroupElement, GroupElement]]:
        return sorted(self.graph.edges, key=lambda e: (e[0].sort_key(), e[1].sort_key()))

    def socle_killing(self, x: GroupElement, y: GroupElement) -> Optional[bool]:
        return self.graph.edges[x, y].get("socle_killing")


def classify(system: CoxeterSystem, s: str, t: str) -> Dict[GroupElement, Tuple[str, int]]:
    """Clase y k de cada elemento según los constructores de tipo B o D."""
    try:
        if system.family == "B":
            n = system.rank - 1
            catalog = typeB_catalog(n, int(s), int(t)) + typeB_f_elements(n, int(s), int(t))
        elif system.family == "D":
            n = system.rank - 2
            catalog = typeD_catalog(n, s, t) + typeD_g_elements(n, s, t)
        else:
            return {}
    except (InvalidIndexError, DerivationError):
        return {}
    kinds: Dict[GroupElement, Tuple[str, int]] = {}
    for entry in catalog:
        kinds.setdefault(entry.element, (entry.kind, entry.k))
    return kinds


def hasse_graph(elements: Sequence[GroupElement], oracle: BruhatOracle) -> nx.DiGraph:
    order = nx.DiGraph()
    order.add_nodes_from(elements)
    for x in elements:
        for y in elements:
            if x.length < y.length and oracle.leq(x, y):
                order.add_edge(x, y)
    return nx.transitive_reduction(order)


def build_ji_poset(system: CoxeterSystem, s: str, t: str, include_bg: bool = False,
                   budget: int = DEFAULT_DESCENT_BUDGET) -> JIPoset:
    oracle = BruhatOracle(system)
    members = list(bigrassmannians(system, s, t, budget) if include_bg else join_irreducibles(system, s, t, budget))
    ji = set(join_irreducibles(system, s, t, budget))
    hasse = hasse_graph(members, oracle)
    labels = classify(system, s, t)
    for x in members:
        kind, k = labels.get(x, (None, None))
        hasse.nodes[x].update(word=x.text(), length=x.length, kind=kind, k=k, join_irreducible=x in ji)
    for edge in hasse.edges:
        hasse.edges[edge]["socle_killing"] = None
    return JIPoset(system, s, t, hasse, sorted(members, key=GroupElement.sort_key))


@dataclass
class GeneratedRelationsReport:
    s: str
    t: str
    membership_ok: bool
    missing: List[GroupElement]
    extra: List[GroupElement]
    order_ok: bool
    differences: List[Tuple[GroupElement, GroupElement]]

    @property
    def passed(self) -> bool:
        return self.membership_ok and self.order_ok


def verify_generated_relations(system: CoxeterSystem, s: str, t: str,
                               budget: int = DEFAULT_DESCENT_BUDGET) -> GeneratedRelationsReport:
    """Compara la clausura transitiva de las relaciones generadoras con el orden de Bruhat en JI(s, t)."""
    if system.family == "B":
        n = system.rank - 1
        entries = typeB_catalog(n, int(s), int(t))
        keyed = {b_entry_key(e): e.element for e in entries}
        relations = typeB_relations(n, int(s), int(t))
    elif system.family == "D":
        n = system.rank - 2
        entries = typeD_catalog(n, s, t)
        keyed = {d_entry_key(e): e.element for e in entries}
        relations = typeD_relations(n, s, t)
    else:
        raise PreconditionError(f"No hay relaciones generadoras para {system.tag}")
    brute = set(join_irreducibles(system, s, t, budget))
    constructed = {e.element for e in entries}
    missing = sorted(brute - constructed, key=GroupElement.sort_key)
    extra = sorted(constructed - brute, key=GroupElement.sort_key)

    generated = nx.DiGraph()
    generated.add_nodes_from(constructed)
    for a, b, _ in relations:
        if a in keyed and b in keyed:
            generated.add_edge(keyed[a], keyed[b])
    closure = nx.transitive_closure_dag(generated)
    oracle = BruhatOracle(system)
    differences = []
    for x in constructed:
        for y in constructed:
            if x == y:
                continue
            if closure.has_edge(x, y) != oracle.leq(x, y):
                differences.append((x, y))
    return GeneratedRelationsReport(s, t, not missing and not extra, missing, extra, not differences,
                                    sorted(differences, key=lambda p: (p[0].sort_key(), p[1].sort_key())))


@dataclass
class FigureComparison:
    cell: Tuple[str, str]
    missing_nodes: List[str]
    extra_nodes: List[str]
    missing_edges: List[Tuple[str, str]]
    extra_edges: List[Tuple[str, str]]
    flag_mismatches: List[Tuple[str, str]]

    @property
    def passed(self) -> bool:
        return not (self.missing_nodes or self.extra_nodes or self.missing_edges
                    or self.extra_edges or self.flag_mismatches)


def compare_with_figure(poset: JIPoset, figure: Dict, killing=None) -> FigureComparison:
    """Compara nodos, aristas de Hasse y flechas sólidas/discontinuas con una transcripción."""
    system = poset.system
    by_word = {word: element_from_word(system, word) for word in figure["nodes"]}
    drawn = set(by_word.values())
    computed = set(poset.graph.nodes)
    text = {x: x.text() for x in drawn | computed}
    missing_nodes = sorted(text[x] for x in computed - drawn)
    extra_nodes = sorted(text[x] for x in drawn - computed)
    figure_edges = {(by_word[a], by_word[b]): solid for a, b, solid in figure["edges"]}
    computed_edges = set(poset.graph.edges)
    missing_edges = sorted((text[a], text[b]) for a, b in computed_edges - set(figure_edges))
    extra_edges = sorted((text[a], text[b]) for a, b in set(figure_edges) - computed_edges)
    mismatches = []
    for (a, b), solid in figure_edges.items():
        if (a, b) in computed_edges:
            flag = poset.socle_killing(a, b) if killing is None else killing(a, b)
            if flag is not None and flag != solid:
                mismatches.append((text[a], text[b]))
    return FigureComparison((poset.s, poset.t), missing_nodes, extra_nodes, missing_edges, extra_edges,
                            sorted(mismatches))


def longest_chain(elements: Sequence[GroupElement], oracle: BruhatOracle) -> List[GroupElement]:
    """Cadena más larga en el orden inducido; desempate por palabra canónica."""
    graph = hasse_graph(sorted(elements, key=GroupElement.sort_key), oracle)
    if graph.number_of_nodes() == 0:
        return []
    return nx.dag_longest_path(graph, topo_order=sorted(graph.nodes, key=GroupElement.sort_key))

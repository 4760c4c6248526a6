#!/usr/bin/env python3
"""
🌱 Libros de comprobación de los ejemplos y contraejemplos publicados (joins, JM, disectores, zócalos).
"""

from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Set

from src.core.bruhat import BruhatOracle, join, minimal_upper_bounds
from src.core.cells import build_atlas
from src.core.coxeter import CoxeterSystem, GroupElement, build_system, element_from_word, enumerate_group
from src.core.fixtures import examples_fixture
from src.core.hecke import IntervalKL, mult_abs
from src.core.ji_catalog import (
    bigrassmannians,
    hasse_graph,
    is_bigrassmannian,
    is_dissector,
    is_join_irreducible,
    jm_sets,
)
from src.core.laurent import LaurentPoly
from src.core.socle import is_socle_killing
from src.utils.config import DEFAULT_GROUP_BUDGET, STATUS_DISCREPANCY, STATUS_FAIL, STATUS_NOT_ATTEMPTED, STATUS_PASS


@dataclass
class LedgerItem:
    item_id: str
    status: str
    detail: str = ""


@dataclass
class Ledger:
    name: str
    items: List[LedgerItem] = field(default_factory=list)

    def check(self, item_id: str, ok: bool, detail: str = "") -> bool:
        self.items.append(LedgerItem(f"{self.name}/{item_id}", STATUS_PASS if ok else STATUS_FAIL, detail))
        return ok

    def not_attempted(self, item_id: str, detail: str) -> None:
        self.items.append(LedgerItem(f"{self.name}/{item_id}", STATUS_NOT_ATTEMPTED, detail))

    def published(self, item_id: str, holds: bool, detail: str = "") -> bool:
        """Afirmación publicada: pass si el cálculo la confirma, discrepancia documentada si no."""
        self.items.append(LedgerItem(f"{self.name}/{item_id}", STATUS_PASS if holds else STATUS_DISCREPANCY, detail))
        return holds

    @property
    def passed(self) -> bool:
        return all(item.status != STATUS_FAIL for item in self.items)


def _elements(system: CoxeterSystem, words: Iterable[str]) -> Set[GroupElement]:
    return {element_from_word(system, word) for word in words}


def _fmt(elements: Iterable[GroupElement]) -> str:
    return "{" + ", ".join(x.text() for x in sorted(elements, key=GroupElement.sort_key)) + "}"


def _compare(ledger: Ledger, item_id: str, computed: Iterable[GroupElement], expected: Set[GroupElement]) -> bool:
    computed = set(computed)
    return ledger.check(item_id, computed == expected, f"calculado {_fmt(computed)}, esperado {_fmt(expected)}")


def d4_remark(stretch: bool = False) -> Ledger:
    """BG(1,1) de D4, el bigrassmanniano que no es join-irreducible y su JM."""
    data = examples_fixture("d4-remark")
    system = build_system(data["type"])
    oracle = BruhatOracle(system)
    ledger = Ledger("d4-remark")
    bg = data["bg"]
    members = bigrassmannians(system, bg["s"], bg["t"])
    _compare(ledger, "bg-members", members, _elements(system, bg["members"]))
    edges = {(element_from_word(system, a), element_from_word(system, b)) for a, b in data["bg_edges"]}
    computed_edges = set(hasse_graph(members, oracle).edges)
    ledger.check("bg-edges", computed_edges == edges, f"{len(computed_edges)} aristas de Hasse, esperadas {len(edges)}")

    w = element_from_word(system, data["w"])
    ledger.check("w-not-ji", is_bigrassmannian(w) and not is_join_irreducible(w, oracle),
                 f"{w.text()} bigrassmanniano y no join-irreducible")
    expected = _elements(system, data["jm"])
    sets = jm_sets(w, oracle)
    _compare(ledger, "jm", sets.jm, expected)
    _compare(ledger, "jm-prime", sets.jm_prime, expected)
    jm = sorted(expected, key=GroupElement.sort_key)
    pairs_ok = all(join([a, b], oracle=oracle).element == w for i, a in enumerate(jm) for b in jm[i + 1:])
    ledger.check("pairwise-joins", pairs_ok, f"cada par de JM(w) tiene join {w.text()}")
    elements = enumerate_group(system).elements
    dissectors = [x.text() for x in jm if is_dissector(x, elements, oracle)]
    ledger.check("no-dissector", not dissectors, f"disectores: {dissectors or 'ninguno'}")

    x = element_from_word(system, data["x"])
    p = IntervalKL(system).polynomial(system.identity, x)
    ledger.check("p-e-x", p == LaurentPoly.parse(data["p_e_x"]), f"p_e,x = {p}")
    return ledger


def _jm_example(name: str) -> Ledger:
    data = examples_fixture(name)
    system = build_system(data["type"])
    ledger = Ledger(name)
    w = element_from_word(system, data["w"])
    sets = jm_sets(w)
    jm, jm_prime = _elements(system, data["jm"]), _elements(system, data["jm_prime"])
    _compare(ledger, "jm", sets.jm, jm)
    _compare(ledger, "jm-prime", sets.jm_prime, jm_prime)
    ledger.check("join-jm", sets.jm_join_ok, f"⋁JM(w) = {w.text()}")
    if "jm_double_prime_size" in data:
        ledger.check("jm-not-subset", not jm <= jm_prime, "JM(w) ⊄ JM'(w)")
        size = len(sets.jm_double_prime)
        ledger.check("jm-double-prime-size", size == data["jm_double_prime_size"], f"|JM''(w)| = {size}")
        ledger.check("join-jm-double-prime", bool(sets.jm_double_prime_join_ok), "⋁JM''(w) = w")
    return ledger


def d4_jm(stretch: bool = False) -> Ledger:
    return _jm_example("d4-jm")


def f4_jm(stretch: bool = False) -> Ledger:
    return _jm_example("f4-jm")


def d6_jm(stretch: bool = False) -> Ledger:
    return _jm_example("d6-jm")


def f4_soclesum(stretch: bool = False) -> Ledger:
    """JM(w) = {x, y, z}, w = x ⋁ y y los elementos auxiliares x' < x, y' < y.

    El JM''(w) publicado es {x, y}; el calculado también contiene z, porque z ∈ JM'(w).
    """
    data = examples_fixture("f4-soclesum")
    system = build_system(data["type"])
    oracle = BruhatOracle(system)
    ledger = Ledger("f4-soclesum")
    x, y, z, w = (element_from_word(system, data[key]) for key in ("x", "y", "z", "w"))
    x1, y1 = element_from_word(system, data["x_prime"]), element_from_word(system, data["y_prime"])
    ledger.check("ji", all(is_join_irreducible(e, oracle) for e in (x, y, z, x1, y1)), "x, y, z, x', y' ∈ JI")
    sets = jm_sets(w, oracle)
    _compare(ledger, "jm", sets.jm, {x, y, z})
    computed = set(sets.jm_double_prime)
    _compare(ledger, "jm-double-prime", computed, _elements(system, data["jm_double_prime"]))
    published = _elements(system, data["jm_double_prime_published"])
    ledger.published("jm-double-prime-published", computed == published,
                     f"publicado {_fmt(published)}, calculado {_fmt(computed)}; "
                     f"z ∈ JM'(w): {z in set(sets.jm_prime)}")
    ledger.check("join-xyz", join([x, y, z], oracle=oracle).element == w, "w = x ⋁ y ⋁ z")
    ledger.check("join-xy", join([x, y], oracle=oracle).element == w, "w = x ⋁ y")
    label = system.labels
    ledger.check("primes-in-ji22", all(
        label[next(iter(e.left_descents()))] == "2" and label[next(iter(e.right_descents()))] == "2"
        for e in (x1, y1)), "x', y' ∈ JI(2,2)")
    ledger.check("x-prime-killing", oracle.lt(x1, x) and is_socle_killing(x1, x, oracle), "x' < x mata el zócalo")
    ledger.check("y-prime-killing", oracle.lt(y1, y) and is_socle_killing(y1, y, oracle), "y' < y mata el zócalo")
    result = join([x1, y1], oracle=oracle)
    ledger.check("join-primes-above-z", result.exists and oracle.lt(z, result.element),
                 f"x' ⋁ y' = {result.element.text() if result.exists else 'no existe'} > z")
    return ledger


def f4_nojoin(stretch: bool = False) -> Ledger:
    """Dos elementos de JI(2,2) sin join y sus dos cotas superiores minimales.

    La observación de que ambas cotas están en BG(2,2) ∖ JI(2,2) no se cumple: la segunda es join-irreducible.
    """
    data = examples_fixture("f4-nojoin")
    system = build_system(data["type"])
    oracle = BruhatOracle(system)
    ledger = Ledger("f4-nojoin")
    bounded = _elements(system, data["bounded"])
    expected = _elements(system, data["minimal_upper_bounds"])
    bounds = minimal_upper_bounds(sorted(bounded, key=GroupElement.sort_key), oracle)
    _compare(ledger, "minimal-upper-bounds", bounds, expected)
    ledger.check("no-join", join(sorted(bounded, key=GroupElement.sort_key), oracle=oracle).exists is False,
                 "el join no existe")
    s22 = system.label_index["2"]
    first, second = (element_from_word(system, word) for word in data["minimal_upper_bounds"])
    ledger.check("second-bound-in-ji22",
                 second.left_descents() == {s22} == second.right_descents() and is_join_irreducible(second, oracle),
                 f"{second.text()} ∈ JI(2,2)")
    ledger.check("first-bound-not-ji", not is_join_irreducible(first, oracle), f"{first.text()} ∉ JI")
    outside_ji = [b.text() for b in (first, second) if not is_join_irreducible(b, oracle)]
    ledger.published("bounds-in-bg-minus-ji", len(outside_ji) == 2,
                     f"fuera de JI: {outside_ji or 'ninguna'}")
    third = element_from_word(system, data["third"])
    _compare(ledger, "jm-of-bound", jm_sets(first, oracle, include_prime=False).jm, bounded | {third})
    return ledger


def e6_join(stretch: bool = False) -> Ledger:
    """Join de seis elementos de JI(4,4) en E6 y el argumento de grado 31."""
    data = examples_fixture("e6-join")
    system = build_system(data["type"])
    oracle = BruhatOracle(system)
    ledger = Ledger("e6-join")
    six = [element_from_word(system, word) for word in data["six"]]
    ledger.check("six-ji", all(is_join_irreducible(e, oracle) for e in six), "los seis elementos son join-irreducibles")
    result = join(six, oracle=oracle)
    if not ledger.check("b-exists", result.exists, f"b = {result.element.text() if result.exists else 'no existe'}"):
        return ledger
    b = result.element
    _compare(ledger, "jm-b", jm_sets(b, oracle, check_joins=False, include_prime=False).jm, set(six))
    x, y = element_from_word(system, data["x"]), element_from_word(system, data["y"])
    ledger.check("length-nine", x.length == y.length == 9, f"ℓ(x) = {x.length}, ℓ(y) = {y.length}")
    ledger.check("b-join-xy", join([x, y], oracle=oracle).element == b, "b = x ⋁ y")

    top = element_from_word(system, data["degree31"])
    killers = [element_from_word(system, word) for word in data["killers"]]
    ledger.check("top-ji", is_join_irreducible(top, oracle), f"{top.text()} ∈ JI(4,4)")
    ledger.check("killers", all(oracle.lt(k, top) and is_socle_killing(k, top, oracle) for k in killers),
                 "x₁ … x₄ < x matan el zócalo")
    j12, j14 = join(killers[:2], oracle=oracle), join([killers[0], killers[3]], oracle=oracle)
    ledger.check("distinct-joins", j12.exists and j14.exists and j12.element != j14.element,
                 "x₁ ⋁ x₂ y x₁ ⋁ x₄ existen y son distintos")

    if not stretch:
        ledger.not_attempted("kl-b-29", "requiere --stretch")
        ledger.not_attempted("kl-xy-29", "requiere --stretch")
        return ledger
    atlas = build_atlas(system)
    w44 = atlas.member(("4", "4"), "w")
    engine = IntervalKL(system)
    ledger.check("kl-b-29", mult_abs(b, w44, -29, engine) == 0, "[Δ_b⟨-ℓ(b)⟩ : L⟨-29⟩] = 0")
    both = min(mult_abs(x, w44, -29, engine), mult_abs(y, w44, -29, engine))
    ledger.check("kl-xy-29", both == 1, f"mín de [Δ_x : L⟨-29⟩] y [Δ_y : L⟨-29⟩] = {both}")
    return ledger


LEDGERS: Dict[str, Callable[[bool], Ledger]] = {
    "d4-remark": d4_remark,
    "d4-jm": d4_jm,
    "f4-jm": f4_jm,
    "d6-jm": d6_jm,
    "f4-soclesum": f4_soclesum,
    "f4-nojoin": f4_nojoin,
    "e6-join": e6_join,
}


def jm_double_prime_search(system: CoxeterSystem, max_order: int = DEFAULT_GROUP_BUDGET,
                           oracle: Optional[BruhatOracle] = None) -> List[GroupElement]:
    """Elementos w con ⋁JM''(w) ≠ w; solo dentro del presupuesto, sin afirmar nada en general."""
    oracle = oracle or BruhatOracle(system)
    failures = []
    for w in enumerate_group(system, max_order).elements:
        sets = jm_sets(w, oracle)
        if not sets.jm_double_prime_join_ok:
            failures.append(w)
    return failures

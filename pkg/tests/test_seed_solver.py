import pytest

from src.core.cells import assignment_from_table, build_atlas, propagate_from_seed
from src.core.coxeter import build_system
from src.core.fixtures import kl_table_fixture
from src.core.laurent import LaurentPoly, LinearExpr
from src.core.seed_solver import (
    E8_CONDITIONS,
    E8_SEED_CELL,
    SEED_CELLS,
    alternating_seed_sum,
    derive_seed,
    e8_intermediate_identities,
    e8_seed_checks,
    e8_seed_derivation,
    e8_seed_solver,
    parametrised_seed,
)
from src.utils.errors import PreconditionError

E8_SEED = LaurentPoly.parse("v^113+v^107+v^103+v^97")


def _published(tag):
    atlas = build_atlas(build_system(tag))
    return atlas, assignment_from_table(atlas, kl_table_fixture(tag)["entries"])


def test_parametrised_seed_respects_parity():
    seed, names = parametrised_seed(9, 5)
    assert names == ["c7", "c5"]
    assert seed.coefficient(9) == 1
    assert seed.coefficient(7) == LinearExpr.variable("c7")
    assert seed.coefficient(8) == 0
    assert seed.evaluate({"c7": 0, "c5": 2}) == LaurentPoly({9: 1, 5: 2})


def test_alternating_sum_of_the_e8_seed():
    assert alternating_seed_sum(E8_SEED, 113) == 2
    assert alternating_seed_sum(LaurentPoly.monomial(113), 113) == 0


@pytest.fixture(scope="module")
def e8_derivation():
    return e8_seed_derivation()


def test_e8_divisibility_is_the_alternating_relation(e8_derivation):
    alternating = LinearExpr({"a1": 1, "a2": -1, "a3": 1, "a4": -1, "a5": 1, "a6": -1, "a7": 1}, -2)
    assert len(e8_derivation.relations) == 1
    assert e8_derivation.relation in (alternating, -alternating)


def test_e8_reparametrisation(e8_derivation):
    assert e8_derivation.b_of_a["b1"] == LinearExpr({"a1": 1}, -1)
    assert e8_derivation.b_of_a["b2"] == LinearExpr({"a1": -1, "a2": 1}, 1)
    assert e8_derivation.a_of_b["a1"] == LinearExpr({"b1": 1}, 1)
    assert e8_derivation.a_of_b["a4"] == LinearExpr({"b3": 1, "b4": 1})
    assert e8_derivation.a_of_b["a7"] == LinearExpr({"b6": 1}, 1)


@pytest.mark.parametrize("exponent", [exponent for exponent, _, _ in E8_CONDITIONS])
def test_e8_inequality_is_derived_and_tight(e8_derivation, exponent):
    check = e8_derivation.check(exponent)
    assert check.derived == check.b_form
    assert check.equivalent
    assert check.holds
    assert check.tight


def test_e8_coefficients_are_forced(e8_derivation):
    assert e8_derivation.extra == []
    assert e8_derivation.solutions == [{"a1": 0, "a2": 0, "a3": 1, "a4": 0, "a5": 1, "a6": 0, "a7": 0}]
    assert e8_derivation.polynomial() == E8_SEED
    assert e8_derivation.problems() == []


def test_e8_seed_checks_name_the_broken_inequalities(e8_derivation):
    assert e8_seed_checks(E8_SEED, e8_derivation) == []
    problems = e8_seed_checks(LaurentPoly.parse("v^113+v^111+v^103+v^97"), e8_derivation)
    broken = sorted(p.split("]")[0] for p in problems if "falla" in p)
    assert broken == ["[v^101", "[v^113", "[v^115"]
    assert not any("divisible" in p for p in problems)
    problems = e8_seed_checks(LaurentPoly.parse("v^113+v^111+v^97"), e8_derivation)
    assert any("divisible" in p for p in problems)
    assert e8_seed_checks(LaurentPoly.parse("v^112+v^97"), e8_derivation) != []


def test_seed_cell_must_be_a_singleton(systems):
    atlas = build_atlas(systems["F4"])
    with pytest.raises(PreconditionError):
        derive_seed(atlas, ("1", "1"))


def test_e8_solver_requires_e8(systems):
    with pytest.raises(PreconditionError):
        e8_seed_solver(build_atlas(systems["F4"]))


@pytest.mark.parametrize("tag, seed", [("E6", "v^35+v^29"), ("E7", "v^57+v^51")])
def test_propagation_regenerates_published_tables(tag, seed):
    atlas, published = _published(tag)
    element = atlas.member(SEED_CELLS[tag], "w")
    result = propagate_from_seed(atlas, {element: LaurentPoly.parse(seed)})
    assert result.violations == []
    for y, poly in result.values.items():
        assert poly == published.values[y], y.text()


@pytest.mark.parametrize("tag, cell, entry", [
    ("E6", ("4", "4"), "v^35+2v^33+3v^31+3v^29+2v^27+v^25"),
    ("E7", ("7", "7"), "v^62+v^54+v^46"),
])
def test_published_diagonal_entries(tag, cell, entry):
    _, published = _published(tag)
    assert entry in [str(p) for p in published.cell_polys(cell)]


@pytest.mark.slow
def test_e6_seed_window_admits_the_published_seed():
    atlas, published = _published("E6")
    derivation = derive_seed(atlas, SEED_CELLS["E6"])
    assert not derivation.truncated
    assert published.values[derivation.element] in derivation.solutions


@pytest.mark.slow
def test_e8_seed_is_unique_and_regenerates_the_table():
    atlas, published = _published("E8")
    seed = e8_seed_solver(atlas)
    assert seed == E8_SEED
    result = propagate_from_seed(atlas, {atlas.member(E8_SEED_CELL, "w"): seed})
    for y, poly in result.values.items():
        assert poly == published.values[y]
    assert e8_intermediate_identities(atlas, published.values) == []
    p88 = published.values[atlas.member(("8", "8"), "w")]
    assert p88 == LaurentPoly.parse("v^119+v^109+v^101+v^91")

import itertools

import pytest

from src.core.bruhat import (
    BruhatOracle,
    bruhat_leq,
    descent_restricted,
    join,
    lower_covers,
    lower_interval,
    minimal_upper_bounds,
    subword_leq,
    upper_covers,
)
from src.core.coxeter import build_system, element_from_word, enumerate_group
from src.utils.errors import BudgetExceededError, PreconditionError


def _w(system, word):
    return element_from_word(system, word)


@pytest.mark.parametrize("tag", ["A3", "B3", "G2"])
def test_lifting_agrees_with_subword_property(systems, tag):
    system = systems[tag]
    elements = enumerate_group(system).elements
    oracle = BruhatOracle(system)
    for x, w in itertools.product(elements, repeat=2):
        assert oracle.leq(x, w) == subword_leq(x, w)


def test_identity_and_top_are_bounds(systems):
    for system in systems.values():
        if system.tag == "F4":
            continue
        for x in enumerate_group(system).elements:
            assert bruhat_leq(system.identity, x)
            assert bruhat_leq(x, system.w0)


def test_covers_in_rank_two(systems):
    a2 = systems["A2"]
    assert {x.text() for x in lower_covers(a2.w0)} == {"1 2", "2 1"}
    assert {x.text() for x in upper_covers(a2.identity)} == {"1", "2"}
    assert upper_covers(a2.w0) == []


def test_cover_counts_match_interval_ranks(systems):
    system = systems["B3"]
    oracle = BruhatOracle(system)
    for w in enumerate_group(system).elements:
        covers = lower_covers(w)
        for c in covers:
            assert c.length == w.length - 1
            assert oracle.lt(c, w)


def test_lower_interval_and_budget(systems):
    a3 = systems["A3"]
    assert len(lower_interval(a3.w0)) == 24
    with pytest.raises(BudgetExceededError):
        lower_interval(a3.w0, budget=10)


def test_descent_restricted_sets(systems):
    a2 = systems["A2"]
    restricted = descent_restricted(a2, ["1"], ["2"])
    assert [x.text() for x in restricted] == ["", "1 2"]
    assert a2.identity in restricted
    assert _w(a2, "2") not in restricted
    full = descent_restricted(a2, a2.labels, a2.labels)
    assert len(full) == 6


def test_join_of_simple_reflections_in_a2(systems):
    a2 = systems["A2"]
    result = join([_w(a2, "1"), _w(a2, "2")])
    assert not result.exists
    assert {x.text() for x in result.bounds} == {"1 2", "2 1"}


def test_join_of_comparable_elements(systems):
    a3 = systems["A3"]
    x, w = _w(a3, "1"), _w(a3, "1 2 3")
    result = join([x, w])
    assert result.exists
    assert result.element == w


def test_join_of_empty_set(systems):
    b2 = systems["B2"]
    assert join([], system=b2).element == b2.identity
    with pytest.raises(PreconditionError):
        join([])


def test_join_of_lower_covers_of_w0_in_b2(systems):
    b2 = systems["B2"]
    result = join(lower_covers(b2.w0))
    assert result.exists
    assert result.element == b2.w0


def test_minimal_upper_bounds_are_upper_bounds_and_antichain(systems):
    system = systems["B3"]
    oracle = BruhatOracle(system)
    xs = [_w(system, "0 1"), _w(system, "2 1")]
    bounds = minimal_upper_bounds(xs, oracle)
    assert bounds
    for b in bounds:
        assert all(oracle.leq(x, b) for x in xs)
    for a, b in itertools.combinations(bounds, 2):
        assert not oracle.leq(a, b) and not oracle.leq(b, a)


def test_mixed_systems_rejected():
    a2, a3 = build_system("A2"), build_system("A3")
    with pytest.raises(PreconditionError):
        BruhatOracle(a2).leq(a2.identity, a3.identity)

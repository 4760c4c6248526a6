import itertools

import pytest

from src.core.bruhat import BruhatOracle, join
from src.core.coxeter import build_system, element_from_word, enumerate_group
from src.core.ji_catalog import (
    all_bigrassmannians,
    all_join_irreducibles,
    bigrassmannians,
    build_ji_poset,
    classify,
    is_dissector,
    is_join_irreducible,
    is_join_irreducible_definitional,
    jm_sets,
    join_irreducibles,
    longest_chain,
    phi,
    phi_maps,
    phi_signed,
    typeB_catalog,
    typeB_f_elements,
    typeB_ji,
    typeB_word,
    typeD_catalog,
    typeD_ji,
    verify_generated_relations,
)
from src.core.suites import b_ji_count
from src.utils.errors import InvalidIndexError, PreconditionError, WordError


def _texts(elements):
    return {x.text() for x in elements}


def _elements(system, words):
    return {element_from_word(system, word) for word in words}


def test_bigrassmannians_in_a2(systems):
    assert _texts(bigrassmannians(systems["A2"], "1", "2")) == {"1 2"}
    assert _texts(bigrassmannians(systems["A2"], "1", "1")) == {"1"}


@pytest.mark.parametrize("tag", ["A2", "A3", "B3", "G2"])
def test_join_irreducibles_are_all_bigrassmannians(systems, tag):
    system = systems[tag]
    assert set(all_join_irreducibles(system)) == set(all_bigrassmannians(system))


@pytest.mark.parametrize("tag", ["D4", "F4"])
def test_join_irreducibles_strictly_smaller(systems, tag):
    system = systems[tag]
    assert set(all_join_irreducibles(system)) < set(all_bigrassmannians(system))


def test_d4_bigrassmannian_that_is_a_join(systems):
    d4 = systems["D4"]
    w = element_from_word(d4, "1 0+ 0- 2 1")
    assert len(bigrassmannians(d4, "1", "1")) == 6
    assert w in bigrassmannians(d4, "1", "1")
    assert not is_join_irreducible(w)
    sets = jm_sets(w)
    assert set(sets.jm) == _elements(d4, ["1 0+ 2 1", "1 0- 2 1", "1 0+ 0- 1"])
    assert sets.jm_join_ok


@pytest.mark.parametrize("tag", ["A3", "B3"])
def test_cover_criterion_matches_definition(systems, tag):
    system = systems[tag]
    elements = enumerate_group(system).elements
    oracle = BruhatOracle(system)
    for x in elements:
        assert is_join_irreducible(x, oracle) == is_join_irreducible_definitional(x, elements, oracle)


@pytest.mark.parametrize("tag", ["A3", "B2", "G2"])
def test_dissective_types(systems, tag):
    system = systems[tag]
    elements = enumerate_group(system).elements
    oracle = BruhatOracle(system)
    for x in all_join_irreducibles(system):
        assert is_dissector(x, elements, oracle)


def test_d4_is_not_dissective(systems):
    d4 = systems["D4"]
    x = element_from_word(d4, "1 0+ 2 1")
    assert is_join_irreducible(x)
    assert not is_dissector(x)


@pytest.mark.parametrize("tag", ["A3", "B3"])
def test_every_element_is_the_join_of_its_jm(systems, tag):
    system = systems[tag]
    oracle = BruhatOracle(system)
    for w in enumerate_group(system).elements[1:]:
        sets = jm_sets(w, oracle)
        assert sets.jm_join_ok, w.text()
        assert set(sets.jm) == set(sets.jm_prime)


def test_restricted_jm(systems):
    d4 = systems["D4"]
    sets = jm_sets(element_from_word(d4, "0- 1 0+ 2 1 0- 1 0+"))
    assert set(sets.jm) == _elements(d4, ["0- 1 0+ 2 1 0-", "1 0- 2 1 0+"])
    assert set(sets.jm_prime) == _elements(d4, ["0- 1 0+ 2 1 0-", "1 0- 2 1 0+", "1 0- 0+ 1"])
    for s, t in itertools.product(d4.labels, repeat=2):
        assert set(sets.restricted(s, t)) <= set(sets.jm)
    assert sum(len(sets.restricted(s, t)) for s, t in itertools.product(d4.labels, repeat=2)) == 2


@pytest.mark.parametrize("n", [1, 2, 3])
def test_type_b_catalog_matches_brute_force(n):
    system = build_system(f"B{n + 1}")
    for s, t in itertools.product(system.labels, repeat=2):
        catalog = {entry.element for entry in typeB_catalog(n, int(s), int(t))}
        assert catalog == set(join_irreducibles(system, s, t))
        assert len(catalog) == b_ji_count(n, int(s), int(t))
        for entry in typeB_f_elements(n, int(s), int(t)):
            assert entry.element in bigrassmannians(system, s, t)
            assert entry.element not in catalog


@pytest.mark.parametrize("tag", ["B3", "B4", "D4"])
def test_generated_relations_reproduce_bruhat_order(tag):
    system = build_system(tag)
    for s, t in itertools.product(system.labels, repeat=2):
        report = verify_generated_relations(system, s, t)
        assert report.passed, (s, t, report.missing, report.extra, report.differences)


def test_type_b_constructor_words():
    assert typeB_word(1, 0, 0, "b", 1) == ("0",)
    assert typeB_word(1, 0, 0, "b", 2) == ("0", "1", "0")
    assert typeB_word(2, 2, 1, "x", 1) == tuple(reversed(typeB_word(2, 1, 2, "x", 1)))
    assert typeB_ji(2, 1, 2, "x", 1) == typeB_ji(2, 2, 1, "x", 1).inverse()
    with pytest.raises(InvalidIndexError):
        typeB_word(2, 0, 1, "x", 1)
    with pytest.raises(InvalidIndexError):
        typeB_word(2, 1, 1, "oa", 3)
    with pytest.raises(InvalidIndexError):
        typeB_word(2, 1, 1, "z", 1)


def test_phi_maps():
    tokens = ("0", "1", "0")
    assert phi(tokens) == ("0+", "0-", "1", "0+", "0-")
    assert phi_signed(tokens) == ("0+", "1", "0-")
    assert phi_signed(tokens, "0-") == ("0-", "1", "0+")
    assert set(phi_maps(tokens)) == {"phi", "phi+", "phi-"}
    with pytest.raises(PreconditionError):
        phi_signed(("0", "1", "0", "1"))
    with pytest.raises(WordError):
        phi_signed(tokens, "1")


def test_type_d_catalog_matches_brute_force():
    system = build_system("D4")
    for s, t in itertools.product(system.labels, repeat=2):
        catalog = {entry.element for entry in typeD_catalog(2, s, t)}
        assert catalog == set(join_irreducibles(system, s, t)), (s, t)


def test_type_d_constructor_rejects_bad_labels():
    with pytest.raises(InvalidIndexError):
        typeD_ji(2, "0", "1", "d", 1)
    with pytest.raises(InvalidIndexError):
        typeD_ji(2, "1", "2", "z", 1)


def test_classification(systems):
    labels = classify(systems["B3"], "1", "2")
    kinds = {kind for kind, _ in labels.values()}
    assert kinds <= {"oa", "ob", "x", "f"}
    assert classify(systems["F4"], "1", "1") == {}


def test_poset_and_longest_chain(systems):
    g2 = systems["G2"]
    poset = build_ji_poset(g2, "1", "1")
    assert [x.text() for x in poset.elements] == ["1", "121", "12121"]
    assert len(poset.edges()) == 2
    assert all(poset.node(x)["join_irreducible"] for x in poset.elements)
    chain = longest_chain(poset.elements, BruhatOracle(g2))
    assert [x.text() for x in chain] == ["1", "121", "12121"]


def test_poset_with_bigrassmannians(systems):
    d4 = systems["D4"]
    poset = build_ji_poset(d4, "1", "1", include_bg=True)
    assert len(poset.elements) == 6
    flags = [poset.node(x)["join_irreducible"] for x in poset.elements]
    assert flags.count(False) == 1


def test_join_of_two_ji_elements_in_d4(systems):
    d4 = systems["D4"]
    a, b = element_from_word(d4, "1 0+ 2 1"), element_from_word(d4, "1 0- 2 1")
    assert join([a, b]).element == element_from_word(d4, "1 0+ 0- 2 1")


def test_f_element_collapses_onto_next_o_element():
    assert typeB_word(2, 1, 1, "f", 1) == typeB_word(2, 1, 1, "ob", 2) == ("1", "0", "2", "1")
    assert typeB_f_elements(2, 1, 1) == []
    system = build_system("B3")
    x = element_from_word(system, "1 0 2 1")
    assert is_join_irreducible(x)
    assert classify(system, "1", "1")[x] == ("ob", 2)

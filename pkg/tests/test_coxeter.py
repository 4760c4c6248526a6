import pytest

from src.core.coxeter import (
    LEFT,
    RIGHT,
    build_system,
    canonical_reduced_word,
    count_reduced_words,
    descents,
    element_from_word,
    enumerate_group,
    format_signed_permutation,
    has_unique_reduced_word,
    is_reduced_word,
    parse_descriptor,
    to_signed_permutation,
)
from src.utils.errors import BudgetExceededError, PreconditionError, UnsupportedTypeError, WordError


@pytest.mark.parametrize("tag, order, top", [
    ("A2", 6, 3), ("A3", 24, 6), ("B2", 8, 4), ("B3", 48, 9), ("D4", 192, 12), ("G2", 12, 6), ("F4", 1152, 24),
])
def test_enumeration_matches_classical_orders(systems, tag, order, top):
    system = systems[tag]
    group = enumerate_group(system)
    assert len(group) == order == system.order
    assert max(group.lengths) == top == system.w0.length


def test_root_counts():
    assert build_system("E6").num_positive == 36
    assert build_system("E8").num_positive == 120
    assert build_system("F4").num_positive == 24


@pytest.mark.parametrize("descriptor", ["H3", "A0", "B1", "D3", "E9", "F5", "G3", "", "B"])
def test_unsupported_descriptors(descriptor):
    with pytest.raises(UnsupportedTypeError) as excinfo:
        parse_descriptor(descriptor)
    assert excinfo.value.exit_code == 2


def test_labels_per_family(systems):
    assert systems["A3"].labels == ["1", "2", "3"]
    assert systems["B3"].labels == ["0", "1", "2"]
    assert systems["D4"].labels == ["0-", "0+", "1", "2"]
    assert systems["B3"].n == 2
    assert systems["D4"].n == 2


def test_canonical_words(systems):
    a2 = systems["A2"]
    assert a2.w0.text() == "1 2 1"
    assert element_from_word(a2, "2 1 2") == a2.w0
    assert element_from_word(systems["F4"], "3423").text() == "3243"
    assert element_from_word(a2, "1 1").is_identity()
    d4 = systems["D4"]
    word = canonical_reduced_word(element_from_word(d4, "1 0+ 0- 2 1"))
    assert str(word) == "1 0- 0+ 2 1"
    assert word.reduced


def test_unknown_label_in_word(systems):
    with pytest.raises(WordError):
        element_from_word(systems["B3"], "0 1 5")


def test_descents_and_inverse(systems):
    x = element_from_word(systems["A3"], "1 2")
    assert descents(x, LEFT) == {"1"}
    assert descents(x, RIGHT) == {"2"}
    assert x * x.inverse() == systems["A3"].identity
    assert x.mul_left(0) == element_from_word(systems["A3"], "2")


def test_reduced_words(systems):
    a2 = systems["A2"]
    assert is_reduced_word(a2, "1 2 1")
    assert not is_reduced_word(a2, "1 2 1 2")
    assert count_reduced_words(a2.w0) == 2
    assert count_reduced_words(systems["A3"].w0) == 16
    assert has_unique_reduced_word(element_from_word(a2, "1 2"))
    assert not has_unique_reduced_word(a2.w0)


def test_sigma(systems):
    assert systems["A3"].sigma == {"1": "3", "2": "2", "3": "1"}
    assert all(k == v for k, v in systems["D4"].sigma.items())
    assert all(k == v for k, v in systems["B3"].sigma.items())


def test_reflections_are_involutions(systems):
    system = systems["B3"]
    assert len(system.reflections) == 9
    for t in system.reflections:
        assert (t * t).is_identity()
        assert t.length % 2 == 1


def test_signed_permutations(systems):
    system = systems["B2"]
    assert to_signed_permutation(system, system.identity) == (1, 2)
    assert to_signed_permutation(system, element_from_word(system, "0")) == (-1, 2)
    assert format_signed_permutation((-1, 2)) == "(~1, 2)"
    with pytest.raises(PreconditionError):
        to_signed_permutation(systems["A2"], systems["A2"].identity)


def test_group_budget(systems):
    with pytest.raises(BudgetExceededError) as excinfo:
        enumerate_group(systems["F4"], max_order=1000)
    assert excinfo.value.exit_code == 3

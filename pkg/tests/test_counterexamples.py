import pytest

from src.core.counterexamples import LEDGERS, Ledger, jm_double_prime_search
from src.core.coxeter import build_system, element_from_word
from src.utils.config import STATUS_DISCREPANCY, STATUS_FAIL, STATUS_NOT_ATTEMPTED, STATUS_PASS


def test_ledger_statuses():
    ledger = Ledger("demo")
    assert ledger.check("ok", True)
    ledger.not_attempted("later", "requiere --stretch")
    assert ledger.passed
    assert not ledger.check("bad", False, "detalle")
    assert not ledger.passed
    assert [item.item_id for item in ledger.items] == ["demo/ok", "demo/later", "demo/bad"]
    assert [item.status for item in ledger.items] == [STATUS_PASS, STATUS_NOT_ATTEMPTED, STATUS_FAIL]


def test_published_claims_never_fail():
    ledger = Ledger("demo")
    assert ledger.published("holds", True)
    assert not ledger.published("contradicted", False, "calculado otra cosa")
    assert ledger.passed
    assert [item.status for item in ledger.items] == [STATUS_PASS, STATUS_DISCREPANCY]


@pytest.mark.parametrize("name", ["d4-remark", "d4-jm", "f4-jm", "f4-soclesum", "f4-nojoin"])
def test_published_examples_hold(name):
    ledger = LEDGERS[name]()
    assert ledger.items
    failed = [(item.item_id, item.detail) for item in ledger.items if item.status == STATUS_FAIL]
    assert failed == []


@pytest.mark.slow
def test_d6_example_holds():
    assert LEDGERS["d6-jm"]().passed


@pytest.mark.slow
def test_e6_join_leaves_kl_claims_for_stretch():
    ledger = LEDGERS["e6-join"]()
    assert ledger.passed
    pending = [item.item_id for item in ledger.items if item.status == STATUS_NOT_ATTEMPTED]
    assert pending == ["e6-join/kl-b-29", "e6-join/kl-xy-29"]


@pytest.mark.parametrize("tag", ["A3", "B3"])
def test_double_prime_join_within_budget(tag):
    assert jm_double_prime_search(build_system(tag)) == []


@pytest.mark.stretch
def test_e6_join_kl_claims():
    ledger = LEDGERS["e6-join"](True)
    assert ledger.passed
    assert all(item.status != STATUS_NOT_ATTEMPTED for item in ledger.items)


def _discrepancies(ledger):
    return [item.item_id for item in ledger.items if item.status == STATUS_DISCREPANCY]


def test_f4_double_prime_set_contains_z():
    ledger = LEDGERS["f4-soclesum"]()
    assert _discrepancies(ledger) == ["f4-soclesum/jm-double-prime-published"]
    (item,) = [item for item in ledger.items if item.item_id == "f4-soclesum/jm-double-prime"]
    assert item.status == STATUS_PASS
    z = element_from_word(build_system("F4"), "2312312")
    assert z.text() in item.detail


def test_f4_second_upper_bound_is_join_irreducible():
    ledger = LEDGERS["f4-nojoin"]()
    assert _discrepancies(ledger) == ["f4-nojoin/bounds-in-bg-minus-ji"]
    statuses = {item.item_id: item.status for item in ledger.items}
    assert statuses["f4-nojoin/second-bound-in-ji22"] == STATUS_PASS
    assert statuses["f4-nojoin/first-bound-not-ji"] == STATUS_PASS

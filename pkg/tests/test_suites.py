import pytest

from src.core.suites import (
    SUITES,
    Check,
    CheckResult,
    SuiteResult,
    _execute,
    b_ji_count,
    run_suite,
    suite_names,
)
from src.utils.config import (
    EXIT_CHECK_FAILED,
    EXIT_OK,
    STATUS_FAIL,
    STATUS_NOT_ATTEMPTED,
    STATUS_PASS,
    STATUS_SKIPPED_BUDGET,
)
from src.utils.errors import BudgetExceededError, DerivationError, PreconditionError


def test_registry_names():
    names = suite_names()
    assert names == sorted(SUITES)
    for expected in ("b-closed-forms", "kl-tables", "e8-derivation", "ji-structure", "socle",
                     "intersection", "counterexamples", "fixtures", "d4-remark", "e6-join"):
        assert expected in names


def test_e8_derivation_lists_every_inequality():
    ids = [check.check_id for check in SUITES["e8-derivation"]]
    assert "e8-derivation/divisibilidad" in ids
    assert "e8-derivation/semilla-simbolica" in ids
    assert len([i for i in ids if i.startswith("e8-derivation/desigualdad-v")]) == 10
    assert "e8-derivation/desigualdad-v115" in ids
    assert "e8-derivation/desigualdad-v97" in ids


def test_b_ji_count():
    assert b_ji_count(2, 0, 0) == 3
    assert b_ji_count(2, 0, 2) == 1
    assert b_ji_count(2, 1, 1) == 4
    assert b_ji_count(3, 2, 1) == 4


def test_unknown_suite():
    with pytest.raises(PreconditionError):
        run_suite("no-existe")


def _raise(exc):
    def run(stretch):
        raise exc
    return run


def test_execute_statuses():
    (ok,) = _execute(Check("x/ok", lambda stretch: (True, "bien")), False)
    assert ok.status == STATUS_PASS
    (pending,) = _execute(Check("x/largo", lambda stretch: (True, ""), stretch=True), False)
    assert pending.status == STATUS_NOT_ATTEMPTED
    (budget,) = _execute(Check("x/presupuesto", _raise(BudgetExceededError(120, 100))), False)
    assert budget.status == STATUS_SKIPPED_BUDGET
    (failed,) = _execute(Check("x/error", _raise(DerivationError("sin solución"))), False)
    assert failed.status == STATUS_FAIL
    assert failed.detail.startswith("DerivationError")


def test_suite_result_accounting():
    result = SuiteResult("demo", [CheckResult("demo/a", STATUS_PASS), CheckResult("demo/b", STATUS_NOT_ATTEMPTED)])
    assert result.passed
    assert result.exit_code == EXIT_OK
    assert result.counts()[STATUS_NOT_ATTEMPTED] == 1
    result.checks.append(CheckResult("demo/c", STATUS_FAIL, "mal"))
    assert result.exit_code == EXIT_CHECK_FAILED
    assert result.to_dict()["counts"][STATUS_FAIL] == 1


def test_fixture_suite_passes():
    result = run_suite("fixtures")
    assert result.passed
    assert [c.check_id for c in result.checks] == ["fixtures/manifiesto"]


def test_ledger_suite_expands_items():
    result = run_suite("d4-remark", workers=2)
    assert result.passed
    assert len(result.checks) > 1
    assert all(c.check_id.startswith("d4-remark/") for c in result.checks)


def test_stretch_items_are_not_attempted_by_default():
    result = run_suite("intersection")
    statuses = {c.check_id: c.status for c in result.checks}
    assert statuses["intersection/B4"] == STATUS_NOT_ATTEMPTED
    assert statuses["intersection/B2"] == STATUS_PASS
    assert result.passed

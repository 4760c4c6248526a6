import shutil

import pytest

from src.core.fixtures import (
    examples_fixture,
    kl_table_fixture,
    load_fixture,
    read_manifest,
    socle_fixture,
    verify_manifest,
)
from src.utils.config import FIXTURE_FORMAT_VERSION, FIXTURES_DIR
from src.utils.errors import FixtureIntegrityError, PreconditionError


def test_manifest_matches_shipped_files():
    assert verify_manifest() == []
    assert "kl_e8.json" in read_manifest()


def test_loaded_fixtures_carry_format_version():
    data = kl_table_fixture("E6")
    assert data["format_version"] == FIXTURE_FORMAT_VERSION
    assert data["entries"]["1,6"] == ["v^35+v^29"]
    assert socle_fixture("F4")["entries"]["12342321"] == [["u", 19, False], ["w", 17, False]]


def test_examples_by_name():
    assert set(examples_fixture()["examples"]) >= {"d4-remark", "f4-soclesum", "e6-join"}
    assert examples_fixture("d4-remark")["type"] == "D4"
    with pytest.raises(PreconditionError):
        examples_fixture("h4-remark")


def test_missing_registrations():
    with pytest.raises(PreconditionError):
        kl_table_fixture("B3")
    with pytest.raises(PreconditionError):
        socle_fixture("E6")


def test_tampered_copy_is_detected(tmp_path):
    copy = tmp_path / "fixtures"
    shutil.copytree(FIXTURES_DIR, copy)
    with open(copy / "kl_g2.json", "a", encoding="utf-8") as fh:
        fh.write("\n")
    assert verify_manifest(str(copy)) == ["kl_g2.json: sha256 no coincide"]
    with pytest.raises(FixtureIntegrityError):
        load_fixture("kl_g2.json", str(copy))
    (copy / "kl_f4.json").unlink()
    assert "kl_f4.json: no existe" in verify_manifest(str(copy))
    with pytest.raises(FixtureIntegrityError):
        load_fixture("missing.json", str(copy))

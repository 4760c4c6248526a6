import json

import pytest

from src.cli import BruhatCLI
from src.utils.config import EXIT_OK, EXIT_USAGE


def _run(capsys, *argv):
    code = BruhatCLI().run(list(argv))
    return code, capsys.readouterr().out


def _run_json(capsys, *argv):
    code, out = _run(capsys, "--json", *argv)
    return code, json.loads(out)


def test_group_info(capsys):
    code, data = _run_json(capsys, "group", "info", "B3")
    assert code == EXIT_OK
    assert data["labels"] == ["0", "1", "2"]
    assert (data["order"], data["w0_length"], data["penultimate_size"], data["a_value"]) == (48, 9, 14, 4)


def test_group_info_table(capsys):
    code, out = _run(capsys, "group", "info", "A2")
    assert code == EXIT_OK
    assert "Grupo A2" in out
    assert "1 2 1" in out


def test_unsupported_type_is_a_usage_error(capsys):
    code, out = _run(capsys, "group", "info", "H3")
    assert code == EXIT_USAGE
    assert "Error:" in out


def test_argparse_rejects_unknown_suite():
    with pytest.raises(SystemExit) as excinfo:
        BruhatCLI().run(["verify", "no-existe"])
    assert excinfo.value.code == 2


def test_join_without_supremum(capsys):
    code, out = _run(capsys, "join", "A2", "1", "2")
    assert code == EXIT_OK
    assert "El join no existe." in out
    code, data = _run_json(capsys, "join", "A2", "1", "2")
    assert data["exists"] is False
    assert data["join"] is None
    assert sorted(data["minimal_upper_bounds"]) == ["1 2", "2 1"]


def test_join_in_d4(capsys):
    code, data = _run_json(capsys, "join", "D4", "1 0+ 2 1", "1 0- 2 1")
    assert code == EXIT_OK
    assert data["exists"] is True
    assert data["join"] == "1 0- 0+ 2 1"


def test_bad_word_is_a_usage_error(capsys):
    code, _ = _run(capsys, "join", "A2", "1 7")
    assert code == EXIT_USAGE


def test_jm_of_the_d4_bigrassmannian(capsys):
    code, data = _run_json(capsys, "jm", "D4", "1 0+ 0- 2 1")
    assert code == EXIT_OK
    assert len(data["jm"]) == 3
    assert data["join_jm_is_w"] is True


def test_jm_table(capsys):
    code, out = _run(capsys, "jm", "D4", "1 0+ 0- 2 1")
    assert code == EXIT_OK
    assert "JM''" in out
    assert "⋁JM(w) = w: sí" in out


def test_ji_enumerate_counts(capsys, cache_dir):
    code, data = _run_json(capsys, "ji", "enumerate", "B3", "-s", "1", "-t", "1")
    assert code == EXIT_OK
    assert data["counts"] == {"1,1": 4}


def test_ji_poset_json(capsys):
    code, data = _run_json(capsys, "ji", "poset", "G2", "-s", "1", "-t", "1")
    assert code == EXIT_OK
    assert [node["element"] for node in data["nodes"]] == ["1", "121", "12121"]
    assert all(edge["socle_killing"] for edge in data["edges"])


def test_ji_poset_dot(capsys):
    code, out = _run(capsys, "ji", "poset", "G2", "-s", "1", "-t", "2", "--format", "dot")
    assert code == EXIT_OK
    assert "JI_1_2" in out


def test_kl_penultimate_json(capsys, cache_dir):
    code, data = _run_json(capsys, "kl", "penultimate", "G2")
    assert code == EXIT_OK
    assert data["a_value"] == 1
    assert len(data["entries"]) == 10
    assert data["undetermined"] == []


def test_socle_report(capsys):
    code, data = _run_json(capsys, "socle", "report", "G2", "12")
    assert code == EXIT_OK
    assert data["subject"] == "12"
    assert data["entries"][0]["cell_element"] == "21"
    assert data["entries"][0]["degree"] == -2
    assert data["problems"] == []


def test_ext1_top_element(capsys):
    code, data = _run_json(capsys, "ext1", "G2", "121212", "121212")
    assert code == EXIT_OK
    assert (data["case"], data["value"], data["kind"]) == ("b", 0, "exact")


def test_verify_fixtures(capsys):
    code, data = _run_json(capsys, "verify", "fixtures")
    assert code == EXIT_OK
    assert data["passed"] is True
    assert data["counts"]["pass"] == 1

import io
import json

import pytest

from tricross.cli import main
from tricross.fixtures import fixture_path, fixture_text, load_fixture
from tricross.skein import bracket_double, normalized_polynomial
from tricross.textio import parse_multi


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    assert code == 0, err
    return json.loads(out)


def test_bracket_json_from_path(capsys):
    js = run_json(capsys, "bracket", str(fixture_path("3_1")))
    assert js["span"] == 12
    assert js["polynomial"] == [[5, -1], [-3, -1], [-7, 1]]
    assert js["text"] == "-A^5 - A^-3 + A^-7"


def test_fixture_name_and_literal_inputs(capsys):
    a = run_json(capsys, "bracket", "4_1")
    b = run_json(capsys, "bracket", fixture_text("4_1"))
    assert a == b


def test_stdin_input(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(fixture_text("5_2")))
    code, out, _ = run(capsys, "span", "-")
    assert code == 0 and out.strip() == "20"


def test_fold_braid(capsys):
    code, out, _ = run(capsys, "fold-braid", "braid 2: 1,1,1")
    assert code == 0
    d = parse_multi(out)
    assert len(d.crossings) == 2 and all(c.n == 3 for c in d.crossings)


def test_bounds_figure_eight(capsys):
    js = run_json(capsys, "bounds", str(fixture_path("4_1")))
    assert js["c3"]["exact"] is True and js["c3"]["upper"] == 2 and js["c3"]["lower"] == 2
    assert set(js) == {"crossings", "alternating", "reduced", "twist_number", "c3", "cn", "volume_bounds"}
    witness = parse_multi(js["c3"]["upper_witness"])
    assert len(witness.crossings) == 2


def test_bounds_text_and_options(capsys):
    code, out, _ = run(capsys, "bounds", "6_1", "--n", "3", "--n", "4", "--hyperbolic")
    assert code == 0
    assert "(exact)" in out and "c4: 1 <= c4 <= 5" in out
    js = run_json(capsys, "bounds", "sigma1sigma2_3m1", "--known-c", "6")
    assert js["c3"]["lower_provenance"] == "crossings/3"
    js = run_json(capsys, "bounds", "braid 2: 1,1,1,1,1")
    assert js["c3"]["upper"] == 4


def test_volume(capsys):
    js = run_json(capsys, "volume", "--c", "7", "--c3", "2", "--tw", "2", "--hyperbolic")
    values = {v["formula"]: v["value"] for v in js["volume_bounds"]}
    assert values == {"crossings": 11.387491, "triple_crossings": 4.059766, "twist_number": 10.149416}


def test_table_check(capsys):
    code, out, _ = run(capsys, "table-check", "7_2")
    assert code == 0 and out.startswith("7_2: match")


@pytest.mark.parametrize(
    "argv, key, value",
    [
        (("validate", "3_1"), "faces", 5),
        (("faces", "kink"), "count", 3),
        (("components", "sigma1_4"), "count", 2),
        (("resolve", "D1"), "crossings", 3),
        (("braid-close", "braid 3: 1,2,1,2"), "crossings", 4),
        (("covering", "4_1"), "circles", 2),
        (("fold", "4_1"), "crossings", 2),
        (("bigons", "6_1"), "twist_number", 2),
        (("twist", "6_1"), "crossings", 3),
        (("cor36", "7_2"), "crossings", 4),
        (("full-twist", "--m", "2"), "crossings", 4),
        (("to-even-n", "3_1", "--n", "6"), "n", 6),
        (("fold-multi", "sigma1_4"), "crossings", 2),
    ],
)
def test_subcommands(capsys, argv, key, value):
    assert run_json(capsys, *argv)[key] == value


def test_domain_errors_exit_one(capsys):
    code, _, err = run(capsys, "validate", "x(1,2,3,4)")
    assert code == 1 and err.startswith("E_EDGE_MULTIPLICITY")
    code, _, err = run(capsys, "cor36", "5_1")
    assert code == 1 and err.startswith("E_NO_COLLECTION:")
    code, _, err = run(capsys, "to-even-n", "3_1", "--n", "3")
    assert code == 1 and err.startswith("E_PARITY:")
    code, _, err = run(capsys, "bracket", "7_2", "--cap", "4")
    assert code == 1 and err.startswith("E_CAP:")
    code, _, err = run(capsys, "bracket", "x(1,2")
    assert code == 1 and err.startswith("E_PARSE:")
    code, _, err = run(capsys, "fold-braid", "braid 3: 1,1")
    assert code == 1 and err.startswith("E_BRAID:")
    assert len(err.strip().splitlines()) == 1


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["bracket", "3_1", "--format", "xml"])
    assert exc.value.code == 2


@pytest.mark.parametrize("name", ["3_1", "4_1", "5_2", "sigma1_4"])
def test_pipeline(capsys, name):
    """to-even-n | fold-multi | resolve | bracket keeps the normalized polynomial."""
    _, even, _ = run(capsys, "to-even-n", name)
    _, folded, _ = run(capsys, "fold-multi", even)
    assert parse_multi(folded).n == 5
    _, resolved, _ = run(capsys, "resolve", folded)
    js = run_json(capsys, "bracket", resolved, "--normalized")
    assert js["polynomial"] == normalized_polynomial(load_fixture(name)).to_pairs()


def test_cli_matches_library(capsys):
    js = run_json(capsys, "bracket", "7_2")
    assert js["polynomial"] == bracket_double(load_fixture("7_2")).to_pairs()
    assert run_json(capsys, "bracket", "7_2") == js

import json

import pytest

from chung_graham.cli import pipeline
from chung_graham.cli.main import main
from chung_graham.core.config import DESK_LIMIT_ENV


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.mark.parametrize(
    "d, n, expected",
    [("2", "19", "0,1,2"), ("4", "0", ""), ("4", "119563", "0,0,0,1,5,6")],
)
def test_encode(capsys, d, n, expected):
    code, out, _ = run(capsys, "encode", "--d", d, n)
    assert code == 0
    assert out == expected + "\n"


def test_encode_with_self_check(capsys):
    code, out, _ = run(capsys, "encode", "--d", "4", "--verify", "119562")
    assert code == 0
    assert out.strip() == "6,5,6,0,5,6"


def test_encode_huge_number(capsys):
    # Beyond the default int-to-str digit limit
    n = "1" + "0" * 5000
    code, out, _ = run(capsys, "encode", "--d", "2", "--json", n)
    assert code == 0
    digits = json.loads(out)["payload"]["digits"]
    code, out, _ = run(capsys, "decode", "--d", "2", ",".join(map(str, digits)))
    assert out.strip() == n


def test_encode_rejects_text(capsys):
    code, _, err = run(capsys, "encode", "--d", "4", "abc")
    assert code == 2
    assert err.startswith("❌")


@pytest.mark.parametrize("d, digits, expected", [("4", "6,5,6,0,5,6", "119562"), ("2", "", "0")])
def test_decode(capsys, d, digits, expected):
    code, out, _ = run(capsys, "decode", "--d", d, digits)
    assert code == 0
    assert out.strip() == expected


def test_decode_strict_rejects_invalid_string(capsys):
    code, out, err = run(capsys, "decode", "--d", "4", "--strict", "6,4,5,6,5,5,6")
    assert code == 3
    assert out == ""
    assert "item 3 at index 7" in err


def test_decode_strict_accepts_valid_string(capsys):
    code, out, _ = run(capsys, "decode", "--d", "4", "--strict", "7,4,5,5,6,5,5")
    assert code == 0
    assert out.strip().isdigit()


def test_decode_rejects_bad_digits(capsys):
    code, _, err = run(capsys, "decode", "--d", "4", "6,x")
    assert code == 2
    assert "digit 2" in err


def test_succ(capsys):
    code, out, _ = run(capsys, "succ", "--d", "4", "6,5,6,0,5,6")
    assert code == 0
    assert out == "0,0,0,1,5,6\n"


def test_succ_count(capsys):
    code, out, _ = run(capsys, "succ", "--d", "2", "", "--count", "3")
    assert code == 0
    assert out.splitlines() == ["1", "2", "0,1"]


def test_succ_carries_into_second_index(capsys):
    code, out, _ = run(capsys, "succ", "--d", "4", "7")
    assert code == 0
    assert out == "0,1\n"


def test_succ_rejects_invalid_start(capsys):
    code, _, err = run(capsys, "succ", "--d", "4", "8")
    assert code == 3
    assert "item 1 at index 1" in err


def test_succ_rejects_negative_count(capsys):
    code, _, _ = run(capsys, "succ", "--d", "4", "", "--count", "-1")
    assert code == 2


def test_blocks(capsys):
    code, out, _ = run(capsys, "blocks", "--d", "4", "5,5,6,0,5,6,0,2,5")
    assert code == 0
    assert out == "(5,5,6)v(0,5,6)v(0)v(2)v(5)\n"


def test_blocks_unicode(capsys):
    code, out, _ = run(capsys, "blocks", "--d", "4", "--unicode", "6,5,6,0,5,6")
    assert code == 0
    assert out == "(6,5,6)[max]∨(0,5,6)\n"


def test_blocks_maximal(capsys):
    code, out, _ = run(capsys, "blocks", "--d", "2", "2")
    assert code == 0
    assert out == "(2)[max]\n"


def test_blocks_not_decomposable(capsys):
    code, _, err = run(capsys, "blocks", "--d", "4", "6,4,5,6,5,5,6")
    assert code == 3
    assert "not decomposable" in err


def test_blocks_json(capsys):
    code, out, _ = run(capsys, "blocks", "--d", "4", "--json", "6,5,6,0,5,6")
    assert code == 0
    envelope = json.loads(out)
    assert envelope["command"] == "blocks"
    assert envelope["format"] == "json"
    assert envelope["payload"]["blocks"] == [
        {"kind": "max", "digits": [6, 5, 6]},
        {"kind": "upper", "digits": [0, 5, 6]},
    ]


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--d", "4", "1")
    assert code == 0
    report = json.loads(out)
    assert report["ok"] is True
    assert (report["count"], report["min_value"], report["max_value"]) == (8, 0, 7)


def test_verify_writes_report(capsys, tmp_path):
    path = tmp_path / "verify.json"
    code, out, _ = run(capsys, "verify", "--d", "2", "4", "--report", str(path))
    assert code == 0
    assert json.loads(path.read_text(encoding="utf-8")) == json.loads(out)


def test_verify_respects_desk_limit(capsys, monkeypatch):
    monkeypatch.setenv(DESK_LIMIT_ENV, "10")
    code, _, err = run(capsys, "verify", "--d", "4", "2")
    assert code == 3
    assert "desk limit" in err


def test_bad_desk_limit_is_a_usage_error(capsys, monkeypatch):
    monkeypatch.setenv(DESK_LIMIT_ENV, "ten")
    code, _, err = run(capsys, "verify", "--d", "4", "1")
    assert code == 2
    assert DESK_LIMIT_ENV in err


def test_sweep(capsys, monkeypatch, tmp_path):
    monkeypatch.setattr(pipeline, "ACCEPTANCE_CONFIGURATIONS", [{"d": 2, "max_order": 3}, {"d": 4, "max_order": 2}])
    path = tmp_path / "sweep.md"
    code, out, _ = run(capsys, "sweep", "--report", str(path))
    assert code == 0
    assert "d=2" in out and "d=4" in out
    assert "All configurations passed" in out
    assert "| 4 | 6 | 7 | 2 | 55 | 55 |" in path.read_text(encoding="utf-8")


@pytest.mark.slow
def test_full_sweep(capsys):
    code, out, _ = run(capsys, "sweep")
    assert code == 0
    assert out.count("✓ d=") == 4


def test_alpha(capsys):
    code, out, _ = run(capsys, "alpha", "8")
    assert code == 0
    assert out == "0.39441967\n"


def test_alpha_json(capsys):
    code, out, _ = run(capsys, "alpha", "--json")
    assert code == 0
    assert json.loads(out)["payload"] == {"decimal_digits": 8, "value": "0.39441967"}


def test_seq(capsys):
    code, out, _ = run(capsys, "seq", "--d", "4", "--max", "5")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["k", "H_k", "K_k", "F_k"]
    assert lines[-1].split() == ["5", "2584", "11", "5"]


def test_seq_json(capsys):
    code, out, _ = run(capsys, "seq", "--d", "2", "--max", "3", "--json")
    assert code == 0
    rows = json.loads(out)["payload"]["rows"]
    assert [row["H_k"] for row in rows] == [1, 3, 8]


def test_seq_csv(capsys):
    code, out, _ = run(capsys, "seq", "--d", "2", "--max", "2", "--csv")
    assert code == 0
    assert out.splitlines() == ["k,H_k,K_k,F_k", "1,1,1,1", "2,3,3,1"]


def test_seq_rejects_odd_interval(capsys):
    code, _, err = run(capsys, "seq", "--d", "3")
    assert code == 2
    assert "interval must be even" in err


def test_interval_is_required(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["encode", "5"])
    assert excinfo.value.code == 2


def test_verbose_flag(capsys):
    code, out, _ = run(capsys, "-v", "alpha", "4")
    assert code == 0
    assert out == "0.3944\n"


def test_sweep_has_no_json_flag(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["sweep", "--json"])
    assert excinfo.value.code == 2

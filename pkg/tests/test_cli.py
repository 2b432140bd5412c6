import json

import pytest

from butterflyseq.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_seq_bfile(capsys):
    code, out, _ = run(capsys, "seq", "s", "--to", "18")
    assert code == 0
    assert out.splitlines()[-1] == "18 2"
    assert out.splitlines()[0] == "0 1"


def test_seq_json(capsys):
    code, out, _ = run(capsys, "--json", "seq", "r1", "--to", "5")
    blob = json.loads(out)
    assert blob["command"] == "seq"
    assert blob["result"]["offset"] == 3
    assert blob["result"]["values"] == [0, 0, 1]


def test_enum(capsys):
    code, out, _ = run(capsys, "enum", "butterfly", "18")
    assert code == 0
    assert out == "7+6+5\n6+5+4+3\n"


def test_enum_bar_family(capsys):
    code, out, _ = run(capsys, "enum", "bar-bo", "21", "--h", "3")
    assert code == 0 and out == "8+7+6\n"


def test_enum_unknown_family(capsys):
    code, _, err = run(capsys, "enum", "nope", "9")
    assert code == 2
    assert "unknown family" in err


def test_bij(capsys):
    code, out, _ = run(capsys, "bij", "butterfly", "--from", "6", "--to", "24")
    assert code == 0 and "pass" in out


def test_split_merge_round(capsys):
    code, out, _ = run(capsys, "split", "7+6+5+4+3+2", "--variant", "switched")
    assert code == 0 and out.strip() == "13+5+3+3+3"
    code, out, _ = run(capsys, "merge", "13+5+3+3+3", "--variant", "switched")
    assert code == 0 and out.strip() == "7+6+5+4+3+2"


def test_merge_error_is_usage_exit(capsys):
    code, _, err = run(capsys, "merge", "13+5+3")
    assert code == 2 and "error" in err


def test_caps(capsys):
    code, out, _ = run(capsys, "--json", "caps", "5+3+3+3")
    blob = json.loads(out)
    assert blob["result"]["satisfied"] is True
    assert blob["result"]["two_t"] == 2


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "9+8+7")
    assert code == 0 and out.strip() == "nonpent_vbar h=3"


def test_parity(capsys):
    code, out, _ = run(capsys, "parity", "12")
    assert code == 0 and "even_plus_one" in out
    code, out, _ = run(capsys, "parity", "--exceptions", "--to", "51")
    assert code == 0
    assert [int(x) for x in out.split()] == [9, 12, 14, 15, 17, 22, 24, 26,
                                             28, 35, 37, 40, 42, 51]


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "butterfly-filtration", "--order", "60")
    assert code == 0 and out.strip() == "butterfly-filtration: OK 0 mismatches"
    code, out, _ = run(capsys, "verify", "all", "--order", "40")
    assert code == 0


def test_verify_reports_mismatches(capsys):
    code, out, _ = run(capsys, "verify", "butterfly-filtration-printed", "--order", "30")
    assert code == 1
    assert "5 1 2" in out


def test_checksum(capsys):
    code, out, _ = run(capsys, "checksum", "t", "10")
    assert code == 0 and out.strip() == "checksum=2 expected=2 ok"


def test_solve(capsys):
    code, out, _ = run(capsys, "solve", "s", "--to", "12")
    assert code == 0
    assert out.splitlines()[-1] == "12 1"


def test_diagram(capsys):
    code, out, _ = run(capsys, "diagram", "4+3+2")
    assert code == 0 and out == "####\n###\n##\n"


def test_output_is_deterministic(capsys):
    one = run(capsys, "--json", "seq", "s", "--to", "30")
    two = run(capsys, "--json", "seq", "s", "--to", "30")
    assert one == two
    one = run(capsys, "verify", "all", "--order", "30")
    two = run(capsys, "verify", "all", "--order", "30")
    assert one == two


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["seq"])  # missing required arguments
    assert exc.value.code == 2

import json

import pytest

from tauadic.cli import main


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


def test_expand_tnaf_text(capsys):
    status, out, _ = run(capsys, "expand", "--mu", "1", "--method", "tnaf",
                         "--digit-set", "1", "--element", "3,0,0,0")
    assert status == 0
    assert out.splitlines() == ["(1-1t, 0, 0, -1+2t)_t", "length: 4", "weight: 2"]


def test_expand_zero_element(capsys):
    status, out, _ = run(capsys, "expand", "--element", "0,0,0,0",
                         "--mu", "-1", "--method", "gls")
    assert status == 0
    assert out.splitlines() == ["()_t", "length: 0", "weight: 0"]


def test_expand_accepts_curve_coefficient(capsys):
    status_mu, out_mu, _ = run(capsys, "expand", "--mu", "1", "--method", "gls",
                               "--element", "7,1,0,0")
    status_a, out_a, _ = run(capsys, "expand", "--a", "1", "--method", "gls",
                             "--element", "7,1,0,0")
    assert status_mu == status_a == 0
    assert out_mu == out_a


def test_expand_negative_leading_coefficient(capsys):
    # leading-dash values need the = form
    status, out, _ = run(capsys, "expand", "--a", "0", "--method", "gls",
                         "--element=-1,-2,3,0", "--format", "json")
    assert status == 0
    record = json.loads(out)
    assert record["element"] == [-1, -2, 3, 0]
    assert record["mu"] == -1


def test_expand_csv(capsys):
    status, out, _ = run(capsys, "expand", "--mu", "1", "--method", "tnaf",
                         "--digit-set", "1", "--element", "3,0,0,0",
                         "--format", "csv")
    assert status == 0
    assert out.splitlines() == ["s,t,u,v,norm_sq,digits,length",
                                "3,0,0,0,18,1-1t;0;0;-1+2t,4"]


def test_expand_json_round_trips(capsys):
    status, out, _ = run(capsys, "expand", "--mu", "1", "--method", "tnaf",
                         "--digit-set", "1", "--element", "3,0,0,0",
                         "--format", "json")
    assert status == 0
    from tauadic.expand import expansion_from_json
    assert expansion_from_json(out).to_json() == out.strip()


def test_usage_errors(capsys):
    # both mu and a
    status, _, err = run(capsys, "expand", "--mu", "1", "--a", "0",
                         "--method", "gls", "--element", "1,0,0,0")
    assert status == 2 and "error" in err
    # neither mu nor a
    status, _, err = run(capsys, "expand", "--method", "gls",
                         "--element", "1,0,0,0")
    assert status == 2
    # tnaf without digit set
    status, _, err = run(capsys, "expand", "--mu", "1", "--method", "tnaf",
                         "--element", "1,0,0,0")
    assert status == 2
    # gls with digit set
    status, _, err = run(capsys, "expand", "--mu", "1", "--method", "gls",
                         "--digit-set", "3", "--element", "1,0,0,0")
    assert status == 2
    # malformed element
    status, _, err = run(capsys, "expand", "--mu", "1", "--method", "gls",
                         "--element", "1,2,3")
    assert status == 2
    # bad digit set index
    status, _, err = run(capsys, "expand", "--mu", "1", "--method", "tnaf",
                         "--digit-set", "17", "--element", "1,0,0,0")
    assert status == 2
    # negative bound
    status, _, err = run(capsys, "enumerate", "--mu", "1", "--bound", "-1")
    assert status == 2


def test_unknown_command_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_enumerate_census_counts(capsys):
    status, out, _ = run(capsys, "enumerate", "--mu", "1", "--bound", "20",
                         "--format", "csv")
    assert status == 0
    lines = out.strip().splitlines()
    assert lines[0] == "s,t,u,v,norm_sq"
    assert len(lines) == 1 + 94


def test_enumerate_json(capsys):
    status, out, _ = run(capsys, "enumerate", "--mu", "-1", "--bound", "2",
                         "--format", "json")
    assert status == 0
    assert json.loads(out) == [{"element": [-1, 0, 0, 0], "norm_sq": 2},
                               {"element": [1, 0, 0, 0], "norm_sq": 2}]
    # byte-for-byte under re-serialization
    assert json.dumps(json.loads(out), separators=(",", ":")) == out.strip()


def test_enumerate_text_total(capsys):
    status, out, _ = run(capsys, "enumerate", "--mu", "1", "--bound", "2")
    assert status == 0
    assert out.splitlines()[-1] == "total: 2"


def test_enumerate_include_zero(capsys):
    status, out, _ = run(capsys, "enumerate", "--mu", "1", "--bound", "2",
                         "--include-zero")
    assert status == 0
    assert out.splitlines()[-1] == "total: 3"
    assert "0,0,0,0  norm_sq=0" in out


def test_tables_single_digit_set(capsys):
    status, out, _ = run(capsys, "tables", "--mu", "1", "--digit-set", "1")
    assert status == 0
    assert "2/2 table checks passed" in out


def test_tables_machine_formats(capsys):
    status, out, _ = run(capsys, "tables", "--mu", "1", "--digit-set", "2",
                         "--format", "json")
    assert status == 0
    records = json.loads(out)
    assert [r["name"] for r in records] == ["tnaf-existence-D2-mu=+1",
                                            "gls-existence-mu=+1"]
    assert all(r["passed"] for r in records)
    status, out, _ = run(capsys, "tables", "--mu", "1", "--digit-set", "2",
                         "--format", "csv")
    assert status == 0
    assert out.splitlines()[0] == "name,passed"


def test_census_passes(capsys):
    status, out, _ = run(capsys, "census", "--mu", "1")
    assert status == 0
    assert "[PASS] census-count-mu=+1" in out
    assert "[PASS] census-words-mu=+1" in out


def test_census_csv_output(capsys):
    status, out, err = run(capsys, "census", "--mu", "-1", "--format", "csv")
    assert status == 0
    lines = out.splitlines()
    assert lines[0] == "c3,c2,c1,c0"
    assert len(lines) == 1 + 252
    assert "[PASS]" in err  # verification lines stay off the data stream


def test_census_json_output(capsys):
    status, out, _ = run(capsys, "census", "--mu", "1", "--format", "json")
    assert status == 0
    records = json.loads(out)
    assert len(records) == 252
    assert json.dumps(records, separators=(",", ":")) == out.strip()
    assert [-3, 0, -3, -3] in [r["word"] for r in records]


def test_check_quick_suite(capsys):
    status, out, _ = run(capsys, "check", "--suite", "ring", "--seed", "7",
                         "--scale", "quick")
    assert status == 0
    assert "checks passed" in out


def test_check_deterministic_output(capsys):
    _, first, _ = run(capsys, "check", "--suite", "norm", "--seed", "3",
                      "--scale", "quick")
    _, second, _ = run(capsys, "check", "--suite", "norm", "--seed", "3",
                       "--scale", "quick")
    assert first == second

import json

import pytest

from quadsq.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


GOLDEN = [
    (("decide", "-m", "-6", "--alpha", "1,2", "--json"), '{"verdict":"Solvable","reasons":["P1_NONEMPTY(5)"]}'),
    (("decide", "-m", "6", "--alpha", "5,2", "--json"), '{"verdict":"Unsolvable","reasons":["PARITY(0,5)"]}'),
    (("pell", "6", "-2", "--json"), '{"x":2,"y":1,"N":-2}'),
    (("pell", "6", "-1", "--json"), '{"x":null,"y":null,"N":-1}'),
    (("unit", "6", "--json"), '{"eps":[5,2],"norm":1}'),
    (("classify-d", "35", "--json"), '{"in_D":true,"witnesses":[[5,"D3"],[7,"D1"]]}'),
    (("applicable", "6", "--json"), '{"m":6,"results":[{"tag":"Thm02","params":{"p":3}}]}'),
    (("symbol", "quartic2", "17", "--json"), '{"symbol":"quartic2","p":17,"value":-1}'),
    (("symbol", "jacobi", "2", "7", "--json"), '{"symbol":"jacobi","a":2,"n":7,"value":1}'),
    (("symbol", "class", "6", "97", "--json"), '{"symbol":"class","m":6,"p":97,"value":"P3"}'),
    (("local", "-m", "-6", "--alpha", "5,1", "--prime", "2", "--json"),
     '{"solvable":false,"verdicts":[{"prime":2,"solvable":false,"precision":3}]}'),
    (("decide", "-m", "-6", "--alpha", "-1,2", "--json", "--with-oracle"),
     '{"verdict":"Solvable","reasons":["P1_NONEMPTY(5)"],"witness":[[-1,-1],[2,0]]}'),
    (("decide", "-m", "-6", "--alpha", "5,2", "--json", "--with-oracle"),
     '{"verdict":"Unsolvable","reasons":["PARITY(0,5)"],"witness":null}'),
]


@pytest.mark.parametrize("argv, want", GOLDEN, ids=[" ".join(a) for a, _ in GOLDEN])
def test_golden(capsys, argv, want):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == want


def test_with_oracle_witness(capsys):
    code, out, _ = run(capsys, "decide", "-m", "6", "--alpha", "11,4", "--with-oracle", "--json")
    assert json.loads(out)["witness"] == [[-1, 0], [2, 1]]


def test_text_output(capsys):
    code, out, _ = run(capsys, "decide", "-m", "-6", "--alpha", "1,2", "--with-oracle")
    assert code == 0 and "Solvable" in out and "witness" in out


@pytest.mark.parametrize(
    "argv",
    [
        ("decide", "-m", "-6", "--alpha", "0,0"),
        ("symbol", "quartic2", "7"),
        ("symbol", "jacobi", "2", "8"),
        ("pell", "9", "1"),
        ("local", "-m", "4", "--alpha", "1,0"),
        ("local", "-m", "-6", "--alpha", "1,0", "--prime", "9"),
        ("classify-d", "12"),
    ],
)
def test_domain_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1 and out == ""
    assert json.loads(err)["error"] == "DomainError"


def test_unknown_flag_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["decide", "-m", "-6", "--alpha", "1,2", "--bogus"])
    assert exc.value.code == 2


def test_field_restricted(capsys):
    with pytest.raises(SystemExit):
        main(["decide", "-m", "10", "--alpha", "1,2"])


def test_big_numbers_as_strings(capsys):
    code, out, _ = run(capsys, "unit", "919", "--json")
    assert out == '{"eps":["4481603010937119451551263720","147834442396536759781499589"],"norm":1}'
    code, out, _ = run(capsys, "unit", "661", "--json")
    assert json.loads(out)["eps"] == [2865454435422583218, 111453260296346905]


def test_undecided_exit_code(capsys, monkeypatch):
    from quadsq import localsolve
    from quadsq.errors import UndecidedError

    def boom(*a, **k):
        raise UndecidedError(2, 7)

    monkeypatch.setattr(localsolve, "locally_solvable_everywhere", boom)
    code, _, err = run(capsys, "local", "-m", "-6", "--alpha", "1,2")
    assert code == 3 and json.loads(err) == {"error": "Undecided", "prime": 2, "precision": 7}


def test_scan_report_and_figures(capsys, tmp_path):
    report, fig = tmp_path / "scan.jsonl", tmp_path / "map.png"
    code, out, _ = run(capsys, "scan", "-m", "-6", "--range", "4", "--bounds", "10,50",
                       "--report", str(report), "--figure", str(fig), "--jobs", "1", "--json")
    assert code == 0
    summary = json.loads(out)
    assert summary["elements"] == 80 and summary["contradictions"] == []
    rows = [json.loads(line) for line in report.read_text().splitlines()]
    assert len(rows) == 80
    assert set(rows[0]) == {"alpha", "verdict", "reasons", "witness", "bound_used"}
    assert fig.stat().st_size > 0 and (tmp_path / "map_bounds.png").stat().st_size > 0


def test_scan_contradiction_exit(capsys, monkeypatch):
    from quadsq import criteria
    from quadsq.criteria import Decision, Verdict

    monkeypatch.setattr(criteria, "decide", lambda m, a: Decision(Verdict.SOLVABLE, ("FAKE",)))
    code, out, _ = run(capsys, "scan", "-m", "6", "--range", "1", "--bounds", "5", "--jobs", "1")
    assert code == 2 and "contradictions" in out


def test_env_overrides_jobs(capsys, monkeypatch):
    from quadsq import oracle

    seen = {}
    real = oracle.cross_check

    def spy(m, r, b, jobs=None):
        seen["jobs"] = jobs
        return real(m, r, b, jobs=1)

    monkeypatch.setenv("QUADSQ_JOBS", "3")
    monkeypatch.setattr(oracle, "cross_check", spy)
    run(capsys, "scan", "-m", "6", "--range", "1", "--jobs", "1")
    assert seen["jobs"] == 3

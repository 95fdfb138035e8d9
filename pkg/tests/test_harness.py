import json

import pytest

from superjac import cli
from superjac.harness import default_plan, lemma_cases, load_corpus, run_curve_entry, run_curve_suite, run_lemma_suite
from superjac.reports import dumps

SMALL = {"label": "E_x3mx_5", "N": 2, "p": 5, "roots": [[0, 1], [1, 1], [4, 1]],
         "checks": {"fixed_points": True, "oracle": True, "freeness": [3]}}
CM3 = {"label": "C3_x2mx_7", "N": 3, "p": 7, "roots": [[0, 1], [1, 1]], "checks": {"fixed_points": True}}
# deg f = 2 shares a factor with N = 2
BAD = {"label": "bad_gcd", "N": 2, "p": 5, "roots": [[0, 1], [1, 1]]}


def test_lemma_cases_are_deterministic():
    a = [(fn.__name__, args) for fn, args in lemma_cases(6)]
    b = [(fn.__name__, args) for fn, args in lemma_cases(6)]
    assert a == b
    assert len(lemma_cases(6)) > len(lemma_cases(5))


def test_lemma_suite_minimal_size():
    reports = run_lemma_suite(2)
    assert reports and all(r.passed for r in reports)
    names = {r.name for r in reports}
    assert {"disc_pn", "norm_cn"} <= names
    with pytest.raises(ValueError):
        lemma_cases(1)


def test_lemma_suite_json_is_reproducible():
    assert dumps(run_lemma_suite(4)) == dumps(run_lemma_suite(4))


def test_builtin_corpus_loads():
    entries = load_corpus()
    labels = [e["label"] for e in entries]
    assert len(labels) == len(set(labels)) >= 5
    assert all({"N", "p", "checks"} <= set(e) for e in entries)


def test_bad_curve_is_reported_and_isolated():
    reports = run_curve_suite([BAD, CM3])
    bad = [r for r in reports if r.params.get("curve") == "bad_gcd"]
    good = [r for r in reports if r.params.get("curve") == "C3_x2mx_7"]
    assert len(bad) == 1 and not bad[0].passed and bad[0].name == "curve_spec"
    assert "error" in bad[0].actual
    assert good and all(r.passed for r in good)


def test_suite_rerun_is_byte_identical():
    first = dumps(run_curve_suite([SMALL], seed=17))
    second = dumps(run_curve_suite([SMALL], seed=17))
    assert first == second
    doc = json.loads(first)
    assert doc["summary"]["passed"] == doc["summary"]["total"]


def test_default_plan_skips_characteristic_and_bad_primes():
    plan = default_plan(4, 3, [3, 5, 59], 59)
    assert plan["freeness"] == [3, 5]
    assert plan["character"] == [5]
    assert plan["km_kernel"] == [[2, 3], [2, 5]]


def test_ell_override():
    # l = 2 divides N = 2, so only the freeness check applies
    reports = run_curve_entry(SMALL, ells=[2])
    assert {r.name for r in reports} == {"genus", "fixed_points", "freeness"}
    assert all(r.passed for r in reports)


# -- CLI ------------------------------------------------------------------------

def _spec(tmp_path, entries):
    path = tmp_path / "spec.json"
    path.write_text(json.dumps(entries))
    return str(path)


def test_cli_verify_success_and_schema(tmp_path, capsys):
    out = tmp_path / "out.json"
    code = cli.main(["curve", "verify", "--spec", _spec(tmp_path, SMALL), "--json", str(out)])
    assert code == 0
    printed = capsys.readouterr().out
    assert "PASS fixed_points" in printed and "summary:" in printed
    doc = json.loads(out.read_text())
    assert doc["version"] == 1
    assert set(doc["summary"]) == {"total", "passed"}
    for check in doc["checks"]:
        assert {"name", "params", "expected", "actual", "pass", "runtimeMs", "seed"} <= set(check)
        assert check["runtimeMs"] == 0
        assert all(isinstance(v, str) for v in check["params"].values())


def test_cli_timings_flag_records_runtime(tmp_path):
    out = tmp_path / "out.json"
    assert cli.main(["curve", "verify", "--spec", _spec(tmp_path, SMALL), "--json", str(out), "--timings"]) == 0
    doc = json.loads(out.read_text())
    assert all(isinstance(c["runtimeMs"], int) for c in doc["checks"])


def test_cli_failure_exit_code(tmp_path, capsys):
    assert cli.main(["curve", "verify", "--spec", _spec(tmp_path, [BAD])]) == 1
    assert "FAIL curve_spec" in capsys.readouterr().out


def test_cli_usage_errors(tmp_path):
    assert cli.main(["lemmas", "--max-n", "1"]) == 2
    assert cli.main(["curve", "verify", "--spec", str(tmp_path / "missing.json")]) == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["no-such-command"])
    assert exc.value.code == 2


def test_cli_small_commands(capsys):
    assert cli.main(["poly", "disc-pn", "--n", "7"]) == 0
    assert "-16807" in capsys.readouterr().out
    assert cli.main(["cyclo", "norm-cn", "--n", "6"]) == 0
    assert cli.main(["lemmas", "--max-n", "3"]) == 0


def test_cli_analyze(tmp_path, capsys):
    assert cli.main(["curve", "analyze", "--spec", _spec(tmp_path, SMALL)]) == 0
    info = json.loads(capsys.readouterr().out)
    assert info["J_order"] == "8"
    assert cli.main(["curve", "analyze", "--spec", _spec(tmp_path, BAD)]) == 1


def test_cli_suite_with_small_corpus(tmp_path):
    path = tmp_path / "corpus.json"
    path.write_text(json.dumps({"version": 1, "curves": [CM3, BAD]}))
    out = tmp_path / "out.json"
    assert cli.main(["curve", "suite", "--corpus", str(path), "--json", str(out)]) == 1
    doc = json.loads(out.read_text())
    assert doc["summary"]["passed"] == doc["summary"]["total"] - 1

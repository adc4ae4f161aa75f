import json

import pytest

from footprint import cli
from footprint.errors import UnknownSuite
from footprint.field import FieldSpec
from footprint.suites import SUITES, SuiteResult, exhaustive_corpus, run_suite


def test_exhaustive_corpus_sizes():
    # F_2 on 2 variables: 4 reduced monomials, supports of size 1..4, coefficient 1
    assert sum(1 for _ in exhaustive_corpus(FieldSpec(2))) == 15
    # F_3: 9 monomials, coefficients {1, 2}
    assert sum(1 for _ in exhaustive_corpus(FieldSpec(3))) == 9 * 2 + 36 * 4 + 84 * 8 + 126 * 16


@pytest.mark.parametrize(
    "name,kwargs",
    [
        ("field-axioms", {}),
        ("footprint-bound", {"trials": 200}),
        ("schwartz-zippel", {"trials": 200}),
        ("bi-implication", {"fields": [FieldSpec(2)]}),
        ("procond", {"fields": [FieldSpec(2)]}),
        ("thetop-corolla", {"fields": [FieldSpec(2)]}),
        ("split-equivalence", {"trials": 40}),
    ],
)
def test_suites_pass_on_small_corpora(name, kwargs):
    res = run_suite(name, **kwargs)
    assert res.passed, res.failures[:3]
    assert res.checks > 0


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("nope")


def test_failing_suite_exit_code_and_artifacts(monkeypatch, tmp_path, capsys):
    def broken(fields=None, trials=0, seed=0):
        res = SuiteResult("broken", checks=1)
        res.fail("deliberate")
        return res

    monkeypatch.setitem(SUITES, "broken", broken)
    path = tmp_path / "fail.json"
    assert cli.main(["verify", "--suite", "broken", "--artifacts", str(path)]) == 1
    assert json.loads(path.read_text()) == [{"detail": "deliberate"}]
    assert capsys.readouterr().out.startswith("FAIL")


def test_suite_aliases():
    assert run_suite("necessary-conditions", [FieldSpec(2)]).name == "procond"
    assert run_suite("invariant-attainers", [FieldSpec(2)]).name == "thetop-corolla"
    assert run_suite("footprint-inequalities").name == "lemlimlom"

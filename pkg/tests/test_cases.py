from dataclasses import replace
from fractions import Fraction

import pytest

from threefold_bounds.basket import Basket
from threefold_bounds.cases import (
    SCENARIOS,
    CaseReport,
    PremiseError,
    ReportValidationError,
    ScenarioId,
    Step,
    combine_r3,
    corollary_r3,
    lemma_es_bound,
    run_all,
    run_scenario,
    surface_invariant_constraint,
    theorem_57,
    weak_corollary_bound,
)
from threefold_bounds.fixtures import delta18
from threefold_bounds.riemann_roch import ThreefoldData


@pytest.fixture(scope="module")
def record():
    return delta18()


EXPECTED = {
    ScenarioId.SAME_PENCIL: (52, 53),
    ScenarioId.DISTINCT_V5_CASE1: (57, 57),
    ScenarioId.DISTINCT_V5_CASE2: (57, 57),
    ScenarioId.DISTINCT_V4_I1: (48, 48),
    ScenarioId.DISTINCT_V4_I2: (57, 57),
    ScenarioId.DISTINCT_V4_II: (57, 57),
}


@pytest.mark.parametrize("sid", list(ScenarioId))
def test_scenario_bounds(record, sid):
    report = run_scenario(SCENARIOS[sid], record)
    assert (report.derived_bound, report.paper_claim) == EXPECTED[sid]
    assert report.consistent
    report.validate()


def test_scenarios_exhaust_ids():
    assert set(SCENARIOS) == set(ScenarioId)
    assert len(ScenarioId) == 6


def test_same_pencil_records_both_xi_values(record):
    report = run_scenario(ScenarioId.SAME_PENCIL, record)
    values = {s.name: s.output for s in report.steps}
    assert values["xi_engine"] == Fraction(1, 5)
    assert values["xi"] == Fraction(1, 5)
    assert values["L2"] == Fraction(1, 130)
    assert values["beta_tilde"] == Fraction(1, 13)


def test_premise_violation(record):
    bad = ThreefoldData(chi=2, basket=record.basket, k3=Fraction(1, 100), q=0)
    with pytest.raises(PremiseError, match="scenario premise violated"):
        run_scenario(ScenarioId.SAME_PENCIL, bad)
    with pytest.raises(PremiseError):
        run_scenario(ScenarioId.DISTINCT_V4_I1, replace(record, q=1))


def test_determinism(record):
    a = [r.to_certificate() for r in run_all(record)]
    b = [r.to_certificate() for r in run_all(delta18())]
    assert a == b


def test_certificate_format(record):
    text = run_scenario(ScenarioId.DISTINCT_V4_I1, record).to_certificate()
    lines = text.splitlines()
    assert lines[-1] == "BOUND 48"
    body = [line for line in lines if not line.startswith("#") and not line.startswith("BOUND")]
    assert body
    for line in body:
        assert len(line.split(" | ")) == 4
    assert "nu_ratio | nu0=1/9 | beta_tilde=1/10 |" in text


def test_report_validation_catches_problems():
    dangling = CaseReport(
        ScenarioId.SAME_PENCIL,
        (Step("a", (), "x", 1, "plumbing"), Step("b", (), "bound", 5, "plumbing")),
        5,
        None,
    )
    with pytest.raises(ReportValidationError, match="never used"):
        dangling.validate()
    unanchored = CaseReport(ScenarioId.SAME_PENCIL, (Step("b", (), "bound", 5, " "),), 5, None)
    with pytest.raises(ReportValidationError, match="anchor"):
        unanchored.validate()


def test_lemma_es_bound(record):
    assert lemma_es_bound(record) == Fraction(1, 195)
    bigger = lemma_es_bound(record.with_k3(Fraction(1, 100)))
    assert bigger >= Fraction(1, 195)
    assert (bigger * 2340).denominator == 1
    assert lemma_es_bound(ThreefoldData(chi=1, k3=Fraction(1))) == 1


def test_lemma_es_monotone_in_k3(record):
    bounds = [weak_corollary_bound(record.with_k3(Fraction(n, 1170))) for n in (1, 2, 4, 8, 50)]
    assert bounds == sorted(bounds, reverse=True)


def test_weak_corollary(record):
    assert weak_corollary_bound(record) == 59
    assert weak_corollary_bound(record, l2_lower=Fraction(1, 100), beta_tilde=Fraction(1, 10)) == 48
    assert weak_corollary_bound(record, beta_tilde=1) == max(39 + 20, 21, 38)


def test_surface_invariant_constraint(record):
    assert not surface_invariant_constraint(record, 2)
    assert surface_invariant_constraint(record, 1)
    assert surface_invariant_constraint(record.with_k3(1), 2)


def test_theorem_57(record):
    assert theorem_57(record) == 57
    assert [r.derived_bound for r in run_all(record)] == [52, 57, 57, 48, 57, 57]


def test_theorem_57_premise_gate(record):
    with pytest.raises(PremiseError, match="delta = 18"):
        theorem_57(ThreefoldData(chi=1, k3=Fraction(14), pg=0))


def test_corollary_r3(record):
    assert corollary_r3(record) == 57
    assert combine_r3(50) == 56


def test_empty_basket_es_degenerate():
    data = ThreefoldData(chi=1, basket=Basket(), k3=Fraction(1, 3))
    assert lemma_es_bound(data) == 1

"""End-to-end replay of the delta = 18 argument on a threefold record."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .basket import cartier_index
from .bounds import es_contradiction_numerator
from .cases import (
    BETA_DISTINCT,
    CITED_RESULTS,
    CURVE_DEG_MIN,
    SCENARIOS,
    CaseReport,
    ScenarioId,
    combine_r3,
    fmt,
    lemma_es_bound,
    run_scenario,
    surface_invariant_constraint,
    theorem_57,
    weak_corollary_bound,
)
from .fixtures import DELTA18_PLURIGENERA
from .riemann_roch import ThreefoldData, delta_index, plurigenus_table, positivity_threshold, solve_k3

POSITIVITY_WINDOW = (20, 7020)

EXPECTED_BOUNDS = {
    ScenarioId.SAME_PENCIL: 52,
    ScenarioId.DISTINCT_V5_CASE1: 57,
    ScenarioId.DISTINCT_V5_CASE2: 57,
    ScenarioId.DISTINCT_V4_I1: 48,
    ScenarioId.DISTINCT_V4_I2: 57,
    ScenarioId.DISTINCT_V4_II: 57,
}


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    anchor: str


@dataclass
class VerificationRun:
    checks: list[CheckResult]
    reports: list[CaseReport]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]


def _check(name: str, anchor: str, fn: Callable[[], tuple[bool, str]]) -> CheckResult:
    try:
        passed, detail = fn()
    except (ArithmeticError, ValueError, KeyError) as exc:
        passed, detail = False, f"error: {exc}"
    return CheckResult(name, passed, detail, anchor)


def _eq(got, want) -> tuple[bool, str]:
    return got == want, f"got {fmt(got)}, expected {fmt(want)}"


def run_verification(data: ThreefoldData) -> VerificationRun:
    """Run every check in order; failures never stop later checks."""
    checks: list[CheckResult] = []
    reports: list[CaseReport] = []
    add = checks.append

    add(_check("solve_k3", "K^3 = 1/1170 from chi = 2, P2 = 0 and the basket",
               lambda: _eq(solve_k3(data), Fraction(1, 1170))))

    def table(m_max):
        return dict(plurigenus_table(data, m_max))

    def pluri_values():
        t = table(36)
        got = {m: t[m] for m in DELTA18_PLURIGENERA}
        return _eq(got, DELTA18_PLURIGENERA)

    add(_check("plurigenera", "P8 = 1, P18 = 2, P19 = 0, P24 = 3, P36 = 8", pluri_values))

    def small_m():
        t = table(17)
        bad = [m for m, v in t.items() if v not in (0, 1)]
        return not bad, "P_m in {0, 1} for 2 <= m <= 17" if not bad else f"P_m >= 2 at m = {bad}"

    add(_check("low plurigenera", "P_m <= 1 below 18", small_m))

    def positivity():
        lo, hi = POSITIVITY_WINDOW
        t = table(hi)
        bad = [m for m in range(lo, hi + 1) if t[m] <= 0]
        threshold = positivity_threshold(data)
        ok = not bad and threshold <= hi
        return ok, f"P_m > 0 on [{lo}, {hi}], cubic term dominates from m = {threshold}" if ok else \
            f"non-positive at {bad[:5]}, domination from {threshold}"

    add(_check("positivity", "P_m > 0 for all m >= 20", positivity))
    add(_check("delta_index", "delta(X) = 18", lambda: _eq(delta_index(data), 18)))
    add(_check("cartier_index", "r_X = 2340", lambda: _eq(cartier_index(data.basket), 2340)))
    add(_check("es_numerator", "L^2 <= 11/2340 is contradictory",
               lambda: _eq(es_contradiction_numerator(data.k3, cartier_index(data.basket),
                                                      BETA_DISTINCT, CURVE_DEG_MIN), 11)))
    add(_check("lemma_es_bound", "L^2 >= 1/195", lambda: _eq(lemma_es_bound(data), Fraction(1, 195))))
    add(_check("weak_corollary", "birational for m >= 59", lambda: _eq(weak_corollary_bound(data), 59)))

    for sid in ScenarioId:
        def scenario(sid=sid):
            report = run_scenario(SCENARIOS[sid], data)
            reports.append(report)
            ok = report.derived_bound == EXPECTED_BOUNDS[sid] and report.consistent
            return ok, (f"bound {report.derived_bound} (expected {EXPECTED_BOUNDS[sid]}), "
                        f"claimed {report.paper_claim}, consistent={fmt(report.consistent)}")
        add(_check(f"scenario {sid.value}", f"birational for m >= {SCENARIOS[sid].paper_claim}", scenario))

    def surface():
        ok = not surface_invariant_constraint(data, 2) and surface_invariant_constraint(data, 1)
        return ok, "K_{F0}^2 = 2 excluded, K_{F0}^2 = 1 admitted" if ok else "surface constraint mismatch"

    add(_check("surface_invariants", "1/1014 > 1/1170 forces (K^2, p_g) = (1, 1)", surface))
    add(_check("theorem_57", "r_s(X) <= 57 when delta = 18", lambda: _eq(theorem_57(data), 57)))

    def r3():
        bound = combine_r3(theorem_57(data))
        cited = "; ".join(name for name, _ in CITED_RESULTS)
        ok, detail = _eq(bound, 57)
        return ok, f"{detail}; cited: {cited}"

    add(_check("corollary_r3", "r_3 <= 57", r3))
    return VerificationRun(checks, reports)

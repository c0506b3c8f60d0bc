"""Replayable case analysis for minimal 3-folds with ps-index 18.

The geometry of each case (which pencils coincide, how |36K| restricts to
a fibre) cannot be decided from numbers.  Each :class:`Scenario` therefore
carries the numerical constants its case supplies plus the named geometric
hypotheses they rest on; :func:`run_scenario` replays the arithmetic and
records every intermediate value in a :class:`CaseReport`.

The six scenarios cover the case tree::

    |18K|, |24K| same pencil                        SAME_PENCIL
    distinct pencils, dim V36 >= 5, dim W36 >= 4    DISTINCT_V5_CASE1
    distinct pencils, dim V36 >= 5, dim W36 <= 3    DISTINCT_V5_CASE2
    distinct pencils, dim V36 <= 4, same pencil     DISTINCT_V4_I1
    distinct pencils, dim V36 <= 4, other pencil    DISTINCT_V4_I2
    distinct pencils, dim V36 <= 4, not a pencil    DISTINCT_V4_II
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from .basket import cartier_index
from .bounds import (
    DISTINGUISH_FLOOR,
    RestrictionBound,
    XiProblem,
    cartier_refine,
    es_contradiction_numerator,
    min_degree_given_sections,
    nu_ratio,
    optimize_xi,
    pencil_restriction_bound,
    prop_k1_bound,
)
from .riemann_roch import DataError, ThreefoldData, delta_index, plurigenus, resolve_k3

__all__ = [
    "ScenarioId",
    "Scenario",
    "Step",
    "CaseReport",
    "PremiseError",
    "ReportValidationError",
    "SCENARIOS",
    "CITED_RESULTS",
    "run_scenario",
    "run_all",
    "lemma_es_bound",
    "weak_corollary_bound",
    "surface_invariant_constraint",
    "theorem_57",
    "corollary_r3",
    "combine_r3",
    "fmt",
]

PLUMBING = "plumbing"

# Restriction-to-fibre coefficient when pi^*K >= 1/18 F; the default beta~.
BETA_TILDE_DEFAULT = Fraction(1, 19)
# beta for C in |M_24|_F| (24 pi^*K >= M_24)
BETA_DISTINCT = Fraction(1, 24)
# (sigma^*K_{F0} . C) >= 2 for moving curves on a surface that is not a (1,2) surface
CURVE_DEG_MIN = 2

# Results imported from the earlier classification, used as constants.
CITED_RESULTS = (
    ("delta <= 15 implies phi_m birational for m >= 56", 56),
    ("delta is never 16 or 17", None),
    ("delta = 18 implies p_g(F) = 1 for the |18K| fibre", None),
)
DELTA_LOW_BOUND = 56

# 24 pi^*K ~ 2F + E' when P24 = 3 and |24K| is the |18K| pencil
SAME_PENCIL_NU0 = Fraction(2, 24)


class PremiseError(DataError):
    """Data contradicts a constant a scenario relies on."""

    def __init__(self, detail: str):
        super().__init__(f"scenario premise violated: {detail}")


class ReportValidationError(ValueError):
    pass


class ScenarioId(str, enum.Enum):
    SAME_PENCIL = "SAME_PENCIL"
    DISTINCT_V5_CASE1 = "DISTINCT_V5_CASE1"
    DISTINCT_V5_CASE2 = "DISTINCT_V5_CASE2"
    DISTINCT_V4_I1 = "DISTINCT_V4_I1"
    DISTINCT_V4_I2 = "DISTINCT_V4_I2"
    DISTINCT_V4_II = "DISTINCT_V4_II"


@dataclass(frozen=True)
class Scenario:
    id: ScenarioId
    inputs: tuple[tuple[str, Any], ...]
    premises: tuple[tuple[int, int], ...]
    assumptions: tuple[str, ...]
    paper_claim: Optional[int] = None

    def get(self, name: str):
        return dict(self.inputs)[name]


def fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, (tuple, list)):
        return "(" + ", ".join(fmt(v) for v in value) + ")"
    return str(value)


@dataclass(frozen=True)
class Step:
    op: str
    inputs: tuple[tuple[str, Any], ...]
    name: str
    output: Any
    anchor: str

    def line(self) -> str:
        args = ", ".join(f"{k}={fmt(v)}" for k, v in self.inputs)
        return f"{self.op} | {args} | {self.name}={fmt(self.output)} | {self.anchor}"


@dataclass(frozen=True)
class CaseReport:
    scenario_id: ScenarioId
    steps: tuple[Step, ...]
    derived_bound: int
    paper_claim: Optional[int]
    assumptions: tuple[str, ...] = ()

    @property
    def consistent(self) -> bool:
        return self.paper_claim is None or self.derived_bound <= self.paper_claim

    def validate(self) -> None:
        """Every step is anchored and feeds a later step (the last one is the bound)."""
        if not self.steps:
            raise ReportValidationError("empty report")
        for i, step in enumerate(self.steps):
            if not step.anchor.strip():
                raise ReportValidationError(f"step {step.op} has no anchor")
            if i == len(self.steps) - 1:
                continue
            if not any(step.name == k for later in self.steps[i + 1:] for k, _ in later.inputs):
                raise ReportValidationError(f"value {step.name} from {step.op} is never used")
        if self.steps[-1].output != self.derived_bound:
            raise ReportValidationError("final step does not produce the derived bound")

    def to_certificate(self) -> str:
        lines = [f"# scenario {self.scenario_id.value}"]
        lines += [f"# assume: {a}" for a in self.assumptions]
        lines += [s.line() for s in self.steps]
        if self.paper_claim is not None:
            lines.append(f"# claimed {self.paper_claim}, consistent={fmt(self.consistent)}")
        lines.append(f"BOUND {self.derived_bound}")
        return "\n".join(lines) + "\n"


class _Chain:
    """Collects steps while a scenario runs."""

    def __init__(self):
        self.steps: list[Step] = []

    def add(self, op, inputs, name, output, anchor=PLUMBING):
        self.steps.append(Step(op, tuple(inputs), name, output, anchor))
        return output


_VANISHING = "Kawamata-Viehweg vanishing on X' and on F"
_DISTINGUISH = "|mK| distinguishes fibres of the |18K| pencil for m >= 38 (q = 0, rational pencil)"
_NOT_12 = "F0 is not a (K^2, p_g) = (1, 2) surface, so moving curves have sigma^*K_{F0}-degree >= 2"

SCENARIOS: dict[ScenarioId, Scenario] = {
    ScenarioId.SAME_PENCIL: Scenario(
        ScenarioId.SAME_PENCIL,
        inputs=(
            ("m1", 24),
            ("deg_KC", 6),
            ("xi_floor", Fraction(1, 5)),
        ),
        premises=((18, 2), (24, 3)),
        assumptions=(
            "|18K| and |24K| are composed of the same rational pencil, so 24 pi^*K ~ (P24 - 1) F + E'",
            "C' in |2 sigma^*K_{F0}| is even and base point free; deg K_{C'} = 6 K_{F0}^2 >= 6 by adjunction",
            "L >= beta~ sigma^*K_{F0} = (beta~/2) C', so the curve coefficient is beta~/2",
            _NOT_12,
            _VANISHING,
        ),
        paper_claim=53,
    ),
    ScenarioId.DISTINCT_V5_CASE1: Scenario(
        ScenarioId.DISTINCT_V5_CASE1,
        inputs=(("h0_D36", 4), ("genus_min", 2), ("m1", 24), ("m2", 36)),
        premises=((18, 2), (24, 3), (36, 8)),
        assumptions=(
            "|18K| and |24K| are not the same pencil",
            "dim V36 >= 5 and dim W36 >= 4, so h0(C, D36) >= 4 with g(C) >= 2",
            "L^2 >= (M36|_F . M24|_F) / (36 * 24)",
            _NOT_12,
            _VANISHING,
        ),
        paper_claim=57,
    ),
    ScenarioId.DISTINCT_V5_CASE2: Scenario(
        ScenarioId.DISTINCT_V5_CASE2,
        inputs=(("curves_in_G36", 2), ("m2", 36)),
        premises=((18, 2), (24, 3), (36, 8)),
        assumptions=(
            "|18K| and |24K| are not the same pencil",
            "dim V36 >= 5 and dim W36 <= 3, so G36 >= C + C'' with C'' moving",
            _NOT_12,
            _VANISHING,
        ),
        paper_claim=57,
    ),
    ScenarioId.DISTINCT_V4_I1: Scenario(
        ScenarioId.DISTINCT_V4_I1,
        inputs=(("v36_max", 4), ("m2", 36), ("K2_F0_min", 1)),
        premises=((18, 2), (24, 3), (36, 8)),
        assumptions=(
            "|18K| and |24K| are not the same pencil",
            "dim V36 <= 4, so h0(M36 - F) >= P36 - 4",
            "Mov|M36 - F| is composed of the same rational pencil as |F|",
            _VANISHING,
        ),
        paper_claim=48,
    ),
    ScenarioId.DISTINCT_V4_I2: Scenario(
        ScenarioId.DISTINCT_V4_I2,
        inputs=(("s_offset", 37), ("threshold", 2)),
        premises=((18, 2), (24, 3), (36, 8)),
        assumptions=(
            "|18K| and |24K| are not the same pencil",
            "dim V36 <= 4 and Mov|M36 - F| is a rational pencil |F1| different from |F|",
            "|K + ceil(s pi^*K) + F + F1| is contained in |(s + 37) K|",
            _NOT_12,
            _VANISHING,
            _DISTINGUISH,
        ),
        paper_claim=57,
    ),
    ScenarioId.DISTINCT_V4_II: Scenario(
        ScenarioId.DISTINCT_V4_II,
        inputs=(("s_offset", 37), ("threshold", 2)),
        premises=((18, 2), (24, 3), (36, 8)),
        assumptions=(
            "|18K| and |24K| are not the same pencil",
            "dim V36 <= 4 and Mov|M36 - F| is not composed of a pencil",
            "|K + ceil(s pi^*K) + F + S_-1| is contained in |(s + 37) K|",
            "|G_-1| elements are distinguished for s >= 20",
            _NOT_12,
            _VANISHING,
            _DISTINGUISH,
        ),
        paper_claim=57,
    ),
}


def _check_premises(s: Scenario, data: ThreefoldData) -> dict[int, int]:
    found = {}
    for m, want in s.premises:
        try:
            got = plurigenus(data, m)
        except DataError as exc:
            raise PremiseError(f"{s.id.value} needs P{m} = {want}: {exc}") from None
        if got != want:
            raise PremiseError(f"{s.id.value} needs P{m} = {want}, data gives {got}")
        found[m] = got
    if data.q != 0:
        raise PremiseError(f"{s.id.value} needs q = 0 for rational pencils, data gives q = {data.q}")
    return found


def _fibre_beta_tilde(chain: _Chain, p18: int) -> Fraction:
    # 18 pi^*K >= (P18 - 1) F over a rational pencil
    nu0 = chain.add("fibre_multiple", [("P18", p18), ("m0", 18)], "nu0_18", Fraction(p18 - 1, 18),
                    "18 pi^*K >= a_18 F with a_18 = P18 - 1")
    return chain.add("nu_ratio", [("nu0_18", nu0)], "beta_tilde", nu_ratio(nu0),
                     "restriction ratio nu0/(nu0+1); beta~ = 1/19 in practice")


def _prop_bound(chain: _Chain, L2, bt, l2_name="L2", bt_name="beta_tilde") -> int:
    rb = RestrictionBound(L2, bt, DISTINGUISH_FLOOR)
    return chain.add(
        "prop_k1_bound",
        [(l2_name, L2), (bt_name, bt), ("floor", DISTINGUISH_FLOOR)],
        "bound",
        prop_k1_bound(rb),
        "birational for m >= max(floor(sqrt(8/L^2)) + 20, 2/beta~ + 19, 38)",
    )


def _same_pencil(s: Scenario, data: ThreefoldData, P: dict[int, int], chain: _Chain) -> int:
    m1 = s.get("m1")
    a24 = chain.add("pencil_degree", [("P24", P[24])], "a_24", P[24] - 1,
                    "rational pencil: a_24 = P24 - 1")
    nu0 = chain.add("fibre_multiple", [("a_24", a24), ("m1", m1)], "nu0", Fraction(a24, m1),
                    "24 pi^*K ~ 2F + E'_24")
    bt = chain.add("nu_ratio", [("nu0", nu0)], "beta_tilde", nu_ratio(nu0),
                   "L >= 1/13 sigma^*K_{F0}")
    beta_c = chain.add("curve_coefficient", [("beta_tilde", bt)], "beta_curve", bt / 2,
                       "C' in |2 sigma^*K_{F0}|, L >= (beta~/2) C'")
    m0_over_a = Fraction(m1, a24)
    p = XiProblem(s.get("deg_KC"), m0_over_a, beta_c, even_curve=True)
    xi_engine = chain.add(
        "optimize_xi",
        [("deg_KC", p.deg_KC), ("m0_over_a", m0_over_a), ("beta_curve", beta_c), ("even", True)],
        "xi_engine", optimize_xi(p), "iterated degree inequalities on an even curve")
    floor_ = s.get("xi_floor")
    xi = chain.add("max", [("xi_engine", xi_engine), ("xi_floor", floor_)], "xi", max(xi_engine, floor_),
                   "(L . C') >= 1/5")
    L2 = chain.add("restrict", [("beta_curve", beta_c), ("xi", xi)], "L2", beta_c * xi,
                   "L^2 >= (1/26)(L . C') >= 1/130")
    return _prop_bound(chain, L2, bt)


def _v5_case1(s: Scenario, data: ThreefoldData, P: dict[int, int], chain: _Chain) -> int:
    bt = _fibre_beta_tilde(chain, P[18])
    d = chain.add("min_degree_given_sections", [("h0", s.get("h0_D36")), ("genus_min", s.get("genus_min"))],
                  "deg_D36", min_degree_given_sections(s.get("h0_D36"), s.get("genus_min")),
                  "Riemann-Roch and Clifford: deg D36 >= 5")
    scale = s.get("m1") * s.get("m2")
    L2 = chain.add("restrict", [("deg_D36", d), ("m1_m2", scale)], "L2", Fraction(d, scale),
                   "L^2 >= 5/(36*24)")
    return _prop_bound(chain, L2, bt)


def _v5_case2(s: Scenario, data: ThreefoldData, P: dict[int, int], chain: _Chain) -> int:
    bt = _fibre_beta_tilde(chain, P[18])
    n = s.get("curves_in_G36")
    LG = chain.add("two_curve_degree", [("beta_tilde", bt), ("curves", n), ("curve_deg_min", CURVE_DEG_MIN)],
                   "L_dot_G36", bt * n * CURVE_DEG_MIN, "(L . G36) >= (1/19)(2 + 2) = 4/19")
    L2 = chain.add("restrict", [("L_dot_G36", LG), ("m2", s.get("m2"))], "L2", LG / s.get("m2"),
                   "L^2 >= (1/36)(L . G36) >= 1/171")
    return _prop_bound(chain, L2, bt)


def _v4_i1(s: Scenario, data: ThreefoldData, P: dict[int, int], chain: _Chain) -> int:
    m2 = s.get("m2")
    h0 = chain.add("section_split", [("P36", P[36]), ("v36_max", s.get("v36_max"))], "h0_M36_minus_F",
                   P[36] - s.get("v36_max"), "h0(M36 - F) >= P36 - dim V36 >= 4")
    a = chain.add("pencil_degree", [("h0_M36_minus_F", h0)], "a_36", h0 - 1,
                  "rational pencil: M_{36,-1} >= 3 F1")
    nu0 = chain.add("fibre_multiple", [("a_36", a), ("m2", m2)], "nu0", Fraction(1 + a, m2),
                    "36 pi^*K >= 4F")
    bt = chain.add("nu_ratio", [("nu0", nu0)], "beta_tilde", nu_ratio(nu0), "L >= 1/10 sigma^*K_{F0}")
    L2 = chain.add("square", [("beta_tilde", bt), ("K2_F0_min", s.get("K2_F0_min"))], "L2",
                   bt * bt * s.get("K2_F0_min"), "L^2 >= 1/100")
    return _prop_bound(chain, L2, bt)


def _v4_pencil(s: Scenario, data: ThreefoldData, P: dict[int, int], chain: _Chain) -> int:
    bt = _fibre_beta_tilde(chain, P[18])
    xi = chain.add("curve_degree", [("beta_tilde", bt), ("curve_deg_min", CURVE_DEG_MIN)], "xi_min",
                   bt * CURVE_DEG_MIN, "(L . C_1) >= 2/19")
    offset, threshold = s.get("s_offset"), s.get("threshold")
    m = chain.add("pencil_restriction_bound", [("s_offset", offset), ("xi_min", xi), ("threshold", threshold)],
                  "m_curve", pencil_restriction_bound(offset, xi, threshold),
                  "deg D > 2 whenever s >= 20, giving m = s + 37")
    return chain.add("max", [("m_curve", m), ("floor", DISTINGUISH_FLOOR)], "bound", max(m, DISTINGUISH_FLOOR),
                     "|mK| distinguishes fibres for m >= 38")


_RUNNERS = {
    ScenarioId.SAME_PENCIL: _same_pencil,
    ScenarioId.DISTINCT_V5_CASE1: _v5_case1,
    ScenarioId.DISTINCT_V5_CASE2: _v5_case2,
    ScenarioId.DISTINCT_V4_I1: _v4_i1,
    ScenarioId.DISTINCT_V4_I2: _v4_pencil,
    ScenarioId.DISTINCT_V4_II: _v4_pencil,
}
assert set(_RUNNERS) == set(ScenarioId) == set(SCENARIOS)


def run_scenario(s: Scenario | ScenarioId, data: ThreefoldData) -> CaseReport:
    if not isinstance(s, Scenario):
        s = SCENARIOS[ScenarioId(s)]
    data = resolve_k3(data)
    P = _check_premises(s, data)
    chain = _Chain()
    bound = _RUNNERS[s.id](s, data, P, chain)
    report = CaseReport(s.id, tuple(chain.steps), bound, s.paper_claim, s.assumptions)
    report.validate()
    return report


def run_all(data: ThreefoldData) -> list[CaseReport]:
    return [run_scenario(SCENARIOS[i], data) for i in ScenarioId]


def lemma_es_bound(data: ThreefoldData, beta=BETA_DISTINCT, curve_deg_min: int = CURVE_DEG_MIN) -> Fraction:
    """Certified lower bound for L^2 when |18K| and |24K| are distinct pencils.

    Finds the largest ``k/r`` that ``L^2 <= k/r`` contradicts, then uses
    integrality of ``r L^2`` to step to the next multiple of 1/r.
    """
    data = resolve_k3(data)
    r = cartier_index(data.basket)
    k = es_contradiction_numerator(data.k3, r, Fraction(beta), curve_deg_min)
    return cartier_refine(Fraction(k, r), r)


def weak_corollary_bound(data: ThreefoldData, beta_tilde=BETA_TILDE_DEFAULT,
                         l2_lower: Optional[Fraction] = None) -> int:
    L2 = lemma_es_bound(data) if l2_lower is None else Fraction(l2_lower)
    return prop_k1_bound(RestrictionBound(L2, Fraction(beta_tilde), DISTINGUISH_FLOOR))


def surface_invariant_constraint(data: ThreefoldData, K2_F0: int) -> bool:
    """Whether ``K_{F0}^2 = K2_F0`` survives under the same-pencil premises.

    With ``pi^*K >= nu0 F`` and ``L >= beta~ sigma^*K_{F0}`` one gets
    ``K^3 >= nu0 * L^2 >= nu0 * beta~^2 * K_{F0}^2``.
    """
    data = resolve_k3(data)
    nu0 = SAME_PENCIL_NU0
    bt = nu_ratio(nu0)
    return nu0 * K2_F0 * bt * bt <= data.k3


def theorem_57(data: ThreefoldData) -> int:
    """Bound on r_s(X) for delta(X) = 18: the worst case over all scenarios."""
    delta = delta_index(data)
    if delta != 18:
        raise PremiseError(f"theorem needs delta = 18, data gives {delta}")
    return max(r.derived_bound for r in run_all(data))


def combine_r3(delta18_bound: int) -> int:
    """Combine a delta = 18 bound with the cited delta <= 15 bound."""
    return max(DELTA_LOW_BOUND, delta18_bound)


def corollary_r3(data: ThreefoldData) -> int:
    return combine_r3(theorem_57(data))

"""Exact plurigenus computations and pluricanonical birationality bounds
for minimal 3-folds of general type with ps-index 18."""

from .basket import (
    Basket,
    BasketPoint,
    Rational,
    basket_contribution,
    cartier_index,
    format_basket,
    local_contribution,
    parse_basket,
)
from .bounds import (
    RestrictionBound,
    XiProblem,
    birational_alpha_test,
    cartier_refine,
    ceil_strict,
    es_contradiction_numerator,
    floor_sqrt,
    min_degree_given_sections,
    mu_zero,
    nu_ratio,
    optimize_xi,
    pencil_restriction_bound,
    prop_k1_bound,
    xi_initial,
    xi_step,
)
from .cases import (
    SCENARIOS,
    CaseReport,
    Scenario,
    ScenarioId,
    corollary_r3,
    lemma_es_bound,
    run_scenario,
    surface_invariant_constraint,
    theorem_57,
    weak_corollary_bound,
)
from .fixtures import delta18
from .riemann_roch import (
    ThreefoldData,
    chi_of_mK,
    delta_index,
    plurigenus,
    plurigenus_table,
    solve_k3,
)

__version__ = "0.1.0"

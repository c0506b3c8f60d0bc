"""The exact inequality toolkit on its own."""

from fractions import Fraction

from threefold_bounds.bounds import (
    RestrictionBound,
    XiProblem,
    cartier_refine,
    floor_sqrt,
    nu_ratio,
    optimize_xi,
    prop_k1_bound,
    xi_initial,
)

print("== 2. THE BOUND ENGINE ===================================")

print("1. strict inequalities stay exact...")
print("   floor_sqrt(1040) =", floor_sqrt(1040), " floor_sqrt(100) =", floor_sqrt(100))
print("   next multiple of 1/2340 above 11/2340:", cartier_refine(Fraction(11, 2340), 2340))

print("2. a fibre coefficient from nu0 = 1/12...")
bt = nu_ratio(Fraction(1, 12))
print("   beta~ =", bt)

print("3. iterating the curve-degree inequality...")
p = XiProblem(deg_KC=6, m0_over_a=12, beta=bt / 2, even_curve=True)
print("   start:", xi_initial(p), " fixed point:", optimize_xi(p))

print("4. from (L^2, beta~) to a birationality bound...")
for L2, beta in [(Fraction(1, 195), Fraction(1, 19)), (Fraction(1, 130), bt), (Fraction(1, 100), Fraction(1, 10))]:
    print(f"   L^2 >= {L2}, beta~ = {beta}  ->  m >= {prop_k1_bound(RestrictionBound(L2, beta))}")

"""Exact inequality toolkit for pluricanonical birationality.

Notation follows the usual fibration set-up: F is a generic irreducible
element of the moving part of |m0 K|, C a generic curve on F, and

    xi      = (pi^*K_X|_F . C)
    alpha_m = (m - 1 - m0/a_{m0} - 1/beta) * xi

where ``pi^*K_X|_F >= beta * C``.  Every strict inequality below is an exact
rational comparison; there is no epsilon anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, isqrt
from typing import Optional

__all__ = [
    "XiProblem",
    "RestrictionBound",
    "floor_sqrt",
    "ceil_strict",
    "xi_initial",
    "xi_step",
    "optimize_xi",
    "birational_alpha_test",
    "mu_zero",
    "nu_ratio",
    "cartier_refine",
    "es_contradiction_numerator",
    "min_degree_given_sections",
    "prop_k1_bound",
    "pencil_restriction_bound",
    "DEFAULT_M_RANGE",
    "DISTINGUISH_FLOOR",
]

DEFAULT_M_RANGE = (2, 200)

# |mK| separates the fibres of the |18K| pencil once mK >= M_18 + F, i.e. m >= 38
DISTINGUISH_FLOOR = 38


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class XiProblem:
    deg_KC: int
    m0_over_a: Fraction
    beta: Fraction
    even_curve: bool = False

    def __post_init__(self):
        object.__setattr__(self, "m0_over_a", _q(self.m0_over_a))
        object.__setattr__(self, "beta", _q(self.beta))
        if self.beta <= 0:
            raise ValueError(f"beta must be positive, got {self.beta}")
        if self.deg_KC < 0:
            raise ValueError(f"deg K_C must be non-negative, got {self.deg_KC}")

    @property
    def shift(self) -> Fraction:
        """``1 + m0/a + 1/beta``; alpha_m = (m - shift) * xi."""
        return 1 + self.m0_over_a + 1 / self.beta

    def alpha(self, xi: Fraction, m: int) -> Fraction:
        return (m - self.shift) * xi


@dataclass(frozen=True)
class RestrictionBound:
    """Certified lower bounds on the restriction L = pi^*K_X|_F."""

    L2_lower: Fraction
    beta_tilde: Fraction
    distinguish_floor: int = DISTINGUISH_FLOOR

    def __post_init__(self):
        object.__setattr__(self, "L2_lower", _q(self.L2_lower))
        object.__setattr__(self, "beta_tilde", _q(self.beta_tilde))
        if self.L2_lower <= 0 or self.beta_tilde <= 0:
            raise ValueError("L^2 lower bound and beta~ must be positive")
        if self.distinguish_floor < 1:
            raise ValueError("distinguish_floor must be at least 1")


def floor_sqrt(x) -> int:
    """Greatest integer n with n^2 <= x, for rational x >= 0."""
    x = _q(x)
    if x.numerator < 0:
        raise ValueError(f"floor_sqrt of negative number {x}")
    # floor(sqrt(p/q)) = floor(sqrt(p*q) / q) = isqrt(p*q) // q
    return isqrt(x.numerator * x.denominator) // x.denominator


def ceil_strict(x) -> int:
    """Least integer strictly greater than x."""
    return floor(_q(x)) + 1


def xi_initial(p: XiProblem) -> Fraction:
    return Fraction(p.deg_KC) / p.shift


def xi_step(p: XiProblem, xi_current: Fraction, m: int) -> Optional[Fraction]:
    """New lower bound for xi from the degree inequality at m, or None.

    On an even curve the ``alpha_m > 0`` form with ``2*ceil(alpha/2)`` is used;
    otherwise ``alpha_m > 1`` and ``ceil(alpha)``.
    """
    alpha = p.alpha(_q(xi_current), m)
    if p.even_curve and alpha > 0:
        return Fraction(p.deg_KC + 2 * ceil(alpha / 2), m)
    if alpha > 1:
        return Fraction(p.deg_KC + ceil(alpha), m)
    return None


def optimize_xi(p: XiProblem, m_range: tuple[int, int] = DEFAULT_M_RANGE) -> Fraction:
    """Iterate :func:`xi_step` over ``m_range`` (inclusive) to a fixed point.

    Each pass keeps the best value found; the loop stops on a pass without
    improvement.  Values live on the finite grid ``{k/m}`` and are bounded
    above (for xi > (deg+2)/shift every step returns less than xi), so the
    loop terminates.
    """
    lo, hi = m_range
    if lo > hi:
        raise ValueError(f"empty m range {m_range}")
    xi = xi_initial(p)
    if xi == 0:
        return xi
    # alpha_m <= 0 for m <= shift, where no step applies
    start = max(lo, floor(p.shift) + 1)
    s, t = p.shift.numerator, p.shift.denominator
    deg, even = p.deg_KC, p.even_curve
    while True:
        # xi_step in integers: alpha_m = (m t - s) a / (t b) with xi = a/b
        a, b = xi.numerator, xi.denominator
        den = t * b
        best_n, best_d = a, b
        for m in range(start, hi + 1):
            num = (m * t - s) * a
            if even:
                c = -(-num // (2 * den)) * 2
            elif num > den:
                c = -(-num // den)
            else:
                continue
            if (deg + c) * best_d > best_n * m:
                best_n, best_d = deg + c, m
        if best_n * b == a * best_d:
            return xi
        xi = Fraction(best_n, best_d)


def birational_alpha_test(p: XiProblem, xi_lower: Fraction, m: int) -> bool:
    """``alpha_m > 2`` with xi replaced by a certified lower bound."""
    return p.alpha(_q(xi_lower), m) > 2


def mu_zero(k3, L2) -> Fraction:
    """``K^3 / (3 L^2)``, the fibre coefficient in pi^*K_X >= mu0 * F."""
    k3, L2 = _q(k3), _q(L2)
    if L2 <= 0:
        raise ValueError(f"L^2 must be positive, got {L2}")
    return k3 / (3 * L2)


def nu_ratio(nu0) -> Fraction:
    """Coefficient nu0/(nu0+1) of sigma^*K_{F0} in L, given pi^*K_X >= nu0 F."""
    nu0 = _q(nu0)
    if nu0 <= 0:
        raise ValueError(f"nu0 must be positive, got {nu0}")
    return nu0 / (nu0 + 1)


def cartier_refine(strict_lower, r: int) -> Fraction:
    """Least multiple of 1/r strictly above ``strict_lower``.

    ``r * L^2`` is an integer when r is the Cartier index, so ``L^2 > x``
    upgrades to ``L^2 >= cartier_refine(x, r)``.
    """
    if r < 1:
        raise ValueError("r must be positive")
    return Fraction(ceil_strict(_q(strict_lower) * r), r)


def _es_contradicts(k3: Fraction, r: int, beta: Fraction, curve_deg_min: int, k: int) -> bool:
    # mu0 = k3 r / 3k, so beta * d * mu0/(mu0+1) > k/r  <=>  beta d k3 r^2 > k (k3 r + 3k)
    a = k3 * r
    return beta * curve_deg_min * a * r > k * (a + 3 * k)


def es_contradiction_numerator(k3, r: int, beta, curve_deg_min: int) -> int:
    """Largest k such that ``L^2 <= k/r`` contradicts itself.

    Assuming ``L^2 <= k/r`` gives ``mu0 >= K^3 r / 3k``, hence
    ``xi >= d * mu0/(mu0+1)`` and ``L^2 >= beta * xi``; the assumption is
    contradictory when that exceeds k/r.  Scans k downward from r.
    """
    k3, beta = _q(k3), _q(beta)
    if k3 <= 0 or beta <= 0 or curve_deg_min < 1 or r < 1:
        raise ValueError("need k3 > 0, beta > 0, curve_deg_min >= 1, r >= 1")
    for k in range(r, 0, -1):
        if _es_contradicts(k3, r, beta, curve_deg_min, k):
            return k
    return 0


def min_degree_given_sections(h0: int, genus_min: int) -> int:
    """Least degree of a divisor with ``h0`` sections on a curve of genus >= genus_min.

    Special divisors obey Clifford (``d >= 2(h0-1)``, needs h0 <= g); non-special
    ones have ``d = h0 + g - 1``.  Both minima are reached at g = genus_min.
    """
    if h0 < 1 or genus_min < 2:
        raise ValueError("need h0 >= 1 and genus_min >= 2")
    candidates = [h0 + genus_min - 1]
    if h0 <= genus_min:
        candidates.append(2 * (h0 - 1))
    return min(candidates)


def prop_k1_bound(rb: RestrictionBound) -> int:
    """Least M with phi_m birational for all m >= M.

    ``max(floor(sqrt(8/L^2)) + 20, ceil(2/beta~) + 19, floor)``.  The first
    term already encodes ``(nL)^2 > 8`` strictly, perfect square or not.
    """
    return max(
        floor_sqrt(8 / rb.L2_lower) + 20,
        ceil(2 / rb.beta_tilde) + 19,
        rb.distinguish_floor,
    )


def pencil_restriction_bound(s_offset: int, xi_min, threshold: int) -> int:
    """``s_min + s_offset`` with ``s_min`` least s such that ``s * xi_min > threshold``."""
    xi_min = _q(xi_min)
    if xi_min <= 0:
        raise ValueError("xi_min must be positive")
    if threshold < 1:
        raise ValueError("threshold must be at least 1")
    s_min = max(1, ceil_strict(threshold / xi_min))
    return s_min + s_offset

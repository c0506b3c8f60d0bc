"""Plurigenera of minimal 3-folds of general type from (K^3, chi, basket).

For ``m >= 2`` higher cohomology of ``mK`` vanishes, so ``P_m = chi(O(mK))``
and Reid's formula gives

    chi(O(mK)) = m(m-1)(2m-1)/12 * K^3 + (1 - 2m) * chi(O) + l(m)

with ``l(m)`` the basket correction.  The formula is affine in K^3, which is
how :func:`solve_k3` inverts it.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional

from .basket import Basket, basket_contribution, cartier_index

__all__ = [
    "ThreefoldData",
    "DataError",
    "MissingK3Error",
    "InconsistentPlurigeneraError",
    "NonIntegralPlurigenusError",
    "DeltaSearchError",
    "chi_of_mK",
    "solve_k3",
    "resolve_k3",
    "plurigenus",
    "plurigenus_table",
    "delta_index",
    "positivity_threshold",
    "monotonicity_threshold",
    "DEFAULT_DELTA_SEARCH_LIMIT",
]

DEFAULT_DELTA_SEARCH_LIMIT = 100


class DataError(ValueError):
    """Input data cannot come from a minimal 3-fold of general type."""


class MissingK3Error(DataError):
    pass


class InconsistentPlurigeneraError(DataError):
    def __init__(self, violations: list[tuple[int, int, Fraction]]):
        self.violations = violations
        detail = ", ".join(f"P{m}: expected {want}, got {got}" for m, want, got in violations)
        super().__init__(f"inconsistent plurigenus data ({detail})")


class NonIntegralPlurigenusError(DataError):
    def __init__(self, m: int, value: Fraction):
        self.m, self.value = m, value
        super().__init__(f"formula output not integral at m={m} (got {value})")


class DeltaSearchError(DataError):
    pass


@dataclass(frozen=True)
class ThreefoldData:
    chi: int
    basket: Basket = field(default_factory=Basket)
    k3: Optional[Fraction] = None
    known_plurigenera: tuple[tuple[int, int], ...] = ()
    q: int = 0
    pg: Optional[int] = None

    def __post_init__(self):
        if self.k3 is not None:
            object.__setattr__(self, "k3", Fraction(self.k3))
            if self.k3 <= 0:
                raise DataError(f"K^3 must be positive for general type, got {self.k3}")
        known = tuple(sorted((int(m), int(v)) for m, v in self.known_plurigenera))
        for m, v in known:
            if m < 2:
                raise DataError(f"plurigenus constraints need m >= 2, got P{m}")
            if v < 0:
                raise DataError(f"plurigenus P{m} must be non-negative, got {v}")
        if len({m for m, _ in known}) != len(known):
            raise DataError("duplicate plurigenus constraint")
        object.__setattr__(self, "known_plurigenera", known)
        if self.q < 0:
            raise DataError("irregularity q must be non-negative")
        if self.pg is not None and self.pg < 0:
            raise DataError("p_g must be non-negative")

    def with_k3(self, k3) -> "ThreefoldData":
        return replace(self, k3=Fraction(k3))


def _cubic(m: int) -> Fraction:
    return Fraction(m * (m - 1) * (2 * m - 1), 12)


def _chi(k3: Fraction, chi: int, basket: Basket, m: int) -> Fraction:
    return _cubic(m) * k3 + (1 - 2 * m) * chi + basket_contribution(basket, m)


def chi_of_mK(data: ThreefoldData, m: int) -> Fraction:
    if m < 2:
        raise ValueError(f"Reid's plurigenus formula is used for m >= 2 only, got m={m}")
    if data.k3 is None:
        raise MissingK3Error("K^3 unknown")
    return _chi(data.k3, data.chi, data.basket, m)


def solve_k3(data: ThreefoldData) -> Fraction:
    """Solve for K^3 from the lowest-m plurigenus constraint.

    Every other constraint, and ``data.k3`` if given, is then checked against
    the solution.
    """
    if not data.known_plurigenera:
        raise MissingK3Error("no plurigenus constraints to solve K^3 from")
    m, value = data.known_plurigenera[0]
    k3 = (value - _chi(Fraction(0), data.chi, data.basket, m)) / _cubic(m)
    if k3 <= 0:
        raise DataError(f"solved K^3 = {k3} is not positive")
    violations = []
    for m, value in data.known_plurigenera[1:]:
        got = _chi(k3, data.chi, data.basket, m)
        if got != value:
            violations.append((m, value, got))
    if data.k3 is not None and data.k3 != k3:
        # report the stated K^3 through the constraint it breaks
        m, value = data.known_plurigenera[0]
        violations.insert(0, (m, value, _chi(data.k3, data.chi, data.basket, m)))
    if violations:
        raise InconsistentPlurigeneraError(violations)
    return k3


def resolve_k3(data: ThreefoldData) -> ThreefoldData:
    """Return ``data`` with K^3 filled in, solving for it when absent."""
    if data.k3 is not None:
        return data
    return data.with_k3(solve_k3(data))


def plurigenus(data: ThreefoldData, m: int) -> int:
    """P_m as a checked non-negative integer (``m >= 1``; m = 1 needs p_g)."""
    if m == 1:
        if data.pg is None:
            raise DataError("p_g not supplied; P_1 is outside the plurigenus formula")
        return data.pg
    value = chi_of_mK(resolve_k3(data), m)
    if value.denominator != 1:
        raise NonIntegralPlurigenusError(m, value)
    if value < 0:
        raise DataError(f"negative plurigenus P{m} = {value}")
    return int(value)


def plurigenus_table(data: ThreefoldData, m_max: int) -> list[tuple[int, int]]:
    if m_max < 2:
        raise ValueError("m_max must be at least 2")
    data = resolve_k3(data)
    # basket term kept as an integer numerator over 2 * r_X, updated one j at a time
    denom = 2 * cartier_index(data.basket)
    points = [(p.b, p.r, n * (denom // (2 * p.r))) for p, n in data.basket.items()]
    local = 0
    rows = []
    for m in range(2, m_max + 1):
        j = m - 1
        for b, r, weight in points:
            t = b * j % r
            local += weight * t * (r - t)
        value = _cubic(m) * data.k3 + (1 - 2 * m) * data.chi + Fraction(local, denom)
        if value.denominator != 1:
            raise NonIntegralPlurigenusError(m, value)
        if value < 0:
            raise DataError(f"negative plurigenus P{m} = {value}")
        rows.append((m, int(value)))
    return rows


def delta_index(data: ThreefoldData, search_limit: int = DEFAULT_DELTA_SEARCH_LIMIT) -> int:
    """Least m >= 1 with P_m >= 2.

    ``P_1 = p_g`` comes from ``data.pg``.  If p_g is missing it can still be
    ruled out when ``P_2 <= 1``, since a non-zero canonical section embeds
    H^0(K) into H^0(2K).
    """
    data = resolve_k3(data)
    table = dict(plurigenus_table(data, max(search_limit, 2)))
    if data.pg is not None:
        if data.pg >= 2:
            return 1
    elif table[2] >= 2:
        raise DataError("p_g is required to decide whether delta = 1 (P_2 >= 2)")
    for m in range(2, search_limit + 1):
        if table[m] >= 2:
            return m
    raise DeltaSearchError(f"delta exceeds search limit {search_limit}")


def positivity_threshold(data: ThreefoldData) -> int:
    """Least M >= 2 with ``m(m-1) K^3 / 12 > chi`` for all m >= M.

    Since the basket term is non-negative, ``P_m >= (2m-1)(m(m-1)K^3/12 - chi)``,
    so every m >= M has P_m > 0.
    """
    data = resolve_k3(data)
    m = 2
    while m * (m - 1) * data.k3 <= 12 * data.chi:
        m += 1
    return m


def monotonicity_threshold(data: ThreefoldData) -> int:
    """Least M >= 2 with ``m^2 K^3 / 2 >= 2 chi`` for all m >= M.

    ``P_{m+1} - P_m = m^2 K^3 / 2 - 2 chi + (basket step)`` and the basket
    step is non-negative, so P is non-decreasing from M on.
    """
    data = resolve_k3(data)
    m = 2
    while m * m * data.k3 < 4 * data.chi:
        m += 1
    return m


def period_of_steps(data: ThreefoldData) -> int:
    """Period of ``l(m+1) - l(m)`` in m: the Cartier index of the basket."""
    return cartier_index(data.basket)

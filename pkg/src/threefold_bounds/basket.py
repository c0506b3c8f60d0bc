"""Baskets of terminal quotient singularities and their Riemann-Roch terms.

A terminal cyclic quotient point of type 1/r(1, -1, b) is recorded only by
its numerical type ``(b, r)``.  All arithmetic is done with
:class:`fractions.Fraction`; nothing in here ever touches a float.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Iterator

Rational = Fraction

__all__ = [
    "Rational",
    "BasketPoint",
    "Basket",
    "BasketSyntaxError",
    "local_contribution",
    "local_step",
    "basket_contribution",
    "cartier_index",
    "parse_basket",
    "format_basket",
]


class BasketSyntaxError(ValueError):
    """Malformed basket text.  ``column`` is 1-based."""

    def __init__(self, message: str, column: int):
        super().__init__(f"{message} (column {column})")
        self.column = column


@dataclass(frozen=True, order=True)
class BasketPoint:
    """A singularity type ``(b, r)`` stored with ``b <= r/2``."""

    b: int
    r: int

    def __post_init__(self):
        b, r = self.b, self.r
        if r < 2 or not 0 < b < r:
            raise ValueError(f"basket point needs 0 < b < r, got ({b},{r})")
        if gcd(b, r) != 1:
            raise ValueError(f"basket point needs gcd(b, r) = 1, got ({b},{r})")
        if 2 * b > r:
            # (b, r) and (r - b, r) are the same singularity
            object.__setattr__(self, "b", r - b)

    def __str__(self) -> str:
        return f"({self.b},{self.r})"


class Basket:
    """Multiset of :class:`BasketPoint`.

    Accepts an iterable of points, ``(b, r)`` pairs, or a mapping
    point -> multiplicity.  Equal points are merged.
    """

    __slots__ = ("_counts",)

    def __init__(self, entries=()):
        counts: Counter[BasketPoint] = Counter()
        items = entries.items() if hasattr(entries, "items") else ((e, 1) for e in entries)
        for point, mult in items:
            if not isinstance(point, BasketPoint):
                point = BasketPoint(*point)
            if mult < 1:
                raise ValueError(f"multiplicity must be positive, got {mult}")
            counts[point] += mult
        self._counts = dict(sorted(counts.items()))

    def items(self) -> Iterator[tuple[BasketPoint, int]]:
        return iter(self._counts.items())

    def points(self) -> Iterator[BasketPoint]:
        """Iterate with repetition."""
        for p, n in self._counts.items():
            for _ in range(n):
                yield p

    def __len__(self) -> int:
        return sum(self._counts.values())

    def __bool__(self) -> bool:
        return bool(self._counts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Basket):
            return NotImplemented
        return self._counts == other._counts

    def __hash__(self) -> int:
        return hash(frozenset(self._counts.items()))

    def __repr__(self) -> str:
        return f"Basket({format_basket(self)!r})"

    def without(self, point: BasketPoint | tuple[int, int]) -> "Basket":
        """Copy with one occurrence of ``point`` removed."""
        if not isinstance(point, BasketPoint):
            point = BasketPoint(*point)
        counts = dict(self._counts)
        if point not in counts:
            raise KeyError(str(point))
        counts[point] -= 1
        return Basket({p: n for p, n in counts.items() if n})


def local_step(q: BasketPoint, j: int) -> Fraction:
    """The j-th summand ``bj*(r - bj) / 2r`` with ``bj`` reduced mod r."""
    t = q.b * j % q.r
    return Fraction(t * (q.r - t), 2 * q.r)


def local_contribution(q: BasketPoint, m: int) -> Fraction:
    """Reid's local correction ``l(q, m)`` to chi(mK).

    Summed directly over ``j = 1 .. m-1``.
    """
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    return sum((local_step(q, j) for j in range(1, m)), Fraction(0))


def basket_contribution(basket: Basket, m: int) -> Fraction:
    return sum((n * local_contribution(p, m) for p, n in basket.items()), Fraction(0))


def cartier_index(basket: Basket) -> int:
    """lcm of the indices r (1 for an empty basket)."""
    return lcm(1, *(p.r for p, _ in basket.items()))


_ITEM = re.compile(r"(?:(\d+)\s*\*\s*)?\(\s*(\d+)\s*,\s*(\d+)\s*\)")


def parse_basket(text: str) -> Basket:
    """Parse ``4*(1,2) (4,9) 3*(1,3)`` style basket text.

    The single word ``empty`` (or blank text) is the empty basket.
    """
    stripped = text.strip()
    if stripped in ("", "empty"):
        return Basket()
    entries: list[tuple[BasketPoint, int]] = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _ITEM.match(text, pos)
        if match is None:
            raise BasketSyntaxError(f"expected N*(b,r) or (b,r) at {text[pos:pos + 12]!r}", pos + 1)
        mult = int(match.group(1)) if match.group(1) else 1
        b, r = int(match.group(2)), int(match.group(3))
        try:
            entries.append((BasketPoint(b, r), mult))
        except ValueError as exc:
            raise BasketSyntaxError(str(exc), pos + 1) from None
        if mult < 1:
            raise BasketSyntaxError("multiplicity must be positive", pos + 1)
        pos = match.end()
    counts: Counter[BasketPoint] = Counter()
    for p, n in entries:
        counts[p] += n
    return Basket(counts)


def format_basket(basket: Basket) -> str:
    if not basket:
        return "empty"
    return " ".join(str(p) if n == 1 else f"{n}*{p}" for p, n in basket.items())


def basket_from_pairs(pairs: Iterable[tuple[int, int]]) -> Basket:
    return Basket(BasketPoint(b, r) for b, r in pairs)

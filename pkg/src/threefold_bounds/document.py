"""Flat ``key = value`` input documents for :class:`ThreefoldData`.

::

    # delta = 18 threefold
    chi = 2
    q = 0
    pg = 0
    basket = 4*(1,2) (4,9) (2,5) (5,13) 3*(1,3) 2*(1,4)
    k3 = 1/1170
    P2 = 0
"""

from __future__ import annotations

import re
from fractions import Fraction

from .basket import BasketSyntaxError, format_basket, parse_basket
from .riemann_roch import DataError, ThreefoldData

__all__ = ["DocumentError", "parse_rational", "parse_document", "format_document", "load_document"]

_RATIONAL = re.compile(r"\s*(-?\d+)(?:\s*/\s*(\d+))?\s*")
_INT = re.compile(r"\s*(-?\d+)\s*")
_PLURI = re.compile(r"P(\d+)")
_KEYS = ("chi", "q", "pg", "basket", "k3")


class DocumentError(ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(where + message)
        self.line, self.column = line, column


def parse_rational(text: str) -> Fraction:
    """Strict ``p/q`` or integer; decimals and floats are rejected."""
    match = _RATIONAL.fullmatch(text)
    if match is None:
        raise ValueError(f"not a rational p/q: {text!r}")
    den = int(match.group(2) or 1)
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(match.group(1)), den)


def _int(text: str) -> int:
    match = _INT.fullmatch(text)
    if match is None:
        raise ValueError(f"not an integer: {text!r}")
    return int(match.group(1))


def parse_document(text: str) -> ThreefoldData:
    fields: dict[str, object] = {}
    plurigenera: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if "=" not in line:
            raise DocumentError("expected 'key = value'", lineno, len(line) - len(line.lstrip()) + 1)
        key_part, value = line.split("=", 1)
        key = key_part.strip()
        vcol = len(key_part) + 2 + len(value) - len(value.lstrip())
        kcol = len(key_part) - len(key_part.lstrip()) + 1
        pm = _PLURI.fullmatch(key)
        if key in fields or (pm and int(pm.group(1)) in plurigenera):
            raise DocumentError(f"duplicate key {key!r}", lineno, kcol)
        try:
            if pm:
                plurigenera[int(pm.group(1))] = _int(value)
            elif key == "basket":
                fields[key] = parse_basket(value)
            elif key == "k3":
                fields[key] = parse_rational(value)
            elif key in _KEYS:
                fields[key] = _int(value)
            else:
                raise DocumentError(f"unknown key {key!r}", lineno, kcol)
        except BasketSyntaxError as exc:
            raise DocumentError(str(exc), lineno, len(key_part) + 1 + exc.column) from None
        except DocumentError:
            raise
        except ValueError as exc:
            raise DocumentError(str(exc), lineno, vcol) from None
    for required in ("chi", "basket"):
        if required not in fields:
            raise DocumentError(f"missing required key {required!r}")
    if "k3" not in fields and not plurigenera:
        raise DocumentError("need k3 or at least one plurigenus constraint P<m>")
    try:
        return ThreefoldData(
            chi=fields["chi"],
            basket=fields["basket"],
            k3=fields.get("k3"),
            known_plurigenera=tuple(plurigenera.items()),
            q=fields.get("q", 0),
            pg=fields.get("pg"),
        )
    except DataError as exc:
        raise DocumentError(str(exc)) from None


def format_document(data: ThreefoldData) -> str:
    lines = [f"chi = {data.chi}", f"q = {data.q}"]
    if data.pg is not None:
        lines.append(f"pg = {data.pg}")
    lines.append(f"basket = {format_basket(data.basket)}")
    if data.k3 is not None:
        lines.append(f"k3 = {data.k3.numerator}/{data.k3.denominator}")
    lines += [f"P{m} = {v}" for m, v in data.known_plurigenera]
    return "\n".join(lines) + "\n"


def load_document(path) -> ThreefoldData:
    with open(path, encoding="utf-8") as fh:
        return parse_document(fh.read())

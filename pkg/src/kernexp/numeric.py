"""Exact nonnegative rationals extended with +infinity.

Kernel entries live in this semiring. Products follow the measure-theoretic
convention ``0 * inf == 0``. There is no subtraction.
"""
from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Union

_LITERAL = re.compile(r"(\d+)(?:/(\d+))?")

Number = Union[int, Fraction, "ExtRat", str]


class ExtRat:
    """A value in ``Q+ u {inf}``.

    Finite values are held as a reduced :class:`fractions.Fraction`;
    infinity is represented internally by ``None``.
    """

    __slots__ = ("_q",)

    def __init__(self, value: Number = 0):
        if isinstance(value, ExtRat):
            q = value._q
        elif isinstance(value, str):
            q = parse(value)._q
        elif isinstance(value, (int, Rational)) and not isinstance(value, bool):
            q = Fraction(value)
            if q < 0:
                raise ValueError(f"negative value {value!r} is not in the semiring")
        elif isinstance(value, bool):
            q = Fraction(int(value))
        else:
            raise TypeError(f"cannot build ExtRat from {type(value).__name__}")
        object.__setattr__(self, "_q", q)

    @classmethod
    def _raw(cls, q):
        obj = object.__new__(cls)
        object.__setattr__(obj, "_q", q)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("ExtRat is immutable")

    @property
    def is_finite(self) -> bool:
        return self._q is not None

    @property
    def is_zero(self) -> bool:
        return self._q is not None and self._q == 0

    @property
    def fraction(self) -> Fraction:
        if self._q is None:
            raise ValueError("infinity has no finite fraction")
        return self._q

    def __bool__(self):
        return not self.is_zero

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self._q is None or other._q is None:
            return INF
        return ExtRat._raw(self._q + other._q)

    __radd__ = __add__

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._q, other._q
        if a is None:
            if b is None:
                return INF
            return ZERO if b == 0 else INF
        if b is None:
            return ZERO if a == 0 else INF
        return ExtRat._raw(a * b)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers are defined")
        if k == 0:
            return ONE
        if self._q is None:
            return INF
        return ExtRat._raw(self._q ** k)

    def _key(self):
        return (1, 0) if self._q is None else (0, self._q)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._q == other._q

    def __hash__(self):
        return hash(("ExtRat", self._q))

    def __lt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._key() < other._key()

    def __le__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._key() <= other._key()

    def __gt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._key() > other._key()

    def __ge__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._key() >= other._key()

    def __repr__(self):
        return f"ExtRat({render(self)!r})"

    def __str__(self):
        return render(self)


def _coerce(x):
    if isinstance(x, ExtRat):
        return x
    if isinstance(x, (int, Rational)) and not isinstance(x, bool):
        return ExtRat(x)
    return NotImplemented


ZERO = ExtRat._raw(Fraction(0))
ONE = ExtRat._raw(Fraction(1))
INF = ExtRat._raw(None)


def ext(x: Number) -> ExtRat:
    """Coerce ``x`` to :class:`ExtRat` (no copy for ExtRat input)."""
    return x if isinstance(x, ExtRat) else ExtRat(x)


def add(a: Number, b: Number) -> ExtRat:
    return ext(a) + ext(b)


def mul(a: Number, b: Number) -> ExtRat:
    return ext(a) * ext(b)


def cmp(a: Number, b: Number) -> int:
    """Three-way comparison: -1, 0 or 1. Infinity is strictly greatest."""
    ka, kb = ext(a)._key(), ext(b)._key()
    return (ka > kb) - (ka < kb)


def total(values) -> ExtRat:
    acc = ZERO
    for v in values:
        acc = acc + v
    return acc


def product(values) -> ExtRat:
    acc = ONE
    for v in values:
        acc = acc * v
    return acc


def render(x: Number) -> str:
    """Text form: ``"p/q"``, ``"p"`` when ``q == 1``, ``"inf"`` for infinity."""
    x = ext(x)
    if x._q is None:
        return "inf"
    q = x._q
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse(text: str) -> ExtRat:
    if not isinstance(text, str):
        raise ValueError(f"expected a rational string, got {text!r}")
    s = text.strip()
    if s == "inf":
        return INF
    m = _LITERAL.fullmatch(s)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return ExtRat._raw(Fraction(int(m.group(1)), den))

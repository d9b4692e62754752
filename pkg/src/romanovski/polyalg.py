"""Exact univariate polynomials with rational coefficients.

Coefficients are stored in ascending order as :class:`fractions.Fraction`.
The zero polynomial has an empty coefficient tuple and degree ``None``.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

import numpy as np

Number = Union[int, Fraction, float, complex]


def to_fraction(value) -> Fraction:
    """Convert ints, Fractions and literals such as ``"3/2"`` or ``"-0.25"`` exactly."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        # exact binary value; callers wanting decimal semantics pass strings
        return Fraction(value)
    raise TypeError(f"cannot convert {value!r} to a rational")


def fraction_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _trim(coeffs: Iterable) -> tuple[Fraction, ...]:
    c = [to_fraction(v) for v in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class RationalPoly:
    """Immutable polynomial over the rationals."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "_c", _trim(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("RationalPoly is immutable")

    # construction helpers
    @classmethod
    def zero(cls) -> "RationalPoly":
        return cls(())

    @classmethod
    def one(cls) -> "RationalPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "RationalPoly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> "RationalPoly":
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Sequence) -> "RationalPoly":
        p = cls.one()
        for r in roots:
            p = p * cls((-to_fraction(r), 1))
        return p

    # basic properties
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int | None:
        return len(self._c) - 1 if self._c else None

    @property
    def is_zero(self) -> bool:
        return not self._c

    @property
    def leading(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def coeff(self, k: int) -> Fraction:
        return self._c[k] if 0 <= k < len(self._c) else Fraction(0)

    # ring operations
    @staticmethod
    def _lift(other) -> "RationalPoly":
        if isinstance(other, RationalPoly):
            return other
        return RationalPoly((to_fraction(other),))

    def __add__(self, other):
        o = self._lift(other)
        n = max(len(self._c), len(o._c))
        return RationalPoly(self.coeff(k) + o.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return RationalPoly(-c for c in self._c)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        if self.is_zero or o.is_zero:
            return RationalPoly.zero()
        out = [Fraction(0)] * (len(self._c) + len(o._c) - 1)
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            for j, b in enumerate(o._c):
                out[i + j] += a * b
        return RationalPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = RationalPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, s) -> "RationalPoly":
        s = to_fraction(s)
        return RationalPoly(s * c for c in self._c)

    def __truediv__(self, s):
        s = to_fraction(s)
        return RationalPoly(c / s for c in self._c)

    def differentiate(self) -> "RationalPoly":
        return RationalPoly(k * c for k, c in enumerate(self._c) if k > 0)

    def monic(self) -> "RationalPoly":
        if self.is_zero:
            raise ZeroDivisionError("zero polynomial has no monic form")
        return self / self.leading

    def compose(self, other: "RationalPoly") -> "RationalPoly":
        out = RationalPoly.zero()
        for c in reversed(self._c):
            out = out * other + c
        return out

    # evaluation
    def __call__(self, x):
        return evaluate(self, x)

    def to_numpy(self, dtype=float) -> np.ndarray:
        return np.array([dtype(c) for c in self._c] or [dtype(0)], dtype=dtype)

    def parity(self) -> int | None:
        """+1 for even, -1 for odd, None when mixed (zero counts as even)."""
        nz = {k % 2 for k, c in enumerate(self._c) if c != 0}
        if not nz or nz == {0}:
            return 1
        if nz == {1}:
            return -1
        return None

    # comparison and display
    def __eq__(self, other):
        if isinstance(other, RationalPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == _trim((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        return f"RationalPoly({[fraction_str(c) for c in self._c]})"

    def __str__(self):
        return self.pretty()

    def pretty(self, var: str = "x") -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k, c in enumerate(self._c):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = fraction_str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{fraction_str(mag)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def latex(self, var: str = "x") -> str:
        if self.is_zero:
            return "0"
        out = ""
        for k, c in enumerate(self._c):
            if c == 0:
                continue
            mag = abs(c)
            coef = (rf"\frac{{{mag.numerator}}}{{{mag.denominator}}}"
                    if mag.denominator != 1 else str(mag.numerator))
            if k == 0:
                body = coef
            else:
                mono = var if k == 1 else f"{var}^{{{k}}}"
                body = mono if mag == 1 else coef + mono
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out


def evaluate(p: RationalPoly, x):
    """Horner evaluation; exact for int/Fraction input, float or complex otherwise.

    numpy arrays are evaluated elementwise in float64 or complex128.
    """
    c = p.coeffs
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        acc = Fraction(0)
        for a in reversed(c):
            acc = acc * x + a
        return acc
    if isinstance(x, np.ndarray):
        kind = complex if np.iscomplexobj(x) else float
        acc = np.zeros_like(x, dtype=kind)
        for a in reversed(c):
            acc = acc * x + kind(a)
        return acc
    if isinstance(x, complex):
        acc = 0j
        for a in reversed(c):
            acc = acc * x + complex(a)
        return acc
    xf = float(x)
    acc = 0.0
    for a in reversed(c):
        acc = acc * xf + float(a)
    return acc


def horner(coeffs: Sequence[Number], x):
    """Horner evaluation of a plain ascending coefficient sequence."""
    acc = 0 * x
    for a in reversed(coeffs):
        acc = acc * x + a
    return acc


def derivative_coeffs(coeffs: Sequence[Number]) -> list:
    return [k * coeffs[k] for k in range(1, len(coeffs))]

"""Rodrigues construction of the polynomial families.

``y_n = (N_n / w) d^n/dx^n [w sigma^n]`` is evaluated without symbolic
calculus: the expression ``P * w * sigma^k`` is closed under differentiation,

    d/dx (P w sigma^k) = (sigma P' + (k sigma' + L) P) w sigma^(k-1),

with L the numerator of w'/w = L/sigma. Starting at (k=n, P=1) and applying
the rule n times lands on (k=0, P=y_n / N_n).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .errors import DomainError
from .hyperclass import (HyperParams, Jacobi, Romanovski, WeightSpec, canonicalize,
                         lambda_n, parse_weight)
from .polyalg import RationalPoly, to_fraction


@dataclass(frozen=True)
class WeightedForm:
    """The expression P(x) w(x) sigma(x)^k for a fixed equation."""

    hp: HyperParams
    k: Fraction
    poly: RationalPoly

    def differentiate(self) -> "WeightedForm":
        sigma = self.hp.sigma
        L = self.hp.pearson_numerator
        new = sigma * self.poly.differentiate() + (sigma.differentiate().scale(self.k) + L) * self.poly
        return WeightedForm(self.hp, self.k - 1, new)


def _hp_of(ws_or_hp) -> HyperParams:
    return ws_or_hp if isinstance(ws_or_hp, HyperParams) else canonicalize(ws_or_hp)


def rodrigues_raw(ws: WeightSpec | HyperParams, n: int) -> RationalPoly:
    """(1/w) d^n/dx^n [w sigma^n] in exact arithmetic."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    form = WeightedForm(_hp_of(ws), Fraction(n), RationalPoly.one())
    for _ in range(n):
        form = form.differentiate()
    return form.poly


def rodrigues_leading(ws: WeightSpec | HyperParams, n: int) -> Fraction:
    """Leading x^n coefficient of rodrigues_raw: prod_{k=1..n} (d + (n+k-2) a)."""
    hp = _hp_of(ws)
    out = Fraction(1)
    for k in range(1, n + 1):
        out *= hp.d + (n + k - 2) * hp.a
    return out


def degree_deficient(ws: WeightSpec | HyperParams, n: int) -> bool:
    """True when rodrigues_raw(ws, n) has degree below n."""
    p = rodrigues_raw(ws, n)
    return p.degree is None or p.degree < n


def eigenvalue_collision(ws: WeightSpec | HyperParams, n: int) -> list[int]:
    """Indices m < n with lambda_m == lambda_n."""
    hp = _hp_of(ws)
    ln = lambda_n(hp, n)
    return [m for m in range(n) if lambda_n(hp, m) == ln]


def rodrigues_raw_float(hp_float: Sequence[float], n: int) -> np.ndarray:
    """Same recurrence in float64 for non-rational parameters (a, b, c, d, e)."""
    a, b, c, d, e = (float(v) for v in hp_float)
    sigma = np.array([c, b, a])
    dsigma = np.array([b, 2 * a])
    L = np.array([e - b, d - 2 * a])
    P = np.array([1.0])
    k = float(n)
    for _ in range(n):
        dP = np.polynomial.polynomial.polyder(P) if P.size > 1 else np.array([0.0])
        t1 = np.polynomial.polynomial.polymul(sigma, dP)
        t2 = np.polynomial.polynomial.polymul(k * dsigma + L, P)
        P = np.polynomial.polynomial.polyadd(t1, t2)
        k -= 1
    return np.asarray(P, dtype=float)


def romanovski_float(p: float, q: float, n: int) -> np.ndarray:
    """Float coefficients of the raw Romanovski polynomial for arbitrary real p, q."""
    return rodrigues_raw_float((1.0, 0.0, 1.0, 2 * (1 - p), q), n)


def _as_small_rational(v) -> Fraction | None:
    if isinstance(v, (int, Fraction, str)):
        return to_fraction(v)
    f = Fraction(float(v))
    return f if f.denominator <= 1024 else None


def romanovski_poly(p, q, n: int) -> np.ndarray:
    """Float64 coefficients of the raw Romanovski polynomial.

    Parameters that are short dyadic rationals (10.5, -4.0, ...) or exact
    rationals go through the exact engine; anything else uses the float
    recurrence.
    """
    rp, rq = _as_small_rational(p), _as_small_rational(q)
    if rp is not None and rq is not None:
        return rodrigues_raw(Romanovski(rp, rq), n).to_numpy()
    return romanovski_float(float(p), float(q), n)


def hypergeometric_residual(hp: HyperParams, y: RationalPoly, n: int) -> RationalPoly:
    """sigma y'' + tau y' - lambda_n y; the zero polynomial for a solution."""
    d1 = y.differentiate()
    return hp.sigma * d1.differentiate() + hp.tau * d1 - y.scale(lambda_n(hp, n))


def romanovski_ode_residual(p, q, n: int) -> RationalPoly:
    """(1+x^2) R'' + (2(1-p)x + q) R' - (n(n-1) + 2n(1-p)) R for R = rodrigues_raw."""
    p, q = to_fraction(p), to_fraction(q)
    R = rodrigues_raw(Romanovski(p, q), n)
    d1 = R.differentiate()
    d2 = d1.differentiate()
    lam = n * (n - 1) + 2 * n * (1 - p)
    return RationalPoly((1, 0, 1)) * d2 + RationalPoly((q, 2 * (1 - p))) * d1 - R.scale(lam)


# --- conventional normalization -------------------------------------------------

def _poch(x: Fraction, n: int) -> Fraction:
    out = Fraction(1)
    for i in range(n):
        out *= x + i
    return out


@dataclass(frozen=True)
class FamilySpec:
    """A weight plus the conventional scale factor n -> N_n of its tables."""

    weight: WeightSpec
    normalizer: Callable[[int], Fraction]
    name: str = ""

    def __hash__(self):
        return hash((self.weight, self.name))

    def __eq__(self, other):
        return isinstance(other, FamilySpec) and (self.weight, self.name) == (other.weight, other.name)


def _default_normalizer(ws: WeightSpec) -> Callable[[int], Fraction]:
    f = ws.family
    if f == "hermite":
        return lambda n: Fraction((-1) ** n)
    if f == "laguerre":
        return lambda n: Fraction(1, math.factorial(n))
    if f == "jacobi":
        return lambda n: Fraction((-1) ** n, 2 ** n * math.factorial(n))
    if f == "bessel":
        # raw constant term is beta^n; the tables fix y_n(0) = 1
        beta = ws.beta
        if beta == 0:
            return lambda n: Fraction(1)
        return lambda n: Fraction(1) / beta ** n
    return lambda n: Fraction(1)


def family(ws: WeightSpec, name: str | None = None) -> FamilySpec:
    return FamilySpec(ws, _default_normalizer(ws), name or ws.family)


def family_from_name(name: str, params: dict | None = None) -> FamilySpec:
    """FamilySpec for a classical family or one of the named Jacobi specializations."""
    key = name.lower().replace("-", "").replace("_", "")
    params = dict(params or {})
    if key in SPECIALIZATIONS or key == "gegenbauer":
        lam = params.get("lam", params.get("alpha", params.get("lambda", 1)))
        return specialized_spec(key, lam)
    return family(parse_weight(key, params))


def family_poly(fs: FamilySpec, n: int) -> RationalPoly:
    """Normalized polynomial N_n * rodrigues_raw in the family's table convention."""
    return rodrigues_raw(fs.weight, n).scale(fs.normalizer(n))


SPECIALIZATIONS = ("legendre", "chebyshev1", "chebyshevi", "chebyshev2", "chebyshevii")


def specialized_spec(kind: str, lam=None) -> FamilySpec:
    """Jacobi specializations with their conventional normalizations.

    Every such polynomial equals c_n P_n^(g,g) with the Jacobi normalization:

    * Legendre: g = 0, c_n = 1
    * Chebyshev I: g = -1/2, c_n = n!/(1/2)_n so that T_n(1) = 1
    * Chebyshev II: g = 1/2, c_n = (n+1)!/(3/2)_n so that U_n(1) = n + 1
    * Gegenbauer(lam): g = lam - 1/2, c_n = (2 lam)_n/(lam + 1/2)_n
    """
    key = kind.lower().replace("-", "").replace("_", "")
    half = Fraction(1, 2)
    jac = lambda n: Fraction((-1) ** n, 2 ** n * math.factorial(n))
    if key == "legendre":
        return FamilySpec(Jacobi(0, 0), jac, "legendre")
    if key in ("chebyshev1", "chebyshevi"):
        return FamilySpec(Jacobi(-half, -half),
                          lambda n: jac(n) * math.factorial(n) / _poch(half, n), "chebyshev1")
    if key in ("chebyshev2", "chebyshevii"):
        return FamilySpec(Jacobi(half, half),
                          lambda n: jac(n) * math.factorial(n + 1) / _poch(3 * half, n), "chebyshev2")
    if key == "gegenbauer":
        lam = to_fraction(1 if lam is None else lam)
        if lam == 0 or lam <= -half:
            raise DomainError("Gegenbauer parameter must satisfy lam > -1/2, lam != 0")
        return FamilySpec(Jacobi(lam - half, lam - half),
                          lambda n: jac(n) * _poch(2 * lam, n) / _poch(lam + half, n),
                          f"gegenbauer({lam})")
    raise ValueError(f"unknown specialization {kind!r}")


def specialized(kind: str, n: int, lam=None) -> RationalPoly:
    return family_poly(specialized_spec(kind, lam), n)


def legendre(n: int) -> RationalPoly:
    return specialized("legendre", n)


def assoc_legendre(l: int, m: int, x: float) -> float:
    """P_l^m(x) = (-1)^m (1-x^2)^(m/2) d^m/dx^m P_l(x), with the usual factorial ratio for m < 0."""
    if abs(m) > l or l < 0:
        raise DomainError("need |m| <= l")
    x = float(x)
    if abs(x) > 1:
        raise DomainError("|x| must not exceed 1")
    if m < 0:
        mm = -m
        return (-1) ** mm * math.factorial(l - mm) / math.factorial(l + mm) * assoc_legendre(l, mm, x)
    d = legendre(l)
    for _ in range(m):
        d = d.differentiate()
    return (-1) ** m * (1 - x * x) ** (m / 2) * float(d(x))

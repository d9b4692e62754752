"""Polar-angle part of V(r, theta) = V1(r) + V2(theta)/r^2 with V2 = -c cot(theta).

With theta = 2 arctan(e^z) one has sin(theta) = sech z, cos(theta) = -tanh z
and sin(theta) d/dtheta = d/dz, so the polar equation times sin^2(theta) becomes

    -Theta'' - (l(l+1) sech^2 z + c sech z tanh z) Theta = -m^2 Theta,

a Scarf II problem (alpha = 1) once

    -b^2 + a(a+1) = l(l+1),   -b(2a+1) = c,   -(a-n)^2 = -m^2.

The solutions are (1+x^2)^(-a/2) exp(-b arctan x) R_n^(a+1/2, -2b)(x) in
x = sinh z = -cot(theta).
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DomainError, InadmissibleError
from .quad import QuadResult, integrate
from .rodrigues import assoc_legendre, romanovski_poly

polyval = np.polynomial.polynomial.polyval

THETA_EPS = 1e-6


def theta_map(theta: float) -> tuple[float, float]:
    """(z, x) with z = ln tan(theta/2) and x = sinh z = -cot(theta)."""
    theta = float(theta)
    if not 0 < theta < math.pi:
        raise DomainError("theta must lie in the open interval (0, pi)")
    return math.log(math.tan(0.5 * theta)), -1 / math.tan(theta)


def theta_from_z(z: float) -> float:
    return 2 * math.atan(math.exp(z))


def clamp_theta_grid(lo: float, hi: float, count: int) -> tuple[np.ndarray, bool]:
    """Inclusive grid with the endpoints pulled into [eps, pi - eps]; flag tells if clamped."""
    clo, chi = max(lo, THETA_EPS), min(hi, math.pi - THETA_EPS)
    clamped = (clo, chi) != (lo, hi)
    if clamped:
        warnings.warn("theta grid clamped to the open interval (0, pi)", stacklevel=2)
    return np.linspace(clo, chi, count), clamped


class ParameterChoice(Enum):
    SOLVE_AB = "solve_ab"
    FIX_A = "fix_a"
    INTEGER_L = "integer_l"


@dataclass(frozen=True)
class NonCentralSpec:
    """Strength c of V2 = -c cot(theta); ctilde = c in units hbar = 2mu = 1."""
    c: float = 0.0
    choice: ParameterChoice = ParameterChoice.SOLVE_AB

    @property
    def ctilde(self) -> float:
        return float(self.c)


@dataclass(frozen=True)
class AngularSolution:
    a: float
    b: float
    residuals: dict


def matching_residuals(a: float, b: float, l: int, m: int, n: int, ctilde: float) -> dict:
    """Absolute residuals of the three matching equations."""
    return {
        "centrifugal": abs(-b * b + a * (a + 1) - l * (l + 1)),
        "strength": abs(-b * (2 * a + 1) - ctilde),
        "energy": abs((a - n) ** 2 - m * m),
    }


def solve_parameters(spec: NonCentralSpec, l: int, m: int, n: int) -> AngularSolution:
    """(a, b) for the chosen branch, with all three residuals reported.

    SOLVE_AB uses the first two equations:
    (a + 1/2)^2 = ((l+1/2)^2 + sqrt((l+1/2)^4 + c^2)) / 2, b = -c/(2a+1).
    FIX_A sets a = m + n and b = -c/(2a+1). INTEGER_L sets a = b = l(l+1), which
    fixes c = -l(l+1)(2 l(l+1) + 1) and n = l(l+1) - m.
    """
    ct = spec.ctilde
    if spec.choice is ParameterChoice.SOLVE_AB:
        h = (l + 0.5) ** 2
        rad = h * h + ct * ct
        u = 0.5 * (h + math.sqrt(rad))
        if u < 0:
            raise InadmissibleError("negative radicand")
        a = math.sqrt(u) - 0.5
        b = -ct / (2 * a + 1)
        if a <= n:
            raise InadmissibleError(f"a = {a} must exceed n = {n}")
    elif spec.choice is ParameterChoice.FIX_A:
        a = float(m + n)
        if 2 * a + 1 == 0:
            raise InadmissibleError("2a + 1 vanishes")
        b = -ct / (2 * a + 1)
        if a <= n:
            raise InadmissibleError(f"a = {a} must exceed n = {n}")
    else:
        a = b = float(l * (l + 1))
        if l * (l + 1) - m < 0:
            raise InadmissibleError("n = l(l+1) - m must be nonnegative")
        ct = -b * (2 * a + 1)
    return AngularSolution(a, b, matching_residuals(a, b, l, m, n, ct))


@dataclass(frozen=True)
class AngularLabel:
    """su(1,1) labels of Z_l^m: j = m + 1/2, m' = l(l+1) + 1/2 = a + 1/2."""
    l: int
    m: int

    @property
    def n(self) -> int:
        return self.l * (self.l + 1) - self.m

    @property
    def j(self) -> float:
        return self.m + 0.5

    @property
    def m_prime(self) -> float:
        return self.l * (self.l + 1) + 0.5

    @property
    def su11(self) -> tuple[float, float]:
        return self.j, self.m_prime

    @property
    def energy(self) -> float:
        return -(self.j - 0.5) ** 2

    def consistent(self) -> bool:
        a = self.l * (self.l + 1)
        return self.m_prime - self.j == self.n and self.energy == -(a - self.n) ** 2


def _polar(a: float, b: float, n: int, theta: np.ndarray) -> np.ndarray:
    """(1+cot^2)^(-a/2) exp(-b arctan(-cot)) R_n^(a+1/2, -2b)(-cot) on (0, pi).

    1 + cot^2 = 1/sin^2 and arctan(-cot(theta)) = theta - pi/2 on the whole interval.
    """
    x = -1 / np.tan(theta)
    P = romanovski_poly(a + 0.5, -2 * b, n)
    return np.sin(theta) ** a * np.exp(-b * (theta - 0.5 * math.pi)) * polyval(x, P)


def _theta_array(theta) -> np.ndarray:
    t = np.asarray(theta, dtype=float)
    if np.any(t <= 0) or np.any(t >= math.pi):
        raise DomainError("theta must lie in the open interval (0, pi)")
    return t


def z_polar(l: int, m: int, theta):
    """Theta-part of Z_l^m (unnormalized)."""
    n = l * (l + 1) - m
    if n < 0:
        raise InadmissibleError("n = l(l+1) - m must be nonnegative")
    L = float(l * (l + 1))
    return _polar(L, L, n, _theta_array(theta))


def z_function(l: int, m: int, theta, phi):
    """Z_l^m(theta, phi) = polar part times exp(i m phi)."""
    return z_polar(l, m, theta) * np.exp(1j * m * np.asarray(phi, dtype=float))


def z_self_norm(l: int, m: int, tol: float = 1e-12) -> float:
    """sqrt of the integral of |Z|^2 sin(theta) dtheta dphi, for plotting next to |Y|."""
    # tanh-sinh nodes can round onto the endpoints, where the integrand vanishes
    f = lambda t: (lambda c: z_polar(l, m, c) ** 2 * np.sin(c))(np.clip(t, 1e-15, math.pi - 1e-15))
    r = integrate(f, (0.0, math.pi), tol)
    return math.sqrt(2 * math.pi * r.value)


def spherical_harmonic(l: int, m: int, theta, phi):
    """Y_l^m with the Condon-Shortley phase."""
    if abs(m) > l:
        raise DomainError("need |m| <= l")
    t = np.atleast_1d(np.asarray(theta, dtype=float))
    p = np.array([assoc_legendre(l, m, math.cos(v)) for v in t])
    norm = math.sqrt((2 * l + 1) / (4 * math.pi) * math.factorial(l - m) / math.factorial(l + m))
    out = norm * p * np.exp(1j * m * np.asarray(phi, dtype=float))
    return out if np.ndim(theta) else out[0]


def legendre_rhs(l: int, m: int, theta) -> np.ndarray:
    """(1+cot^2)^(-l/2) R_(l-m)^(l+1/2, 0)(-cot theta)."""
    return _polar(float(l), 0.0, l - m, _theta_array(theta))


def legendre_relation_check(l: int, m: int, grid) -> tuple[float, float]:
    """Mean and max relative deviation of P_l^m(cos) / legendre_rhs over the grid."""
    if not 0 <= m <= l:
        raise DomainError("need 0 <= m <= l")
    t = _theta_array(grid)
    den = legendre_rhs(l, m, t)
    if np.any(den == 0):
        raise ZeroDivisionError("grid hits a zero; resample")
    num = np.array([assoc_legendre(l, m, math.cos(v)) for v in t])
    ratio = num / den
    mean = float(np.mean(ratio))
    return mean, float(np.max(np.abs(ratio - mean)) / abs(mean))


def default_legendre_grid(count: int = 40) -> np.ndarray:
    # irrational offset keeps the nodes away from the Legendre zeros
    return np.linspace(0.1 + 1 / math.e ** 3, math.pi - 0.1, count)


def _legendre_factor(l: int, m: int):
    P = romanovski_poly(l + 0.5, 0, l - m)
    return lambda x: (1 + x * x) ** (-(l + 0.5) / 2) * polyval(x, P)


def infinite_orthogonality_integral(l: int, lp: int, m: int, tol: float = 1e-12,
                                    normalized: bool = True) -> QuadResult:
    """Integral over the real line of sqrt(w_l) R_(l-m) sqrt(w_l') R_(l'-m) dx/(1+x^2).

    w_l = (1+x^2)^(-l-1/2). With ``normalized`` each factor is scaled to unit
    self-norm so the value is a cosine between the two functions.
    """
    if l == lp:
        raise DomainError("need l != l'")
    if not 0 <= m <= min(l, lp):
        raise DomainError("need 0 <= m <= min(l, l')")
    f, g = _legendre_factor(l, m), _legendre_factor(lp, m)
    ln = (-math.inf, math.inf)
    r = integrate(lambda x: f(x) * g(x) / (1 + x * x), ln, tol)
    if not normalized:
        return r
    nf = integrate(lambda x: f(x) ** 2 / (1 + x * x), ln, tol).value
    ng = integrate(lambda x: g(x) ** 2 / (1 + x * x), ln, tol).value
    s = math.sqrt(nf * ng)
    return QuadResult(r.value / s, r.error_estimate / s, r.converged, r.levels_used,
                      r.decay_exponent, r.note)


def noncentral_radial_energy(n_r: int, l: float) -> float:
    """-1/(n_r + l + 1)^2 in units of Z^2 e^4 mu / (2 hbar^2)."""
    return -1 / (n_r + l + 1) ** 2


def effective_l(X: float) -> float:
    """Non-integer angular number l = -1/4 + sqrt(1/4 + X) fed to the radial energy."""
    return -0.25 + math.sqrt(0.25 + X)

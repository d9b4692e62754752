"""Double-exponential quadrature and the orthogonality integrals built on it.

Finite intervals use the tanh-sinh map, half lines exp-sinh and the real line
sinh-sinh. Each level halves the step in t and only the new odd nodes are
evaluated. On infinite intervals the tail decay exponent of the integrand is
estimated first from samples at x = 2^j; an exponent >= -1 means the integral
diverges and the result is flagged non-convergent without summing.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from .errors import DomainError, NonFiniteSample, PoleError
from .hyperclass import WeightSpec
from .polyalg import RationalPoly
from .rodrigues import FamilySpec, family, family_poly

INF = math.inf
HALF_PI = 0.5 * math.pi

DEFAULT_TOL = 1e-12
DEFAULT_RTOL = 1e-10
MAX_LEVELS = 12
DECAY_MARGIN = 1e-6


@dataclass(frozen=True)
class QuadResult:
    value: float
    error_estimate: float
    converged: bool
    levels_used: int
    decay_exponent: float | None = None
    note: str = ""


def finite(a: float, b: float) -> tuple[float, float]:
    return (float(a), float(b))


def half_line(a: float) -> tuple[float, float]:
    return (float(a), INF)


def real_line() -> tuple[float, float]:
    return (-INF, INF)


def _call(f, *args):
    """Call f on arrays, falling back to elementwise evaluation for scalar code."""
    try:
        out = np.asarray(f(*args), dtype=float)
        if out.shape == np.shape(args[0]):
            return out
    except (TypeError, ValueError):
        pass
    return np.array([float(f(*(np.asarray(a).flat[i] for a in args)))
                     for i in range(np.size(args[0]))])


class _Map:
    """Node map t -> (x, dx/dt, dl, dr) for one interval type."""

    def __init__(self, a: float, b: float):
        self.a, self.b = a, b
        if math.isfinite(a) and math.isfinite(b):
            self.kind = "finite"
            self.c = 0.5 * (a + b)
            self.hw = 0.5 * (b - a)
        elif math.isfinite(a):
            self.kind = "right"
        elif math.isfinite(b):
            self.kind = "left"
        else:
            self.kind = "real"

    def nodes(self, t: np.ndarray):
        with np.errstate(over="ignore", under="ignore", invalid="ignore"):
            u = HALF_PI * np.sinh(t)
            du = HALF_PI * np.cosh(t)
            if self.kind == "finite":
                e2 = np.exp(-2 * np.abs(u))
                # distances to the nearer and farther end, free of cancellation
                near = self.hw * 2 * e2 / (1 + e2)
                far = self.hw * 2 / (1 + e2)
                dl = np.where(u < 0, near, far)
                dr = np.where(u < 0, far, near)
                x = np.where(u < 0, self.a + dl, self.b - dr)
                jac = self.hw * du / np.cosh(u) ** 2
                ok = near > 0
            elif self.kind == "right":
                dl = np.exp(u)
                x = self.a + dl
                dr = np.full_like(x, INF)
                jac = dl * du
                ok = (dl > 0) & np.isfinite(dl) & (np.abs(x) < 1e150)
            elif self.kind == "left":
                dr = np.exp(u)
                x = self.b - dr
                dl = np.full_like(x, INF)
                jac = dr * du
                ok = (dr > 0) & np.isfinite(dr) & (np.abs(x) < 1e150)
            else:
                x = np.sinh(u)
                dl = np.full_like(x, INF)
                dr = np.full_like(x, INF)
                jac = np.cosh(u) * du
                ok = np.isfinite(x) & (np.abs(x) < 1e150)
        return x, jac, dl, dr, ok


def _evaluate(f, m: _Map, t: np.ndarray, endpoint_aware: bool):
    x, jac, dl, dr, ok = m.nodes(t)
    vals = np.zeros_like(t)
    if np.any(ok):
        idx = np.flatnonzero(ok)
        xs = x[idx]
        with np.errstate(all="ignore"):
            fv = _call(f, xs, dl[idx], dr[idx]) if endpoint_aware else _call(f, xs)
            terms = fv * jac[idx]
        bad = ~np.isfinite(terms)
        if np.any(bad):
            # far-out nodes may overflow even when the integrand decays; interior nodes may not
            if m.kind == "finite":
                interior = np.minimum(dl[idx], dr[idx]) > 1e-200 * m.hw
            else:
                interior = np.abs(xs) < 1e15
            if np.any(bad & interior & ~np.isfinite(fv)):
                j = idx[np.flatnonzero(bad & interior)[0]]
                raise NonFiniteSample(f"integrand not finite at x={x[j]!r}")
            terms = np.where(bad, 0.0, terms)
        vals[idx] = terms
    return vals


def _decay_exponent(f, m: _Map, endpoint_aware: bool) -> float:
    """Largest estimated power k with |f| ~ |x|^k toward the infinite ends."""
    worst = -INF
    sides = []
    if m.kind in ("right", "real"):
        sides.append(1.0)
    if m.kind in ("left", "real"):
        sides.append(-1.0)
    js = np.array([28.0, 32.0, 36.0, 40.0])
    for sgn in sides:
        xs = sgn * 2.0 ** js
        if m.kind == "right":
            xs = m.a + 2.0 ** js
        elif m.kind == "left":
            xs = m.b - 2.0 ** js
        dl = xs - m.a if math.isfinite(m.a) else np.full_like(xs, INF)
        dr = m.b - xs if math.isfinite(m.b) else np.full_like(xs, INF)
        with np.errstate(all="ignore"):
            fv = np.abs(_call(f, xs, dl, dr) if endpoint_aware else _call(f, xs))
        if not np.all(np.isfinite(fv)):
            return INF
        with np.errstate(divide="ignore"):
            logs = np.log(fv)
        if np.isneginf(logs[-1]):
            continue
        if np.any(np.isneginf(logs)):
            return INF if logs[-1] > logs[0] else worst
        slopes = np.diff(logs) / (4 * math.log(2.0))
        worst = max(worst, float(slopes[-1]), float(slopes[-2]))
    return worst


def _t_range(f, m: _Map, endpoint_aware: bool) -> tuple[float, float]:
    t = np.arange(-7.0, 7.0 + 1e-12, 1.0 / 16)
    terms = np.abs(_evaluate(f, m, t, endpoint_aware))
    big = terms.max() if terms.size else 0.0
    if big == 0.0:
        return -1.0, 1.0
    keep = np.flatnonzero(terms > 1e-18 * big)
    lo, hi = t[keep[0]] - 0.5, t[keep[-1]] + 0.5
    return max(lo, -7.0), min(hi, 7.0)


def integrate(f: Callable, interval: tuple[float, float], tol: float = DEFAULT_TOL,
              rtol: float = DEFAULT_RTOL, max_levels: int = MAX_LEVELS,
              endpoint_aware: bool = False) -> QuadResult:
    """Integrate f over a finite interval, a half line or the real line.

    Parameters
    ----------
    f : callable
        Integrand. Vectorized callables are evaluated on whole node arrays.
        With ``endpoint_aware`` it is called as ``f(x, x - a, b - x)`` where
        both distances are computed without cancellation near the ends.
    interval : (a, b)
        Either end may be infinite.
    tol, rtol : float
        Level doubling stops once successive estimates differ by less than
        ``max(tol, rtol*|I|)``.

    Returns
    -------
    QuadResult
        ``converged`` is False when the estimates failed to contract within
        ``max_levels`` or when the tail decays no faster than ``1/|x|``.
    """
    a, b = float(interval[0]), float(interval[1])
    if not a < b:
        raise DomainError("interval must satisfy a < b")
    m = _Map(a, b)
    decay = None
    if m.kind != "finite":
        decay = _decay_exponent(f, m, endpoint_aware)
        if decay >= -1.0 - DECAY_MARGIN:
            return QuadResult(math.nan, INF, False, 0, decay,
                              f"tail decay exponent {decay:.6g} >= -1: divergent")
    lo, hi = _t_range(f, m, endpoint_aware)
    h = 1.0
    k = np.arange(math.floor(lo), math.ceil(hi) + 1)
    total = float(np.sum(_evaluate(f, m, k.astype(float), endpoint_aware)))
    est = h * total
    prev = est
    err = INF
    for level in range(1, max_levels + 1):
        h *= 0.5
        kk = np.arange(math.floor(lo / h), math.ceil(hi / h) + 1)
        kk = kk[kk % 2 != 0]
        total += float(np.sum(_evaluate(f, m, kk * h, endpoint_aware)))
        est = h * total
        err = abs(est - prev)
        if level >= 3 and err <= max(tol, rtol * abs(est)):
            return QuadResult(est, err, True, level, decay)
        prev = est
    return QuadResult(est, err, False, max_levels, decay, "level estimates did not contract")


# --- Gram matrices --------------------------------------------------------------

@dataclass
class GramReport:
    family: FamilySpec
    nmax: int
    matrix: list[list[QuadResult]]
    admissible_pairs: set = field(default_factory=set)

    def values(self) -> np.ndarray:
        return np.array([[r.value for r in row] for row in self.matrix])

    def diagonal(self) -> np.ndarray:
        return np.array([self.matrix[i][i].value for i in range(self.nmax + 1)])

    def relative_offdiag(self, n: int, m: int) -> float:
        d = self.diagonal()
        return abs(self.matrix[n][m].value) / math.sqrt(abs(d[n] * d[m]))

    def max_admissible_offdiag(self) -> float:
        worst = 0.0
        for n, m in self.admissible_pairs:
            if n != m:
                worst = max(worst, self.relative_offdiag(n, m))
        return worst

    def inadmissible_flagged(self) -> list[tuple[int, int]]:
        out = []
        for n in range(self.nmax + 1):
            for m in range(n, self.nmax + 1):
                if (n, m) not in self.admissible_pairs and not self.matrix[n][m].converged:
                    out.append((n, m))
        return out


def _poly_float(p: RationalPoly) -> np.ndarray:
    return p.to_numpy()


def _weight_integrand(ws: WeightSpec, c: np.ndarray):
    f = ws.family
    polyval = np.polynomial.polynomial.polyval
    if f == "jacobi":
        al, be = float(ws.alpha), float(ws.beta)
        return (lambda x, dl, dr: dr ** al * dl ** be * polyval(x, c)), True
    if f == "laguerre":
        al, be = float(ws.alpha), float(ws.beta)
        return (lambda x, dl, dr: dl ** be * np.exp(-al * x) * polyval(x, c)), True
    return (lambda x: ws.weight(x) * polyval(x, c)), False


def weighted_inner(ws: WeightSpec, p1: RationalPoly, p2: RationalPoly,
                   tol: float = DEFAULT_TOL, rtol: float = DEFAULT_RTOL) -> QuadResult:
    """Integral of w p1 p2 over the support of w."""
    if ws.support is None:
        raise DomainError(f"{ws.family} weight has no real orthogonality interval")
    c = _poly_float(p1 * p2)
    f, aware = _weight_integrand(ws, c)
    return integrate(f, ws.support, tol, rtol, endpoint_aware=aware)


def admissible_pairs(ws: WeightSpec, nmax: int) -> set:
    if ws.family == "romanovski":
        return {(n, m) for n in range(nmax + 1) for m in range(nmax + 1) if ws.admissible(n, m)}
    return {(n, m) for n in range(nmax + 1) for m in range(nmax + 1)}


def gram_matrix(fs: FamilySpec | WeightSpec, nmax: int, tol: float = DEFAULT_TOL,
                rtol: float = DEFAULT_RTOL) -> GramReport:
    """All pairwise weighted inner products up to degree nmax."""
    if nmax < 0:
        raise ValueError("nmax must be nonnegative")
    if not isinstance(fs, FamilySpec):
        fs = family(fs)
    ws = fs.weight
    polys = [family_poly(fs, n) for n in range(nmax + 1)]
    mat: list[list[QuadResult | None]] = [[None] * (nmax + 1) for _ in range(nmax + 1)]
    for n in range(nmax + 1):
        for m in range(n, nmax + 1):
            r = weighted_inner(ws, polys[n], polys[m], tol, rtol)
            mat[n][m] = mat[m][n] = r
    return GramReport(fs, nmax, mat, admissible_pairs(ws, nmax))


# --- closed-form norms and gamma -----------------------------------------------

_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993, 676.5203681218851, -1259.1392167224028,
    771.32342877765313, -176.61502916214059, 12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
)


def gamma_fn(x: float) -> float:
    """Gamma function by the Lanczos approximation (g = 7, 9 terms) with reflection."""
    x = float(x)
    if x <= 0 and x == math.floor(x):
        raise PoleError(f"gamma has a pole at {x}")
    if x < 0.5:
        return math.pi / (math.sin(math.pi * x) * gamma_fn(1.0 - x))
    x -= 1.0
    acc = _LANCZOS[0]
    for i in range(1, 9):
        acc += _LANCZOS[i] / (x + i)
    t = x + _LANCZOS_G + 0.5
    # split the power to keep t^(x+1/2) finite for large x
    half = t ** (0.5 * (x + 0.5))
    return math.sqrt(2 * math.pi) * half * (half * math.exp(-t)) * acc


def romanovski_norm_closed(a: float, n: int) -> float:
    """Squared norm of R_n^(a+1/2, 0) under (1+x^2)^(-a-1/2), for n = 1, 2, 3."""
    a = float(a)
    sp = math.sqrt(math.pi)
    if n not in (1, 2, 3):
        raise DomainError("closed forms exist for n = 1, 2, 3 only")
    if a <= n:
        raise DomainError(f"norm of degree {n} requires a > {n}")
    if n == 1:
        return (2 * a - 1) ** 2 * sp * gamma_fn(a - 1) / (2 * gamma_fn(a + 0.5))
    if n == 2:
        return 2 * sp * (a - 1) * gamma_fn(a - 2) / gamma_fn(a - 0.5) * (3 - 2 * a) ** 2
    return 3 * sp * (a - 2) * gamma_fn(a - 3) / gamma_fn(a - 0.5) * (4 * a * a - 16 * a + 15) ** 2


def bessel_circle_inner(m: int, n: int, nodes: int = 256, alpha=2, beta=2) -> complex:
    """Contour integral of y_m y_n exp(-beta/x) over |x| = 1 by the periodic trapezoid rule."""
    if nodes < 64 or nodes & (nodes - 1):
        raise DomainError("nodes must be a power of two, at least 64")
    from .hyperclass import Bessel
    fs = family(Bessel(alpha, beta))
    cm = _poly_float(family_poly(fs, m))
    cn = _poly_float(family_poly(fs, n))
    phi = 2 * math.pi * np.arange(nodes) / nodes
    x = np.exp(1j * phi)
    polyval = np.polynomial.polynomial.polyval
    w = x ** float(alpha - 2) * np.exp(-float(beta) / x)
    vals = polyval(x, cm) * polyval(x, cn) * w * 1j * x
    return complex(vals.sum() * (2 * math.pi / nodes))

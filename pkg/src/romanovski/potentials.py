"""Closed-form spectra and wavefunctions of exactly solvable potentials.

Units are hbar = 2m = 1, so every problem reads ``-psi'' + v(z) psi = eps psi``.
Radial problems are solved for the reduced function u(z) = z R(z) with the
centrifugal term l(l+1)/z^2 included in the effective potential.

Every wavefunction is a product ``exp(Phi(x)) P(x)`` in a polynomial variable
x = X(z). Derivatives are assembled analytically:

    g'  = e^Phi (Phi' P + P')
    g'' = e^Phi ((Phi'' + Phi'^2) P + 2 Phi' P' + P'')
    psi_z = g' X',   psi_zz = g'' X'^2 + g' X''.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from .errors import (AdmissibilityError, CatalogOnlyError, ComplexRootError, DomainError,
                     PoleError)
from .hyperclass import Bessel, Hermite, Laguerre
from .polyalg import RationalPoly
from .quad import integrate
from .rodrigues import family, family_poly, rodrigues_raw_float, romanovski_poly

polyval = np.polynomial.polynomial.polyval
polyder = np.polynomial.polynomial.polyder


# --- potential catalog ----------------------------------------------------------

@dataclass(frozen=True)
class Oscillator1D:
    """v = w^2/4 (z - 2b/w)^2 - w/2; levels n*w."""
    omega: float = 2.0
    b: float = 0.0
    tag: str = field(default="oscillator1d", init=False)


@dataclass(frozen=True)
class Oscillator3D:
    """v = w^2 z^2/4 + l(l+1)/z^2 on z > 0."""
    omega: float = 2.0
    l: int = 0
    tag: str = field(default="oscillator3d", init=False)


@dataclass(frozen=True)
class Coulomb:
    """v = -2Z/z + l(l+1)/z^2 on z > 0."""
    Z: float = 1.0
    l: int = 0
    tag: str = field(default="coulomb", init=False)


@dataclass(frozen=True)
class Morse:
    A: float
    B: float
    alpha: float = 1.0
    tag: str = field(default="morse", init=False)


@dataclass(frozen=True)
class ScarfII:
    """v = a^2 + (b^2 - a^2 - a*alpha) sech^2(alpha z) + b(2a + alpha) sech tanh."""
    a: float
    b: float
    alpha: float = 1.0
    tag: str = field(default="scarf2", init=False)


@dataclass(frozen=True)
class RosenMorseII:
    """v = a^2 + b^2/a^2 - a(a + alpha) sech^2(alpha z) + 2b tanh(alpha z)."""
    a: float
    b: float
    alpha: float = 1.0
    tag: str = field(default="rosenmorse2", init=False)


@dataclass(frozen=True)
class Eckart:
    A: float
    B: float
    alpha: float = 1.0
    tag: str = field(default="eckart", init=False)


@dataclass(frozen=True)
class ScarfI:
    A: float
    B: float
    alpha: float = 1.0
    tag: str = field(default="scarf1", init=False)


@dataclass(frozen=True)
class PoschlTeller2:
    A: float
    B: float
    alpha: float = 1.0
    tag: str = field(default="poschlteller2", init=False)


@dataclass(frozen=True)
class RosenMorseI:
    """v = -2b cot z + l(l+1)/sin^2 z on (0, pi)."""
    l: int
    b: float
    tag: str = field(default="rosenmorse1", init=False)


@dataclass(frozen=True)
class ExpBarrier:
    """v = A exp(rate z) on the real line."""
    A: float = 1.0
    rate: float = 1.0
    tag: str = field(default="expbarrier", init=False)


PotentialSpec = (Oscillator1D | Oscillator3D | Coulomb | Morse | ScarfII | RosenMorseII | Eckart
                 | ScarfI | PoschlTeller2 | RosenMorseI | ExpBarrier)

POTENTIALS = {cls.__dataclass_fields__["tag"].default: cls for cls in
              (Oscillator1D, Oscillator3D, Coulomb, Morse, ScarfII, RosenMorseII, Eckart,
               ScarfI, PoschlTeller2, RosenMorseI, ExpBarrier)}


def make_potential(tag: str, **params) -> PotentialSpec:
    key = tag.lower().replace("-", "").replace("_", "")
    aliases = {"scarfii": "scarf2", "hydrogen": "coulomb", "rm1": "rosenmorse1",
               "rm2": "rosenmorse2", "scarfi": "scarf1", "pt2": "poschlteller2",
               "osc1d": "oscillator1d", "osc3d": "oscillator3d", "barrier": "expbarrier"}
    key = aliases.get(key, key)
    if key not in POTENTIALS:
        raise DomainError(f"unknown potential {tag!r}")
    cls = POTENTIALS[key]
    if "l" in params:
        params["l"] = int(params["l"])
    return cls(**params)


def domain(ps: PotentialSpec) -> tuple[float, float]:
    if isinstance(ps, (Oscillator3D, Coulomb, Eckart, PoschlTeller2)):
        return (0.0, math.inf)
    if isinstance(ps, RosenMorseI):
        return (0.0, math.pi)
    if isinstance(ps, ScarfI):
        h = 0.5 * math.pi / ps.alpha
        return (-h, h)
    return (-math.inf, math.inf)


def _check_domain(ps, z):
    lo, hi = domain(ps)
    z = np.asarray(z, dtype=float)
    if np.any(z <= lo) and math.isfinite(lo) or np.any(z >= hi) and math.isfinite(hi):
        raise DomainError(f"z outside the open domain ({lo}, {hi})")
    return z


def potential_value(ps: PotentialSpec, z):
    """Potential at z (scalar or array), radial cases including l(l+1)/z^2."""
    z = _check_domain(ps, z)
    match ps:
        case Oscillator1D(omega=w, b=b):
            return 0.25 * w * w * (z - 2 * b / w) ** 2 - 0.5 * w
        case Oscillator3D(omega=w, l=l):
            return 0.25 * w * w * z * z + l * (l + 1) / (z * z)
        case Coulomb(Z=Z, l=l):
            return -2 * Z / z + l * (l + 1) / (z * z)
        case Morse(A=A, B=B, alpha=al):
            return A * A + B * B * np.exp(-2 * al * z) - 2 * B * (A + 0.5 * al) * np.exp(-al * z)
        case ScarfII(a=a, b=b, alpha=al):
            s = 1 / np.cosh(al * z)
            return a * a + (b * b - a * a - a * al) * s * s + b * (2 * a + al) * s * np.tanh(al * z)
        case RosenMorseII(a=a, b=b, alpha=al):
            s = 1 / np.cosh(al * z)
            return a * a + b * b / (a * a) - a * (a + al) * s * s + 2 * b * np.tanh(al * z)
        case Eckart(A=A, B=B, alpha=al):
            return A * A + B * B / (A * A) - 2 * B / np.tanh(al * z) + A * (A - al) / np.sinh(al * z) ** 2
        case ScarfI(A=A, B=B, alpha=al):
            sec = 1 / np.cos(al * z)
            return -A * A + (A * A + B * B - A * al) * sec * sec - B * (2 * A - al) * np.tan(al * z) * sec
        case PoschlTeller2(A=A, B=B, alpha=al):
            cs = 1 / np.sinh(al * z)
            return A * A + (B * B + A * A + A * al) * cs * cs - B * (2 * A + al) * cs / np.tanh(al * z)
        case RosenMorseI(l=l, b=b):
            return -2 * b / np.tan(z) + l * (l + 1) / np.sin(z) ** 2
        case ExpBarrier(A=A, rate=r):
            return A * np.exp(r * z)
    raise DomainError(f"unsupported potential {ps!r}")


# --- spectra --------------------------------------------------------------------

@dataclass(frozen=True)
class SpectrumEntry:
    """Level n with its eigenvalue ``energy`` and a potential-specific ``reduced`` value.

    ScarfII and RosenMorseII: reduced = energy - a^2 (for ScarfII this is
    -(a - n alpha)^2). ExpBarrier: reduced = -energy/(rate/2)^2. Otherwise
    reduced equals energy.
    """
    n: int
    energy: float
    reduced: float


def scarf2_bound_count(a: float, alpha: float = 1.0) -> int:
    """Number of n >= 0 with n < a/alpha."""
    r = a / alpha
    return max(0, math.ceil(r))


def rosen_morse2_params(a: float, b: float, n: int) -> tuple[float, float, float]:
    """Running Jacobi parameters (mu_n, nu_n) and reduced energy e_n (alpha = 1)."""
    if n == a:
        raise PoleError("n = a is a pole of b/(n - a)")
    mu = a - n + b / (n - a)
    nu = a - n - b / (n - a)
    e = b * b / (a * a) - (a - n) ** 2 - b * b / (a - n) ** 2
    return mu, nu, e


def rosen_morse2_bound(a: float, b: float, n: int) -> bool:
    if n >= a:
        return False
    mu, nu, _ = rosen_morse2_params(a, b, n)
    return mu > 0 and nu > 0


def _level(ps: PotentialSpec, n: int) -> SpectrumEntry:
    match ps:
        case ScarfII(a=a, alpha=al):
            if not n < a / al:
                raise AdmissibilityError(f"ScarfII level {n} requires n < a/alpha = {a / al}")
            red = -(a - n * al) ** 2
            return SpectrumEntry(n, a * a + red, red)
        case RosenMorseII(a=a, b=b, alpha=al):
            A, Bs = a / al, b / al ** 2
            if not rosen_morse2_bound(A, Bs, n):
                raise AdmissibilityError(f"RosenMorseII level {n} is not bound")
            _, _, e = rosen_morse2_params(A, Bs, n)
            return SpectrumEntry(n, al * al * (A * A + e), al * al * e)
        case RosenMorseI(l=l, b=b):
            N = n + l + 1
            e = N * N - b * b / (N * N)
            return SpectrumEntry(n, e, e)
        case Coulomb(Z=Z, l=l):
            e = -Z * Z / (n + l + 1) ** 2
            return SpectrumEntry(n, e, e)
        case Oscillator3D(omega=w, l=l):
            e = w * (2 * n + l + 1.5)
            return SpectrumEntry(n, e, e)
        case Oscillator1D(omega=w):
            e = n * w
            return SpectrumEntry(n, e, e)
        case ExpBarrier(rate=r):
            red = (n + 0.5) ** 2
            return SpectrumEntry(n, -(0.5 * r) ** 2 * red, red)
    raise CatalogOnlyError(f"{type(ps).__name__} has no verified spectrum here")


def spectrum(ps: PotentialSpec, nmax: int) -> list[SpectrumEntry]:
    """Levels 0..nmax; AdmissibilityError when nmax exceeds the bound-state range."""
    if nmax < 0:
        raise ValueError("nmax must be nonnegative")
    return [_level(ps, n) for n in range(nmax + 1)]


def bound_state_count(ps: PotentialSpec) -> float:
    match ps:
        case ScarfII(a=a, alpha=al):
            return scarf2_bound_count(a, al)
        case RosenMorseII(a=a, b=b, alpha=al):
            A, Bs = a / al, b / al ** 2
            n = 0
            while n < A and rosen_morse2_bound(A, Bs, n):
                n += 1
            return n
    return math.inf


# --- wavefunctions --------------------------------------------------------------

@dataclass(frozen=True)
class WaveFunction:
    """Eigenfunction in the physical variable z with analytic derivatives.

    ``evaluate(z)`` returns (psi, psi', psi''). For radial problems psi is the
    reduced function u = z R; :meth:`radial` gives R itself.
    """
    potential: PotentialSpec
    n: int
    energy: float
    evaluator: Callable
    radial_problem: bool = False
    bound: bool = True

    def evaluate(self, z):
        return self.evaluator(np.asarray(z, dtype=float))

    def __call__(self, z):
        return self.evaluate(z)[0]

    def radial(self, z):
        z = np.asarray(z, dtype=float)
        return self(z) / z if self.radial_problem else self(z)


def _assemble(phi: Callable, P: np.ndarray, X: Callable):
    """Build psi(z) = exp(Phi(x)) P(x), x = X(z), returning the chain-ruled derivatives.

    ``phi(x)`` returns (Phi, Phi', Phi''); ``X(z)`` returns (x, x', x'').
    """
    P1 = polyder(P) if P.size > 1 else np.zeros(1)
    P2 = polyder(P1) if P1.size > 1 else np.zeros(1)

    def ev(z):
        x, xp, xpp = X(z)
        f0, f1, f2 = phi(x)
        e = np.exp(f0)
        p0, p1, p2 = polyval(x, P), polyval(x, P1), polyval(x, P2)
        with np.errstate(invalid="ignore", over="ignore"):
            g0 = e * p0
            g1 = e * (f1 * p0 + p1)
            g2 = e * ((f2 + f1 * f1) * p0 + 2 * f1 * p1 + p2)
            d1, d2 = g1 * xp, g2 * xp * xp + g1 * xpp
        # far tails: the exponential has underflowed, so the whole product is zero
        dead = e == 0
        if np.any(dead):
            g0, d1, d2 = (np.where(dead, 0.0, v) for v in (g0, d1, d2))
        return g0, d1, d2

    return ev


def _romanovski_phi(A: float, B: float):
    """Phi = -(A/2) ln(1+x^2) - B arctan x."""
    def phi(x):
        s = 1 + x * x
        return (-0.5 * A * np.log(s) - B * np.arctan(x),
                -(A * x + B) / s,
                (-A * (1 - x * x) + 2 * B * x) / (s * s))
    return phi


def scarf2_wavefunction(a: float, b: float, n: int, alpha: float = 1.0) -> WaveFunction:
    """(1+x^2)^(-A/2) exp(-B arctan x) R_n^(A+1/2, -2B)(x), x = sinh(alpha z), A = a/alpha, B = b/alpha."""
    if not 0 <= n < a / alpha:
        raise AdmissibilityError(f"bound states need 0 <= n < a/alpha = {a / alpha}")
    A, B = a / alpha, b / alpha
    P = romanovski_poly(A + 0.5, -2 * B, n)

    def X(z):
        x = np.sinh(alpha * z)
        return x, alpha * np.cosh(alpha * z), alpha * alpha * x

    ps = ScarfII(a, b, alpha)
    return WaveFunction(ps, n, _level(ps, n).energy, _assemble(_romanovski_phi(A, B), P, X))


def scarf2_g(a: float, b: float, n: int, x):
    """The Scarf II solution as a function of x = sinh z (alpha = 1)."""
    x = np.asarray(x, dtype=float)
    P = romanovski_poly(a + 0.5, -2 * b, n)
    f0 = _romanovski_phi(a, b)(x)[0]
    return np.exp(f0) * polyval(x, P)


def rosen_morse1_wavefunction(l: int, b: float, n: int) -> WaveFunction:
    """(1+x^2)^(-N/2) exp(-(b/N) arctan x) R_n^(N, -2b/N)(x), x = -cot z, N = n + l + 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    N = n + l + 1
    P = romanovski_poly(N, -2 * b / N, n)

    def X(z):
        x = -1 / np.tan(z)
        s = 1 + x * x
        return x, s, 2 * x * s

    ps = RosenMorseI(l, b)
    return WaveFunction(ps, n, _level(ps, n).energy, _assemble(_romanovski_phi(N, b / N), P, X))


def rosen_morse1_x(l: int, b: float, n: int, x):
    """Rosen-Morse I eigenfunction expressed in x = -cot z."""
    N = n + l + 1
    x = np.asarray(x, dtype=float)
    P = romanovski_poly(N, -2 * b / N, n)
    return np.exp(_romanovski_phi(N, b / N)(x)[0]) * polyval(x, P)


def _jacobi_float(al: float, be: float, n: int) -> np.ndarray:
    return rodrigues_raw_float((-1.0, 0.0, 1.0, -al - be - 2, be - al), n) * \
        ((-1) ** n / (2 ** n * math.factorial(n)))


def rosen_morse2_wavefunction(a: float, b: float, n: int, alpha: float = 1.0) -> WaveFunction:
    """(1-x)^(nu/2) (1+x)^(mu/2) P_n^(nu, mu)(x), x = tanh(alpha z)."""
    A, Bs = a / alpha, b / alpha ** 2
    if not rosen_morse2_bound(A, Bs, n):
        raise AdmissibilityError(f"level {n} is not bound for a={a}, b={b}")
    mu, nu, _ = rosen_morse2_params(A, Bs, n)
    P = _jacobi_float(nu, mu, n)

    def phi(x):
        return (0.5 * nu * np.log1p(-x) + 0.5 * mu * np.log1p(x),
                -0.5 * nu / (1 - x) + 0.5 * mu / (1 + x),
                -0.5 * nu / (1 - x) ** 2 - 0.5 * mu / (1 + x) ** 2)

    def X(z):
        x = np.tanh(alpha * z)
        s = 1 - x * x
        return x, alpha * s, -2 * alpha * alpha * x * s

    ps = RosenMorseII(a, b, alpha)
    return WaveFunction(ps, n, _level(ps, n).energy, _assemble(phi, P, X))


def hydrogen_wavefunction(n: int, l: int, Z: float = 1.0) -> WaveFunction:
    """u(z) = x^(l+1) exp(-x/2) L_n^(2l+1)(x), x = kappa z, kappa = 2Z/(n+l+1)."""
    if n < 0 or l < 0:
        raise ValueError("n and l must be nonnegative")
    N = n + l + 1
    kappa = 2 * Z / N
    P = family_poly(family(Laguerre(1, 2 * l + 1)), n).to_numpy()

    def phi(x):
        return (l + 1) * np.log(x) - 0.5 * x, (l + 1) / x - 0.5, -(l + 1) / (x * x)

    def X(z):
        return kappa * z, kappa + 0 * z, 0 * z

    ps = Coulomb(Z, l)
    return WaveFunction(ps, n, _level(ps, n).energy, _assemble(phi, P, X), radial_problem=True)


def oscillator3d_wavefunction(n: int, l: int, omega: float = 2.0) -> WaveFunction:
    """u(z) = s^(l+1) exp(-s^2/2) L_n^(l+1/2)(s^2), s = sqrt(omega/2) z."""
    if n < 0 or l < 0:
        raise ValueError("n and l must be nonnegative")
    c = math.sqrt(0.5 * omega)
    L = family_poly(family(Laguerre(1, Fraction(2 * l + 1, 2))), n)
    P = L.compose(RationalPoly((0, 0, 1))).to_numpy()

    def phi(s):
        return (l + 1) * np.log(s) - 0.5 * s * s, (l + 1) / s - s, -(l + 1) / (s * s) - 1

    def X(z):
        return c * z, c + 0 * z, 0 * z

    ps = Oscillator3D(omega, l)
    return WaveFunction(ps, n, _level(ps, n).energy, _assemble(phi, P, X), radial_problem=True)


def oscillator1d_wavefunction(n: int, omega: float = 2.0, b: float = 0.0) -> WaveFunction:
    """exp(-y^2/2) H_n(y), y = sqrt(omega/2) (z - 2b/omega)."""
    c = math.sqrt(0.5 * omega)
    z0 = 2 * b / omega
    P = family_poly(family(Hermite()), n).to_numpy()

    def phi(y):
        return -0.5 * y * y, -y, -1 + 0 * y

    def X(z):
        return c * (z - z0), c + 0 * z, 0 * z

    ps = Oscillator1D(omega, b)
    return WaveFunction(ps, n, _level(ps, n).energy, _assemble(phi, P, X))


def exp_barrier_wavefunction(n: int, A: float = 1.0, rate: float = 1.0) -> WaveFunction:
    """sqrt(w) exp(-1/w) y_n(w) with w = (rate/(2 sqrt A)) exp(-rate z/2).

    Equivalently u^(-1/2) exp(-u) y_n(1/u), u = 1/w, a multiple of the modified
    Bessel function K_(n+1/2)(u). These solve the equation at energy
    -(rate/2)^2 (n + 1/2)^2 for every A > 0 but are not normalizable: they
    grow without bound where the barrier vanishes.
    """
    if A <= 0 or rate <= 0:
        raise DomainError("A and rate must be positive")
    P = family_poly(family(Bessel(2, 2)), n).to_numpy()
    k = rate / (2 * math.sqrt(A))

    def phi(w):
        return 0.5 * np.log(w) - 1 / w, 0.5 / w + 1 / (w * w), -0.5 / (w * w) - 2 / w ** 3

    def X(z):
        w = k * np.exp(-0.5 * rate * z)
        return w, -0.5 * rate * w, 0.25 * rate * rate * w

    ps = ExpBarrier(A, rate)
    return WaveFunction(ps, n, _level(ps, n).energy, _assemble(phi, P, X), bound=False)


def wavefunction(ps: PotentialSpec, n: int) -> WaveFunction:
    """Dispatch to the closed form of a verified pipeline."""
    match ps:
        case ScarfII(a=a, b=b, alpha=al):
            return scarf2_wavefunction(a, b, n, al)
        case RosenMorseII(a=a, b=b, alpha=al):
            return rosen_morse2_wavefunction(a, b, n, al)
        case RosenMorseI(l=l, b=b):
            return rosen_morse1_wavefunction(l, b, n)
        case Coulomb(Z=Z, l=l):
            return hydrogen_wavefunction(n, l, Z)
        case Oscillator3D(omega=w, l=l):
            return oscillator3d_wavefunction(n, l, w)
        case Oscillator1D(omega=w, b=b):
            return oscillator1d_wavefunction(n, w, b)
        case ExpBarrier(A=A, rate=r):
            return exp_barrier_wavefunction(n, A, r)
    raise CatalogOnlyError(f"{type(ps).__name__} is catalog-only; see catalog_level")


def schrodinger_residual(wf: WaveFunction, zs) -> np.ndarray:
    """Relative residual of -psi'' + (v - eps) psi at each z.

    The scale is the size of the terms that cancel,
    max(|psi| (1 + |eps| + |v|), |psi''|), so that nodes of psi do not
    inflate the ratio; a floor of 1e-300 guards exact zeros.
    """
    z = np.asarray(zs, dtype=float)
    v = potential_value(wf.potential, z)
    g0, _, g2 = wf.evaluate(z)
    res = -g2 + (v - wf.energy) * g0
    scale = np.maximum(np.abs(g0) * (1 + abs(wf.energy) + np.abs(v)), np.abs(g2))
    return np.abs(res) / np.maximum(scale, 1e-300)


def default_grid(ps: PotentialSpec, count: int = 21) -> np.ndarray:
    lo, hi = domain(ps)
    match ps:
        case RosenMorseI():
            return np.linspace(0.05, math.pi - 0.05, count)
        case Coulomb() | Oscillator3D():
            return np.linspace(0.05, 10.0, count)
        case ScarfI(alpha=al):
            h = 0.5 * math.pi / al
            return np.linspace(-0.95 * h, 0.95 * h, count)
        case Eckart() | PoschlTeller2():
            return np.linspace(0.1, 5.0, count)
    return np.linspace(-3.0, 3.0, count)


# --- orthogonality of assembled wavefunctions -----------------------------------

def wavefunction_overlap(w1: WaveFunction, w2: WaveFunction, tol: float = 1e-12):
    """Integral of psi_1 psi_2 dz over the domain; returns (value, norm1, norm2)."""
    lo, hi = domain(w1.potential)
    r12 = integrate(lambda z: w1(z) * w2(z), (lo, hi), tol)
    r11 = integrate(lambda z: w1(z) ** 2, (lo, hi), tol)
    r22 = integrate(lambda z: w2(z) ** 2, (lo, hi), tol)
    return r12.value, r11.value, r22.value


def scarf2_overlap_x(a: float, b: float, n: int, m: int, tol: float = 1e-12):
    """Integral of g_n g_m over z in the x = sinh z variable: dz = dx/sqrt(1+x^2)."""
    f = lambda x: scarf2_g(a, b, n, x) * scarf2_g(a, b, m, x) / np.sqrt(1 + x * x)
    return integrate(f, (-math.inf, math.inf), tol)


def rosen_morse1_overlap(l: int, b: float, n: int, m: int, tol: float = 1e-12):
    """Integral of psi_n psi_m dx/(1+x^2) over the real x = -cot z line."""
    f = lambda x: rosen_morse1_x(l, b, n, x) * rosen_morse1_x(l, b, m, x) / (1 + x * x)
    return integrate(f, (-math.inf, math.inf), tol)


# --- supersymmetric ground state ----------------------------------------------

def scarf2_superpotential(a: float, b: float, z, alpha: float = 1.0):
    return a * np.tanh(alpha * z) + b / np.cosh(alpha * z)


def scarf2_superpotential_integral(a: float, b: float, z, alpha: float = 1.0):
    """Closed antiderivative from 0: (a/alpha) ln cosh(alpha z) + (2b/alpha) arctan(tanh(alpha z/2)).

    The second term is the Gudermannian gd(alpha z) = arctan(sinh(alpha z)).
    """
    z = np.asarray(z, dtype=float)
    return (a / alpha) * np.log(np.cosh(alpha * z)) + (2 * b / alpha) * np.arctan(np.tanh(0.5 * alpha * z))


def susy_ground_state(a: float, b: float, z, alpha: float = 1.0):
    return np.exp(-scarf2_superpotential_integral(a, b, z, alpha))


def susy_ground_state_check(a: float, b: float, grid, alpha: float = 1.0) -> float:
    """Max relative deviation of exp(-int U) / psi_0 from its mean on the grid."""
    if a <= 0:
        raise DomainError("a must be positive")
    z = np.asarray(grid, dtype=float)
    ratio = susy_ground_state(a, b, z, alpha) / scarf2_wavefunction(a, b, 0, alpha)(z)
    c = float(np.mean(ratio))
    return float(np.max(np.abs(ratio - c)) / abs(c))


# --- Klein-Gordon with equal scalar and vector potentials -------------------------

@dataclass(frozen=True)
class KGParams:
    A: float
    B: float
    mu: float


@dataclass(frozen=True)
class KGLevel:
    E: float
    a: float
    b: float
    eps: float


def kg_matching_residual(kg: KGParams, n: int, E: float) -> float:
    """Relative mismatch of -(a - n)^2 = (E + mu)(E - mu - A^2) with a = A sqrt(E + mu)."""
    s2 = E + kg.mu
    if s2 < 0:
        return math.inf
    a = kg.A * math.sqrt(s2)
    lhs = -(a - n) ** 2
    rhs = s2 * (E - kg.mu - kg.A ** 2)
    scale = max(abs(lhs), abs(rhs), s2 * (abs(E) + kg.mu + kg.A ** 2), 1e-300)
    return abs(lhs - rhs) / scale


def klein_gordon_levels(kg: KGParams, n: int) -> tuple[KGLevel, KGLevel]:
    """Both real roots of the matching system, particle level first.

    With s = sqrt(E + mu) the system is s^4 - 2 mu s^2 - 2 A n s + n^2 = 0;
    its nonnegative roots give E = s^2 - mu. The larger is E^1, the smaller E^2.
    """
    A, mu = kg.A, kg.mu
    roots = np.roots([1.0, 0.0, -2 * mu, -2 * A * n, float(n * n)])

    def poly(s):
        return s ** 4 - 2 * mu * s * s - 2 * A * n * s + n * n

    def dpoly(s):
        return 4 * s ** 3 - 4 * mu * s - 2 * A * n

    real = []
    for r in roots:
        if abs(r.imag) <= 1e-7 * max(1.0, abs(r)):
            s = float(r.real)
            for _ in range(3):
                d = dpoly(s)
                if d == 0:
                    break
                s -= poly(s) / d
            if s >= -1e-12:
                real.append(max(s, 0.0))
    real = sorted(set(round(s, 14) for s in real), reverse=True)
    if n == 0 and len(real) >= 1:
        # s^2 (s^2 - 2 mu) = 0: double root s = 0 gives E = -mu
        real = sorted({real[0], 0.0}, reverse=True)
    if len(real) < 2:
        raise ComplexRootError(f"fewer than two real levels for n={n}, A={A}, mu={mu}")
    levels = []
    for s in real[:2]:
        E = s * s - mu
        a = A * s
        b = (E + mu) * kg.B * (2 * A + 1) / (2 * a + 1)
        levels.append(KGLevel(E, a, b, -(a - n) ** 2))
    return levels[0], levels[1]


def klein_gordon_energies(kg: KGParams, n: int) -> tuple[float, float]:
    e1, e2 = klein_gordon_levels(kg, n)
    return e1.E, e2.E


def klein_gordon_printed(A: float, mu: float, n: int) -> tuple[float, float]:
    """Closed form (A^2 + 2An - 2A^2 mu +- sqrt(...)) / (2(1 + A^2)).

    These are the roots for the linear identification a = A (E + mu),
    i.e. of (1+A^2)E^2 - (A^2 + 2An - 2A^2 mu)E + n^2 - 2An mu - A^2 mu + A^2 mu^2 - mu^2 = 0.
    """
    disc = A ** 4 + 4 * A ** 3 * n - 4 * n * n + 4 * A * (A + 2 * n) * mu + 4 * mu * mu
    if disc < 0:
        raise ComplexRootError("negative discriminant")
    r = math.sqrt(disc)
    base = A * A + 2 * A * n - 2 * A * A * mu
    den = 2 * (1 + A * A)
    return (base + r) / den, (base - r) / den


def kg_linear_residual(A: float, mu: float, n: int, E: float) -> float:
    """Mismatch of -(a - n)^2 = (E + mu)(E - mu - A^2) with a = A (E + mu)."""
    a = A * (E + mu)
    lhs = -(a - n) ** 2
    rhs = (E + mu) * (E - mu - A * A)
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1.0)


# --- catalog-only potentials ------------------------------------------------------

def catalog_level(ps: PotentialSpec, n: int) -> tuple[float, Callable]:
    """Textbook shape-invariance level (energy, psi(z)) for the catalog-only entries.

    Value-only callables; the energies are the standard superpotential results,
    not derived in this package.
    """
    match ps:
        case Morse(A=A, B=B, alpha=al):
            s = A / al
            if not n < s:
                raise AdmissibilityError("Morse bound states need n < A/alpha")
            P = family_poly(family(Laguerre(1, Fraction(2 * (s - n)).limit_denominator(10 ** 9))), n).to_numpy()

            def psi(z):
                y = (2 * B / al) * np.exp(-al * z)
                return y ** (s - n) * np.exp(-0.5 * y) * polyval(y, P)
            return A * A - (A - n * al) ** 2, psi
        case ScarfI(A=A, B=B, alpha=al):
            s, lam = A / al, B / al
            P = _jacobi_float(s - lam - 0.5, s + lam - 0.5, n)

            def psi(z):
                y = np.sin(al * z)
                return (1 - y) ** (0.5 * (s - lam)) * (1 + y) ** (0.5 * (s + lam)) * polyval(y, P)
            return (A + n * al) ** 2 - A * A, psi
        case PoschlTeller2(A=A, B=B, alpha=al):
            s, lam = A / al, B / al
            if not n < s:
                raise AdmissibilityError("bound states need n < A/alpha")
            P = _jacobi_float(lam - s - 0.5, -lam - s - 0.5, n)

            def psi(z):
                y = np.cosh(al * z)
                return (y - 1) ** (0.5 * (lam - s)) * (y + 1) ** (-0.5 * (lam + s)) * polyval(y, P)
            return A * A - (A - n * al) ** 2, psi
        case Eckart(A=A, B=B, alpha=al):
            s, lam = A / al, B / al ** 2
            ar = lam / (s + n)
            s3, s4 = ar - n - s, -(ar + n + s)
            P = _jacobi_float(s3, s4, n)

            def psi(z):
                y = 1 / np.tanh(al * z)
                return (y - 1) ** (0.5 * s3) * (y + 1) ** (0.5 * s4) * polyval(y, P)
            return A * A - (A + n * al) ** 2 + B * B / (A * A) - B * B / (A + n * al) ** 2, psi
    raise DomainError(f"{type(ps).__name__} is not a catalog-only entry")

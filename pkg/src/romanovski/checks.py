"""Invariant suites behind ``romanovski check``.

Each check returns a :class:`CheckResult` with the measured quantity and the
tolerance it was held to. Randomized checks draw from ``random.Random(seed)``.
"""
from __future__ import annotations

import math
import random
import time
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from . import angular as ang
from . import potentials as pot
from .hyperclass import (Bessel, Hermite, HyperParams, Jacobi, Laguerre, Romanovski, classify,
                         pearson_identity_exact, pearson_weight)
from .masterformula import monic_master, romanovski_via_jacobi
from .polyalg import RationalPoly
from .quad import (bessel_circle_inner, gamma_fn, gram_matrix, integrate,
                   romanovski_norm_closed)
from .rodrigues import (family, family_poly, hypergeometric_residual, rodrigues_raw,
                        romanovski_ode_residual, specialized_spec)

SUITES = ("poly", "quad", "potentials", "angular")
F = Fraction


@dataclass
class CheckResult:
    name: str
    suite: str
    passed: bool
    measured: float
    tolerance: float
    seconds: float = 0.0
    detail: str = ""

    def as_dict(self) -> dict:
        return asdict(self)


# --- reference tables (corrected where the printed forms carry typos) ----------

def _p(*c) -> RationalPoly:
    return RationalPoly(c)


def _shifted(*c) -> RationalPoly:
    """Polynomial given in powers of (x - 1)."""
    t = RationalPoly((-1, 1))
    out = RationalPoly.zero()
    for k, v in enumerate(c):
        out = out + (t ** k).scale(v)
    return out


REFERENCE_TABLES: dict[str, list[RationalPoly]] = {
    "hermite": [_p(1), _p(0, 2), _p(-2, 0, 4), _p(0, -12, 0, 8), _p(12, 0, -48, 0, 16)],
    "laguerre_beta1": [_p(1), _p(2, -1), _p(3, -3, F(1, 2)), _p(4, -6, 2, F(-1, 6)),
                       _p(5, -10, 5, F(-5, 6), F(1, 24))],
    "jacobi_1_2": [_p(1), _p(F(-1, 2), F(5, 2)), _shifted(3, 9, F(21, 4)),
                   _shifted(4, 21, 28, F(21, 2)), _shifted(5, 40, 90, 75, F(165, 8))],
    "gegenbauer_1": [_p(1), _p(0, 2), _p(-1, 0, 4), _p(0, -4, 0, 8), _p(1, 0, -12, 0, 16)],
    "chebyshev1": [_p(1), _p(0, 1), _p(-1, 0, 2), _p(0, -3, 0, 4), _p(1, 0, -8, 0, 8)],
    "chebyshev2": [_p(1), _p(0, 2), _p(-1, 0, 4), _p(0, -4, 0, 8), _p(1, 0, -12, 0, 16)],
    "legendre": [_p(1), _p(0, 1), _p(F(-1, 2), 0, F(3, 2)), _p(0, F(-3, 2), 0, F(5, 2)),
                 _p(F(3, 8), 0, F(-15, 4), 0, F(35, 8))],
    "bessel_2_2": [_p(1), _p(1, 1), _p(1, 3, 3), _p(1, 6, 15, 15), _p(1, 10, 45, 105, 105)],
}


def reference_family(key: str):
    return {
        "hermite": family(Hermite(1)),
        "laguerre_beta1": family(Laguerre(1, 1)),
        "jacobi_1_2": family(Jacobi(1, 2)),
        "gegenbauer_1": specialized_spec("gegenbauer", 1),
        "chebyshev1": specialized_spec("chebyshev1"),
        "chebyshev2": specialized_spec("chebyshev2"),
        "legendre": specialized_spec("legendre"),
        "bessel_2_2": family(Bessel(2, 2)),
    }[key]


def scarf2_reference(n: int, a: Fraction, b: Fraction) -> RationalPoly:
    """Explicit R_n^(a+1/2, -2b), n <= 3, as polynomials in (a, b)."""
    if n == 0:
        return _p(1)
    if n == 1:
        return _p(-2 * b, 1 - 2 * a)
    if n == 2:
        return _p(3 - 2 * a + 4 * b * b, -8 * b * (1 - a), 6 - 10 * a + 4 * a * a)
    if n == 3:
        return _p(-26 * b + 12 * a * b - 8 * b ** 3,
                  -3 * (-15 + 16 * a - 4 * a * a) + 12 * (3 - 2 * a) * b * b,
                  -72 * b + 84 * a * b - 24 * a * a * b,
                  2 * (-2 + a) * (-15 + 16 * a - 4 * a * a))
    raise ValueError("explicit forms stop at n = 3")


CLASSICAL_GRAM = {
    "hermite": lambda: family(Hermite(1)),
    "laguerre_beta1": lambda: family(Laguerre(1, 1)),
    "jacobi_1_2": lambda: family(Jacobi(1, 2)),
    "legendre": lambda: specialized_spec("legendre"),
    "chebyshev1": lambda: specialized_spec("chebyshev1"),
    "chebyshev2": lambda: specialized_spec("chebyshev2"),
    "gegenbauer_1": lambda: specialized_spec("gegenbauer", 1),
}

ROMANOVSKI_GRID = [(F(p, 2), F(q)) for p in (5, 7, 9) for q in (0, -2)]


# --- helpers -----------------------------------------------------------------

def _rand_frac(rng: random.Random, lo: int = -9, hi: int = 9, den: int = 7) -> Fraction:
    return F(rng.randint(lo * den, hi * den), rng.randint(1, den))


def _rand_poly(rng: random.Random, deg: int) -> RationalPoly:
    return RationalPoly([_rand_frac(rng) for _ in range(deg + 1)])


def random_weight(rng: random.Random, kind: str):
    """Random rational parameters inside each family's valid range."""
    if kind == "hermite":
        return Hermite(F(rng.randint(1, 9), rng.randint(1, 4)))
    if kind == "laguerre":
        return Laguerre(F(rng.randint(1, 9), rng.randint(1, 4)), F(rng.randint(-3, 20), rng.randint(1, 4)))
    if kind == "jacobi":
        return Jacobi(F(rng.randint(-3, 20), 4), F(rng.randint(-3, 20), 4))
    if kind == "bessel":
        return Bessel(F(rng.randint(1, 20), rng.randint(1, 3)), F(rng.randint(1, 9), rng.randint(1, 3)))
    return Romanovski(F(rng.randint(1, 40), 4) + F(1, 3), _rand_frac(rng))


def collision_free_degree(ws, n: int) -> bool:
    return rodrigues_raw(ws, n).degree == n


# --- poly suite -------------------------------------------------------------

def check_ring_axioms(rng, trials: int = 25) -> tuple[float, str]:
    bad = 0
    for _ in range(trials):
        p, q, r = (_rand_poly(rng, rng.randint(0, 12)) for _ in range(3))
        bad += (p * q) * r != p * (q * r)
        bad += p * (q + r) != p * q + p * r
        bad += p + q != q + p
        bad += (p * q).differentiate() != p.differentiate() * q + p * q.differentiate()
    return float(bad), f"{trials} random triples"


def check_eval_consistency(rng, trials: int = 50) -> tuple[float, str]:
    worst = 0.0
    for _ in range(trials):
        p = RationalPoly([F(rng.randint(-1000, 1000), rng.randint(1, 9)) for _ in range(rng.randint(1, 8))])
        x = F(rng.randint(-1000, 1000), rng.randint(1, 9))
        exact = p(x)
        approx = p(float(x))
        scale = sum(abs(float(c)) * abs(float(x)) ** k for k, c in enumerate(p.coeffs))
        worst = max(worst, abs(approx - float(exact)) / max(scale, 1e-300))
    return worst, "relative to sum |c_k x^k|"


CANONICAL_SETS = [HyperParams(0, 0, 1, -2, 0), HyperParams(0, 1, 0, -1, 2),
                  HyperParams(-1, 0, 1, -5, 1), HyperParams(1, 0, 0, 2, 2),
                  HyperParams(1, 0, 1, -5, -4)]


def check_pearson_roundtrip() -> tuple[float, str]:
    bad = sum(pearson_weight(hp).hyper() != hp for hp in CANONICAL_SETS)
    return float(bad), "five canonical sets"


def check_pearson_identity(rng) -> tuple[float, str]:
    bad = 0
    for kind in ("hermite", "laguerre", "jacobi", "bessel", "romanovski"):
        for _ in range(4):
            bad += not pearson_identity_exact(random_weight(rng, kind))
    bad += not pearson_identity_exact(pearson_weight(HyperParams(-1, 3, -2, -22, 33)))
    return float(bad), "rational-function identity"


def check_classify_scaling(rng) -> tuple[float, str]:
    bad = 0
    for hp in CANONICAL_SETS:
        for _ in range(3):
            s = F(rng.randint(1, 30), rng.randint(1, 7))
            bad += classify(hp.scaled(s)) != classify(hp)
    return float(bad), "positive rational scalings"


def check_family_ode(rng) -> tuple[float, str]:
    bad = 0
    for kind in ("hermite", "laguerre", "jacobi", "bessel", "romanovski"):
        for _ in range(2):
            ws = random_weight(rng, kind)
            fs = family(ws)
            for n in range(9):
                bad += not hypergeometric_residual(ws.hyper(), family_poly(fs, n), n).is_zero
    return float(bad), "n <= 8, random valid parameters"


def check_degree(rng) -> tuple[float, str]:
    bad = 0
    for kind in ("hermite", "laguerre", "jacobi", "bessel", "romanovski"):
        ws = random_weight(rng, kind)
        for n in range(9):
            if eigen_distinct(ws, n):
                bad += rodrigues_raw(ws, n).degree != n
    return float(bad), "non-degenerate parameter sets"


def eigen_distinct(ws, n: int) -> bool:
    hp = ws.hyper()
    return all(hp.lambda_n(m) != hp.lambda_n(n) for m in range(n))


def check_parity() -> tuple[float, str]:
    bad = 0
    specs = [family(Hermite(1)), family(Romanovski(F(9, 2), 0)), specialized_spec("gegenbauer", F(3, 2)),
             specialized_spec("chebyshev1"), specialized_spec("chebyshev2"), specialized_spec("legendre")]
    for fs in specs:
        for n in range(9):
            p = family_poly(fs, n)
            if not p.is_zero:
                bad += p.parity() != (-1) ** n
    return float(bad), "even weights"


def check_tables() -> tuple[float, str]:
    bad = 0
    for key, table in REFERENCE_TABLES.items():
        fs = reference_family(key)
        bad += sum(family_poly(fs, n) != ref for n, ref in enumerate(table))
    return float(bad), "corrected printed tables"


def check_scarf2_explicit() -> tuple[float, str]:
    bad = 0
    for n in range(4):
        for i in range(n + 2):
            for j in range(n + 2):
                a, b = F(2 * i + 7, 3), F(j - 2, 5)
                bad += rodrigues_raw(Romanovski(a + F(1, 2), -2 * b), n) != scarf2_reference(n, a, b)
    return float(bad), "grid identity in (a, b)"


def check_romanovski_ode(rng, trials: int = 50) -> tuple[float, str]:
    bad = 0
    for _ in range(trials):
        p, q, n = _rand_frac(rng, -5, 10), _rand_frac(rng), rng.randint(0, 8)
        bad += not romanovski_ode_residual(p, q, n).is_zero
    return float(bad), f"{trials} random (p, q, n)"


ORACLE_SETS = [Jacobi(1, 2), Jacobi(F(1, 2), F(-1, 3)), Bessel(2, 2), Bessel(F(7, 2), 3),
               Romanovski(F(13, 2), -4), Romanovski(F(15, 2), 2), Romanovski(F(5, 3), F(1, 2))]


def master_vs_rodrigues(nmax: int = 6) -> tuple[float, float]:
    worst = worst_im = 0.0
    for ws in ORACLE_SETS:
        hp = ws.hyper()
        for n in range(nmax + 1):
            ref = rodrigues_raw(ws, n).monic().to_numpy()
            mc = monic_master(hp, n)
            worst = max(worst, float(np.max(np.abs(mc.real - ref))))
            worst_im = max(worst_im, mc.max_imag)
    return worst, worst_im


def complex_jacobi_deviation(params=((F(7, 2), -4), (5, 2)), nmax: int = 5) -> float:
    worst = 0.0
    xs = np.linspace(-3, 3, 61)
    for p, q in params:
        for n in range(nmax + 1):
            c = rodrigues_raw(Romanovski(p, q), n).to_numpy()
            ref = np.polynomial.polynomial.polyval(xs, c) if c.size else np.zeros_like(xs)
            for x, r in zip(xs, ref):
                worst = max(worst, abs(romanovski_via_jacobi(float(p), float(q), n, x) - r))
    return worst


# --- quad suite -------------------------------------------------------------

def classical_gram_worst(nmax: int = 6) -> tuple[float, bool]:
    worst, conv = 0.0, True
    for make in CLASSICAL_GRAM.values():
        g = gram_matrix(make(), nmax)
        worst = max(worst, g.max_admissible_offdiag())
        conv &= all(r.converged for row in g.matrix for r in row)
    return worst, conv


def minimal_inadmissible_full_degree(ws: Romanovski, nmax: int) -> list[tuple[int, int]]:
    """Inadmissible pairs with the smallest n + m whose polynomials keep full degree."""
    pairs = [(n, m) for n in range(nmax + 1) for m in range(n, nmax + 1) if not ws.admissible(n, m)]
    if not pairs:
        return []
    s = min(n + m for n, m in pairs)
    return [(n, m) for n, m in pairs if n + m == s
            and collision_free_degree(ws, n) and collision_free_degree(ws, m)]


def romanovski_boundary(nmax: int = 6) -> dict:
    out = {"worst_admissible": 0.0, "admissible_converged": True, "boundary_flagged": True,
           "any_flagged": True, "cases": []}
    for p, q in ROMANOVSKI_GRID:
        ws = Romanovski(p, q)
        g = gram_matrix(ws, nmax)
        w = g.max_admissible_offdiag()
        conv = all(g.matrix[n][m].converged for n, m in g.admissible_pairs)
        flagged = set(g.inadmissible_flagged())
        boundary = minimal_inadmissible_full_degree(ws, nmax)
        ok_b = bool(boundary) and all(pair in flagged for pair in boundary)
        out["worst_admissible"] = max(out["worst_admissible"], w)
        out["admissible_converged"] &= conv
        out["boundary_flagged"] &= ok_b
        out["any_flagged"] &= bool(flagged)
        out["cases"].append({"p": str(p), "q": str(q), "worst": w, "boundary": boundary,
                             "flagged": sorted(flagged)})
    return out


def norm_agreement() -> float:
    worst = 0.0
    for a in (F(5, 2), F(7, 2), F(9, 2)):
        g = gram_matrix(Romanovski(a + F(1, 2), 0), 3)
        for n in (1, 2, 3):
            if n < a and g.matrix[n][n].converged:
                closed = romanovski_norm_closed(float(a), n)
                worst = max(worst, abs(g.matrix[n][n].value - closed) / abs(closed))
    return worst


def quad_selftest() -> float:
    inf = math.inf
    r1 = integrate(lambda x: np.exp(-x * x), (-inf, inf)).value
    r2 = integrate(lambda x: 1 / (1 + x * x), (-inf, inf)).value
    r3 = integrate(lambda x: np.exp(-x) / np.sqrt(x), (0, inf)).value
    return max(abs(r1 - math.sqrt(math.pi)) / math.sqrt(math.pi), abs(r2 - math.pi) / math.pi,
               abs(r3 - math.sqrt(math.pi)) / math.sqrt(math.pi), abs(gamma_fn(0.5) ** 2 - math.pi) / math.pi)


def bessel_contour_worst(nmax: int = 4) -> float:
    return max(abs(bessel_circle_inner(m, n)) for m in range(nmax + 1) for n in range(nmax + 1) if m != n)


# --- potentials suite -------------------------------------------------------

def scarf2_spectrum_identity() -> float:
    worst = 0.0
    for a, b, al in ((10.0, 5.0, 1.0), (7.5, 2.0, 0.5), (3.5, 1.0, 1.0)):
        ps = pot.ScarfII(a, b, al)
        levels = pot.spectrum(ps, pot.scarf2_bound_count(a, al) - 1)
        for lo, hi in zip(levels, levels[1:]):
            worst = max(worst, abs((hi.energy - lo.energy) - al * al * (2 * a / al - 2 * hi.n + 1)))
    return worst


def bound_count_ok() -> bool:
    return all(pot.scarf2_bound_count(a) == k for a, k in ((2.5, 3), (3.5, 4), (10.0, 10)))


def all_wavefunctions() -> list:
    out = []
    for n in range(4):
        out.append(pot.scarf2_wavefunction(10, 5, n))
        out.append(pot.rosen_morse1_wavefunction(1, 50, n))
        out.append(pot.hydrogen_wavefunction(n, 1))
        out.append(pot.oscillator3d_wavefunction(n, 2))
        out.append(pot.oscillator1d_wavefunction(n, 2.0, 0.5))
        out.append(pot.exp_barrier_wavefunction(n, 2.0, 1.0))
    for n in range(7):
        out.append(pot.rosen_morse2_wavefunction(10, 10, n))
    out.append(pot.hydrogen_wavefunction(0, 0))
    out.append(pot.oscillator3d_wavefunction(0, 0))
    out.append(pot.scarf2_wavefunction(6, 1.5, 2, 2.0))
    return out


def worst_residual(wfs=None) -> float:
    worst = 0.0
    for wf in wfs or all_wavefunctions():
        worst = max(worst, float(np.max(pot.schrodinger_residual(wf, pot.default_grid(wf.potential, 21)))))
    return worst


def scarf2_orthogonality(a=10.0, b=5.0, nmax: int = 3) -> float:
    worst = 0.0
    norms = [pot.scarf2_overlap_x(a, b, n, n).value for n in range(nmax + 1)]
    for n in range(nmax + 1):
        for m in range(n + 1, nmax + 1):
            v = pot.scarf2_overlap_x(a, b, n, m).value
            worst = max(worst, abs(v) / math.sqrt(norms[n] * norms[m]))
    return worst


def rosen_morse1_orthogonality(l=1, b=50.0, nmax: int = 2) -> float:
    worst = 0.0
    norms = [pot.rosen_morse1_overlap(l, b, n, n).value for n in range(nmax + 1)]
    for n in range(nmax + 1):
        for m in range(n + 1, nmax + 1):
            v = pot.rosen_morse1_overlap(l, b, n, m).value
            worst = max(worst, abs(v) / math.sqrt(norms[n] * norms[m]))
    return worst


KG_CASES = ((1.0, 1.0), (2.0, 1.0), (1.0, 5.0))


def kg_worst() -> tuple[float, int]:
    worst, count = 0.0, 0
    for A, mu in KG_CASES:
        kg = pot.KGParams(A, 1.0, mu)
        for n in range(3):
            try:
                levels = pot.klein_gordon_levels(kg, n)
            except pot.ComplexRootError:
                continue
            for lv in levels:
                worst = max(worst, pot.kg_matching_residual(kg, n, lv.E))
                count += 1
    return worst, count


def susy_worst() -> float:
    z = np.linspace(-5, 5, 101)
    return max(pot.susy_ground_state_check(a, b, z) for a, b in ((10, 5), (3, 1)))


def spectra_values() -> float:
    got = [pot.spectrum(pot.RosenMorseI(1, 50), 0)[0].energy,
           pot.spectrum(pot.Coulomb(), 0)[0].energy,
           pot.spectrum(pot.Oscillator3D(), 0)[0].energy,
           pot.spectrum(pot.ScarfII(10, 5), 1)[1].energy]
    want = [-621.0, -1.0, 3.0, 19.0]
    return max(abs(g - w) for g, w in zip(got, want))


# --- angular suite ----------------------------------------------------------

def theta_map_worst(count: int = 999) -> float:
    worst = 0.0
    for t in np.linspace(0, math.pi, count + 2)[1:-1]:
        z, x = ang.theta_map(t)
        worst = max(worst, abs(math.cosh(z) * math.sin(t) - 1), abs(math.cos(t) + math.tanh(z)),
                    abs(math.sinh(z) - x) / max(1.0, abs(x)), abs(ang.theta_from_z(z) - t))
    return worst


def legendre_worst(lmax: int = 6) -> float:
    g = ang.default_legendre_grid()
    return max(ang.legendre_relation_check(l, m, g)[1] for l in range(lmax + 1) for m in range(l + 1))


def infinite_orthogonality_worst(lmax: int = 5) -> tuple[float, bool]:
    worst, conv = 0.0, True
    for l in range(lmax + 1):
        for lp in range(l + 1, lmax + 1):
            for m in range(min(l, lp) + 1):
                r = ang.infinite_orthogonality_integral(l, lp, m)
                worst = max(worst, abs(r.value))
                conv &= r.converged
    return worst, conv


def z_finite(lmax: int = 4) -> bool:
    th = np.linspace(1e-3, math.pi - 1e-3, 199)
    ok = True
    for l in range(lmax + 1):
        ok &= rodrigues_raw(Romanovski(F(l * (l + 1)) + F(1, 2), -2 * l * (l + 1)), l * l).degree == l * l
        ok &= bool(np.all(np.isfinite(ang.z_polar(l, l, th))))
    return ok


def labels_ok(lmax: int = 6) -> bool:
    return all(ang.AngularLabel(l, m).consistent() for l in range(lmax + 1)
               for m in range(-l, l * (l + 1) + 1))


# --- registry ---------------------------------------------------------------

def _registry(rng: random.Random) -> list[tuple[str, str, float, Callable]]:
    """(suite, name, tolerance, thunk -> (measured, detail)); pass iff measured <= tolerance."""

    def flag(b: bool, detail: str = "") -> tuple[float, str]:
        return (0.0 if b else 1.0), detail

    cache: dict = {}

    def boundary():
        if "b" not in cache:
            cache["b"] = romanovski_boundary()
        return cache["b"]

    return [
        ("poly", "ring_axioms_and_leibniz", 0.0, lambda: check_ring_axioms(rng)),
        ("poly", "rational_vs_float_eval", 1e-13, lambda: check_eval_consistency(rng)),
        ("poly", "pearson_roundtrip", 0.0, check_pearson_roundtrip),
        ("poly", "pearson_identity", 0.0, lambda: check_pearson_identity(rng)),
        ("poly", "classify_scaling", 0.0, lambda: check_classify_scaling(rng)),
        ("poly", "family_ode_exact", 0.0, lambda: check_family_ode(rng)),
        ("poly", "degree_equals_n", 0.0, lambda: check_degree(rng)),
        ("poly", "parity", 0.0, check_parity),
        ("poly", "printed_tables", 0.0, check_tables),
        ("poly", "scarf2_explicit_polynomials", 0.0, check_scarf2_explicit),
        ("poly", "romanovski_ode_exact", 0.0, lambda: check_romanovski_ode(rng)),
        ("poly", "master_formula_oracle", 1e-9, lambda: (master_vs_rodrigues()[0], "n <= 6")),
        ("poly", "master_formula_real", 1e-10, lambda: (master_vs_rodrigues()[1], "max |Im|")),
        ("poly", "complex_jacobi_identity", 1e-9, lambda: (complex_jacobi_deviation(), "x in [-3, 3]")),
        ("quad", "selftest_constants", 1e-11, lambda: (quad_selftest(), "sqrt(pi), pi, gamma(1/2)^2")),
        ("quad", "classical_gram", 1e-10,
         lambda: (lambda w: (w[0] if w[1] else math.inf, "seven families, nmax 6"))(classical_gram_worst())),
        ("quad", "romanovski_admissible", 1e-8,
         lambda: (boundary()["worst_admissible"] if boundary()["admissible_converged"] else math.inf,
                  "p in {5/2, 7/2, 9/2}, q in {0, -2}")),
        ("quad", "romanovski_boundary_flagged", 0.0,
         lambda: flag(boundary()["boundary_flagged"] and boundary()["any_flagged"],
                      "full-degree pairs at the smallest inadmissible n+m")),
        ("quad", "norm_closed_forms", 1e-7, lambda: (norm_agreement(), "a in {5/2, 7/2, 9/2}")),
        ("quad", "norm_2pi", 1e-9, lambda: (abs(romanovski_norm_closed(2.5, 1) - 2 * math.pi) / (2 * math.pi), "")),
        ("quad", "bessel_contour", 1e-10, lambda: (bessel_contour_worst(), "256 nodes")),
        ("potentials", "scarf2_spectrum_difference", 1e-12, lambda: (scarf2_spectrum_identity(), "")),
        ("potentials", "scarf2_bound_count", 0.0, lambda: flag(bound_count_ok())),
        ("potentials", "schrodinger_residuals", 1e-8, lambda: (worst_residual(), "21-point grids")),
        ("potentials", "scarf2_orthogonality", 1e-8, lambda: (scarf2_orthogonality(), "a=10, b=5, n,m <= 3")),
        ("potentials", "rosen_morse1_orthogonality", 1e-8, lambda: (rosen_morse1_orthogonality(), "l=1, b=50")),
        ("potentials", "klein_gordon_plugback", 1e-9, lambda: (lambda w: (w[0], f"{w[1]} roots"))(kg_worst())),
        ("potentials", "susy_ground_state", 1e-9, lambda: (susy_worst(), "(10,5), (3,1)")),
        ("potentials", "closed_form_levels", 1e-12, lambda: (spectra_values(), "-621, -1, 3, 19")),
        ("angular", "theta_map_identities", 1e-12, lambda: (theta_map_worst(), "999 points")),
        ("angular", "legendre_relation", 1e-9, lambda: (legendre_worst(), "0 <= m <= l <= 6")),
        ("angular", "infinite_orthogonality", 1e-9,
         lambda: (lambda w: (w[0] if w[1] else math.inf, "l != l' <= 5"))(infinite_orthogonality_worst())),
        ("angular", "z_function_finite", 0.0, lambda: flag(z_finite(), "m = l, l <= 4")),
        ("angular", "su11_labels", 0.0, lambda: flag(labels_ok())),
    ]


def run_checks(suite: str = "all", seed: int = 0) -> list[CheckResult]:
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    rng = random.Random(seed)
    out = []
    for s, name, tol, thunk in _registry(rng):
        if suite != "all" and s != suite:
            continue
        t0 = time.perf_counter()
        try:
            measured, detail = thunk()
            passed = bool(measured <= tol)
        except Exception as exc:  # a crashing invariant is a failed invariant
            measured, detail, passed = math.inf, f"{type(exc).__name__}: {exc}", False
        out.append(CheckResult(name, s, passed, float(measured), tol, time.perf_counter() - t0, detail))
    return out

"""Monic polynomial solutions from a closed hypergeometric formula (a != 0).

For sigma = a x^2 + b x + c, tau = d x + e and s = sqrt(b^2 - 4ac) (principal
branch), the monic degree-n solution is sum_k C(n,k) G_k x^k with

    G_k = r^(k-n) 2F1(k-n, B; C; z),
    r = 2a/(b+s),  z = 2s/(b+s),
    B = (2ae - bd)/(2as) + 1 - d/(2a) - n,  C = 2 - d/a - 2n.

When s = 0 (double root, e.g. Bessel) or b + s = 0 the individual factors are
singular but the product is not. Expanding the Pochhammer symbol gives

    r^(k-n) 2F1 = sum_j (k-n)_j / ((C)_j j!) 2^j (b+s)^(m-j)
                  prod_{i<j} (beta0 + (beta1 + i) s) / (2a)^m,   m = n - k,

with beta0 = (2ae - bd)/(2a) and beta1 = 1 - d/(2a) - n, which is a
polynomial in s and is used on those branches.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, PoleInC, ZeroLeadingTerm
from .hyperclass import HyperParams


@dataclass(frozen=True)
class MonicCoeffs:
    n: int
    coeffs: tuple[complex, ...]
    discriminant_root: complex

    @property
    def real(self) -> np.ndarray:
        return np.array([c.real for c in self.coeffs])

    @property
    def max_imag(self) -> float:
        return max((abs(c.imag) for c in self.coeffs), default=0.0)


def gauss2f1_terminating(neg_int_a: int, B: complex, C: complex, z: complex) -> complex:
    """Finite sum of 2F1(-N, B; C; z) with N = -neg_int_a >= 0."""
    if neg_int_a > 0 or int(neg_int_a) != neg_int_a:
        raise DomainError("first parameter must be a nonpositive integer")
    N = -int(neg_int_a)
    total = 1 + 0j
    term = 1 + 0j
    for j in range(N):
        den = (C + j) * (j + 1)
        if den == 0:
            raise PoleInC(f"C + {j} vanishes inside the truncated sum")
        term *= (neg_int_a + j) * (B + j) * z / den
        total += term
    return total


def _regularized_g(m: int, hp: HyperParams, n: int, s: complex) -> complex:
    a, b, d, e = (complex(float(v)) for v in (hp.a, hp.b, hp.d, hp.e))
    beta0 = (2 * a * e - b * d) / (2 * a)
    beta1 = 1 - d / (2 * a) - n
    C = 2 - d / a - 2 * n
    total = 0j
    coef = 1 + 0j  # (k-n)_j / ((C)_j j!) * 2^j * prod(...)
    for j in range(m + 1):
        total += coef * (b + s) ** (m - j)
        if j == m:
            break
        den = (C + j) * (j + 1)
        if den == 0:
            raise PoleInC(f"C + {j} vanishes inside the truncated sum")
        coef *= (-m + j) * 2 * (beta0 + (beta1 + j) * s) / den
    return total / (2 * a) ** m


def master_prefactor(hp: HyperParams, n: int):
    """prod_{k=1..n} (d + (n+k-2) a), the leading coefficient of the Rodrigues form."""
    out = 1
    for k in range(1, n + 1):
        out *= hp.d + (n + k - 2) * hp.a
    return out


def monic_master(hp: HyperParams, n: int) -> MonicCoeffs:
    """Monic degree-n solution of the hypergeometric equation via the closed formula."""
    if hp.a == 0:
        raise DomainError("closed formula requires a != 0")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if master_prefactor(hp, n) == 0:
        raise ZeroLeadingTerm(f"degree {n} solution degenerates for {hp}")
    a, b, c, d, e = (float(v) for v in hp.astuple())
    s = cmath.sqrt(complex(b * b - 4 * a * c))
    bs = b + s
    out = []
    use_series = abs(s) > 0 and abs(bs) > 1e-300
    if use_series:
        r = 2 * a / bs
        z = 2 * s / bs
        B = (2 * a * e - b * d) / (2 * a * s) + 1 - d / (2 * a) - n
        C = 2 - d / a - 2 * n
    for k in range(n + 1):
        if use_series:
            g = r ** (k - n) * gauss2f1_terminating(k - n, B, C, z)
        else:
            g = _regularized_g(n - k, hp, n, s)
        out.append(math.comb(n, k) * g)
    return MonicCoeffs(n, tuple(complex(v) for v in out), s)


def monic_master_regularized(hp: HyperParams, n: int) -> MonicCoeffs:
    """The same coefficients always computed through the regularized sum."""
    if hp.a == 0:
        raise DomainError("closed formula requires a != 0")
    if master_prefactor(hp, n) == 0:
        raise ZeroLeadingTerm(f"degree {n} solution degenerates for {hp}")
    a, b, c = (float(v) for v in (hp.a, hp.b, hp.c))
    s = cmath.sqrt(complex(b * b - 4 * a * c))
    out = [math.comb(n, k) * _regularized_g(n - k, hp, n, s) for k in range(n + 1)]
    return MonicCoeffs(n, tuple(out), s)


# --- complex Jacobi polynomials -------------------------------------------------

def jacobi_complex(n: int, alpha: complex, beta: complex, x: complex) -> complex:
    """P_n^(alpha, beta)(x) = (alpha+1)_n/n! 2F1(-n, n+alpha+beta+1; alpha+1; (1-x)/2)."""
    pref = 1 + 0j
    for j in range(n):
        pref *= (alpha + 1 + j) / (j + 1)
    return pref * gauss2f1_terminating(-n, n + alpha + beta + 1, alpha + 1, (1 - x) / 2)


def romanovski_via_jacobi(p: float, q: float, n: int, x: float) -> complex:
    """Raw Romanovski value through the imaginary-argument Jacobi polynomial.

    R_n^(p,q)(x) = (-2)^n n! i^n P_n^(-p+iq/2, -p-iq/2)(ix), with R normalized
    as the raw Rodrigues form. The parameter order follows from the standard
    Jacobi equation (1-u^2)P'' + (beta - alpha - (alpha+beta+2)u)P' + ... = 0.
    """
    al = complex(-p, q / 2)
    be = complex(-p, -q / 2)
    return (-2) ** n * math.factorial(n) * (1j) ** n * jacobi_complex(n, al, be, 1j * x)

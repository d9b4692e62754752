from __future__ import annotations

import math
from fractions import Fraction as F

import mpmath
import numpy as np
import pytest

from romanovski.errors import DomainError, PoleError
from romanovski.hyperclass import Bessel, Hermite, Jacobi, Laguerre, Romanovski
from romanovski.quad import (admissible_pairs, bessel_circle_inner, gamma_fn, gram_matrix, integrate,
                             romanovski_norm_closed, weighted_inner)
from romanovski.polyalg import RationalPoly
from romanovski.rodrigues import family, rodrigues_raw, specialized_spec

INF = math.inf


def test_gaussian():
    r = integrate(lambda x: np.exp(-x * x), (-INF, INF))
    assert r.converged and r.value == pytest.approx(math.sqrt(math.pi), rel=1e-13)


def test_lorentzian():
    assert integrate(lambda x: 1 / (1 + x * x), (-INF, INF)).value == pytest.approx(math.pi, rel=1e-12)


def test_endpoint_singularity():
    r = integrate(lambda x: np.exp(-x) / np.sqrt(x), (0, INF))
    assert r.value == pytest.approx(math.sqrt(math.pi), rel=1e-11)


def test_chebyshev_weight_endpoint_aware():
    r = integrate(lambda x, dl, dr: 1 / np.sqrt(dl * dr), (-1, 1), endpoint_aware=True)
    assert r.value == pytest.approx(math.pi, rel=1e-11)


def test_odd_integrand_vanishes():
    assert abs(integrate(lambda x: x * np.exp(-x * x), (-INF, INF)).value) < 1e-15


def test_slow_decay_flagged():
    r = integrate(lambda x: 1 / (1 + np.abs(x)), (-INF, INF))
    assert not r.converged and r.decay_exponent >= -1.0 - 1e-6


def test_nonintegrable_endpoint_not_converged():
    assert not integrate(lambda x: 1 / x, (0, 1)).converged


def test_gamma_against_mpmath():
    for x in (0.1, 0.5, 1.0, 2.5, 7.25, 20.0, 49.5, -0.5, -2.3):
        assert gamma_fn(x) == pytest.approx(float(mpmath.gamma(x)), rel=1e-13)
    assert gamma_fn(0.5) ** 2 == pytest.approx(math.pi, rel=1e-13)
    with pytest.raises(PoleError):
        gamma_fn(-2)


CLASSICAL = [family(Hermite(1)), family(Laguerre(1, 1)), family(Jacobi(1, 2)), specialized_spec("legendre"),
             specialized_spec("chebyshev1"), specialized_spec("chebyshev2"), specialized_spec("gegenbauer", 1)]


@pytest.mark.parametrize("fs", CLASSICAL, ids=lambda f: f.name)
def test_classical_gram(fs):
    g = gram_matrix(fs, 6)
    assert all(r.converged for row in g.matrix for r in row)
    assert g.max_admissible_offdiag() < 1e-10


def test_hermite_norms():
    # integral of exp(-x^2) H_n^2 = sqrt(pi) 2^n n!
    d = gram_matrix(family(Hermite(1)), 4).diagonal()
    for n in range(5):
        assert d[n] == pytest.approx(math.sqrt(math.pi) * 2 ** n * math.factorial(n), rel=1e-12)


@pytest.mark.parametrize("p", [F(5, 2), F(7, 2), F(9, 2)])
@pytest.mark.parametrize("q", [0, -2])
def test_romanovski_finite_orthogonality(p, q):
    ws = Romanovski(p, q)
    g = gram_matrix(ws, 6)
    assert all(g.matrix[n][m].converged for n, m in g.admissible_pairs)
    assert g.max_admissible_offdiag() < 1e-8
    k = int(p - F(1, 2))
    assert (k, k) in g.inadmissible_flagged()


def test_admissible_pairs_classical_are_all():
    assert len(admissible_pairs(Jacobi(0, 0), 3)) == 16


def test_norm_closed_forms_and_frozen_values():
    # frozen from 30-digit mpmath quadrature
    frozen = {(2.5, 1): 6.28318530717958647, (2.5, 2): 37.6991118430775189,
              (3.5, 1): 7.06858347057703479, (3.5, 2): 62.8318530717958648}
    for (a, n), v in frozen.items():
        assert romanovski_norm_closed(a, n) == pytest.approx(v, rel=1e-13)
    assert romanovski_norm_closed(2.5, 1) == pytest.approx(2 * math.pi, rel=1e-14)


@pytest.mark.parametrize("a", [F(5, 2), F(7, 2), F(9, 2)])
def test_norms_match_quadrature(a):
    ws = Romanovski(a + F(1, 2), 0)
    for n in (1, 2, 3):
        if n < a:
            r = weighted_inner(ws, rodrigues_raw(ws, n), rodrigues_raw(ws, n))
            assert r.value == pytest.approx(romanovski_norm_closed(float(a), n), rel=1e-7)


def test_norm_domain():
    with pytest.raises(DomainError):
        romanovski_norm_closed(2.5, 3)
    with pytest.raises(DomainError):
        romanovski_norm_closed(6, 4)


def test_bessel_contour_orthogonality():
    for m in range(5):
        for n in range(5):
            v = bessel_circle_inner(m, n)
            if m != n:
                assert abs(v) < 1e-10
    assert abs(bessel_circle_inner(2, 2)) > 1e-3


def test_bessel_has_no_real_interval():
    with pytest.raises(DomainError):
        weighted_inner(Bessel(2, 2), RationalPoly.one(), RationalPoly.one())
    with pytest.raises(DomainError):
        bessel_circle_inner(0, 1, nodes=100)

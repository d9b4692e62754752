from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from romanovski import angular as ang
from romanovski.errors import DomainError, InadmissibleError
from romanovski.potentials import ScarfII, potential_value, scarf2_wavefunction, schrodinger_residual
from romanovski.rodrigues import romanovski_poly


def test_theta_map_examples():
    z, x = ang.theta_map(math.pi / 2)
    assert abs(z) < 1e-15 and abs(x) < 1e-15
    assert ang.theta_map(math.pi / 4)[1] == pytest.approx(-1.0, rel=1e-15)
    with pytest.raises(DomainError):
        ang.theta_map(0.0)
    with pytest.raises(DomainError):
        ang.theta_map(math.pi)


def test_theta_map_identities_on_grid():
    for t in np.linspace(0, math.pi, 1001)[1:-1]:
        z, x = ang.theta_map(t)
        assert abs(math.cosh(z) * math.sin(t) - 1) < 1e-12
        assert abs(math.cos(t) + math.tanh(z)) < 1e-12
        assert abs(ang.theta_from_z(z) - t) < 1e-12


def test_clamped_grid_warns():
    with pytest.warns(UserWarning):
        th, clamped = ang.clamp_theta_grid(0.0, math.pi, 5)
    assert clamped and th[0] == ang.THETA_EPS


def test_solve_parameters_examples():
    s = ang.solve_parameters(ang.NonCentralSpec(0.0), 1, 1, 0)
    assert (s.a, s.b) == pytest.approx((1.0, 0.0))
    s = ang.solve_parameters(ang.NonCentralSpec(-5.0, ang.ParameterChoice.FIX_A), 1, 1, 1)
    assert (s.a, s.b) == (2.0, 1.0)
    s = ang.solve_parameters(ang.NonCentralSpec(0.0, ang.ParameterChoice.INTEGER_L), 1, 1, 1)
    assert (s.a, s.b) == (2.0, 2.0)
    assert max(s.residuals.values()) == 0


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6), st.floats(-30, 30))
def test_solve_ab_satisfies_matching(l, c):
    r = ang.solve_parameters(ang.NonCentralSpec(c), l, 0, 0).residuals
    assert r["centrifugal"] < 1e-10 * max(1, l * l) and r["strength"] < 1e-10 * max(1, abs(c))


def test_solve_parameters_rejects_small_a():
    with pytest.raises(InadmissibleError):
        ang.solve_parameters(ang.NonCentralSpec(0.0), 1, 0, 3)
    with pytest.raises(InadmissibleError):
        ang.solve_parameters(ang.NonCentralSpec(0.0, ang.ParameterChoice.INTEGER_L), 1, 3, 0)


def test_polar_equation_is_scarf2():
    # the polar solution in z = ln tan(theta/2) solves the alpha = 1 Scarf II problem
    wf = scarf2_wavefunction(2.0, 2.0, 0)
    assert schrodinger_residual(wf, np.linspace(-3, 3, 21)).max() < 1e-12
    th = np.linspace(0.3, 2.8, 9)
    z = np.log(np.tan(th / 2))
    ratio = ang.z_polar(1, 2, th) / wf(z)
    np.testing.assert_allclose(ratio, ratio[0], rtol=1e-12)


def test_exponent_factor_b_not_half_b():
    a, b, n = 2.0, 2.0, 1
    P = romanovski_poly(a + 0.5, -2 * b, n)
    energy = -(a - n) ** 2
    z, h = np.linspace(-2, 2, 9), 1e-3

    def residual(k):
        def f(t):
            x = np.sinh(t)
            return np.cosh(t) ** -a * np.exp(-k * b * np.arctan(x)) * np.polynomial.polynomial.polyval(x, P)
        d2 = (-f(z + 2 * h) + 16 * f(z + h) - 30 * f(z) + 16 * f(z - h) - f(z - 2 * h)) / (12 * h * h)
        v = potential_value(ScarfII(a, b, 1.0), z) - a * a
        return np.max(np.abs(-d2 + (v - energy) * f(z))) / np.max(np.abs(f(z)))

    assert residual(1.0) < 1e-6
    assert residual(0.5) > 1e-2


def test_z_function_examples():
    th = np.linspace(0.01, math.pi - 0.01, 99)
    np.testing.assert_allclose(ang.z_function(0, 0, th, 0.4), 1.0)
    v = ang.z_function(1, 2, th, 0.0)
    assert np.all(np.isfinite(v))
    z11 = np.abs(ang.z_function(1, 1, np.linspace(0.01, math.pi - 0.01, 999), 0.0))
    assert np.all(np.isfinite(z11)) and np.max(np.abs(np.diff(z11))) < 0.05 * z11.max()
    with pytest.raises(InadmissibleError):
        ang.z_function(1, 3, th, 0.0)
    with pytest.raises(DomainError):
        ang.z_function(1, 1, [0.0], 0.0)


def test_z_phase():
    z = ang.z_function(2, 1, [1.0], math.pi / 2)
    assert z[0].real == pytest.approx(0.0, abs=1e-12 * abs(z[0]))


@pytest.mark.parametrize("l", range(5))
def test_z_degree_and_finiteness(l):
    th = np.linspace(1e-3, math.pi - 1e-3, 199)
    assert np.all(np.isfinite(ang.z_polar(l, l, th)))


def test_z_self_norm_positive():
    assert ang.z_self_norm(1, 1) > 0


def test_legendre_relation_examples():
    g = ang.default_legendre_grid()
    mean, dev = ang.legendre_relation_check(1, 1, g)
    assert mean == pytest.approx(-1.0, rel=1e-13) and dev < 1e-12
    assert ang.legendre_relation_check(1, 0, g)[1] < 1e-12
    assert ang.legendre_relation_check(5, 3, g)[1] < 1e-9


def test_legendre_relation_all():
    g = ang.default_legendre_grid()
    for l in range(7):
        for m in range(l + 1):
            assert ang.legendre_relation_check(l, m, g)[1] < 1e-9


def test_infinite_orthogonality():
    for l, lp, m in ((1, 2, 1), (3, 5, 0), (2, 4, 1)):
        r = ang.infinite_orthogonality_integral(l, lp, m)
        assert r.converged and abs(r.value) < 1e-9
    with pytest.raises(DomainError):
        ang.infinite_orthogonality_integral(2, 2, 0)


def test_infinite_orthogonality_unnormalized_matches_sin_measure():
    r = ang.infinite_orthogonality_integral(1, 3, 1, normalized=False)
    assert abs(r.value) < 1e-12


def test_spherical_harmonic_normalization():
    from romanovski.quad import integrate
    for l, m in ((1, 0), (2, 1), (3, -2)):
        f = lambda t: np.abs(ang.spherical_harmonic(l, m, t, 0.0)) ** 2 * np.sin(t)
        assert 2 * math.pi * integrate(f, (1e-9, math.pi - 1e-9)).value == pytest.approx(1.0, rel=1e-8)


def test_radial_energy():
    assert ang.noncentral_radial_energy(0, 0) == -1
    assert ang.noncentral_radial_energy(1, 1) == pytest.approx(-1 / 9)
    l = ang.effective_l(2.0)
    assert l == pytest.approx(1.25)
    assert ang.noncentral_radial_energy(0, l) == pytest.approx(-1 / 2.25 ** 2)


def test_su11_labels():
    for l in range(6):
        for m in range(-l, l * (l + 1) + 1):
            lab = ang.AngularLabel(l, m)
            assert lab.m_prime - lab.j == lab.n
            assert lab.energy == -(lab.j - 0.5) ** 2 == -m * m
    assert ang.AngularLabel(1, 1).su11 == (1.5, 2.5)

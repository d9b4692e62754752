from __future__ import annotations

import math

import mpmath
import numpy as np
import pytest

from romanovski import potentials as pot
from romanovski.errors import AdmissibilityError, CatalogOnlyError, DomainError
from romanovski.quad import integrate

Z21 = np.linspace(-3, 3, 21)


def test_scarf2_levels():
    levels = pot.spectrum(pot.ScarfII(10, 5, 1), 9)
    assert [e.energy for e in levels] == [100 - (10 - n) ** 2 for n in range(10)]
    assert levels[1].energy == 19
    assert levels[3].reduced == -49


def test_scarf2_level_differences():
    for a, al in ((10.0, 1.0), (7.5, 0.5)):
        lv = pot.spectrum(pot.ScarfII(a, 2.0, al), pot.scarf2_bound_count(a, al) - 1)
        for lo, hi in zip(lv, lv[1:]):
            assert hi.energy - lo.energy == pytest.approx(al * al * (2 * a / al - 2 * hi.n + 1), abs=1e-12)


@pytest.mark.parametrize("a,count", [(2.5, 3), (3.5, 4), (10, 10)])
def test_scarf2_bound_count(a, count):
    assert pot.scarf2_bound_count(a) == count
    pot.spectrum(pot.ScarfII(a, 1.0), count - 1)
    with pytest.raises(AdmissibilityError):
        pot.spectrum(pot.ScarfII(a, 1.0), count)


@pytest.mark.parametrize("n", range(4))
def test_scarf2_residual(n):
    assert pot.schrodinger_residual(pot.scarf2_wavefunction(10, 5, n), Z21).max() < 1e-8


def test_scarf2_with_alpha():
    for n in range(3):
        assert pot.schrodinger_residual(pot.scarf2_wavefunction(6, 1.5, n, 2.0), Z21).max() < 1e-8


def test_scarf2_orthogonality_in_z():
    norms = [pot.scarf2_overlap_x(10, 5, n, n).value for n in range(4)]
    for n in range(4):
        for m in range(n + 1, 4):
            v = pot.scarf2_overlap_x(10, 5, n, m).value
            assert abs(v) / math.sqrt(norms[n] * norms[m]) < 1e-8


def test_scarf2_overlap_x_equals_z_integral():
    w0, w2 = pot.scarf2_wavefunction(10, 5, 0), pot.scarf2_wavefunction(10, 5, 2)
    vz = integrate(lambda z: w0(z) * w0(z), (-math.inf, math.inf)).value
    assert pot.scarf2_overlap_x(10, 5, 0, 0).value == pytest.approx(vz, rel=1e-10)
    v, n1, n2 = pot.wavefunction_overlap(w0, w2)
    assert abs(v) / math.sqrt(n1 * n2) < 1e-8


def test_plain_dx_measure_is_not_orthogonal():
    g = lambda n: (lambda x: pot.scarf2_g(10, 5, n, x))
    v = integrate(lambda x: g(0)(x) * g(1)(x), (-math.inf, math.inf)).value
    a = integrate(lambda x: g(0)(x) ** 2, (-math.inf, math.inf)).value
    b = integrate(lambda x: g(1)(x) ** 2, (-math.inf, math.inf)).value
    assert abs(v) / math.sqrt(a * b) > 1e-2


def test_scarf2_rejects_unbound_level():
    with pytest.raises(AdmissibilityError):
        pot.scarf2_wavefunction(2.5, 1, 3)


def test_potential_matches_superpotential():
    a, b = 3.0, 1.0
    U = pot.scarf2_superpotential(a, b, Z21)
    dU = a / np.cosh(Z21) ** 2 - b * np.tanh(Z21) / np.cosh(Z21)
    np.testing.assert_allclose(U * U - dU, pot.potential_value(pot.ScarfII(a, b), Z21), rtol=1e-12, atol=1e-12)


def test_superpotential_antiderivative_against_quadrature():
    for z in (-2.0, 0.7, 3.1):
        for al in (1.0, 0.5):
            lo, hi, sign = (0.0, z, 1) if z > 0 else (z, 0.0, -1)
            num = sign * integrate(lambda y: pot.scarf2_superpotential(10, 5, y, al), (lo, hi)).value
            assert float(pot.scarf2_superpotential_integral(10, 5, z, al)) == pytest.approx(num, rel=1e-12, abs=1e-12)


@pytest.mark.parametrize("a,b", [(10, 5), (3, 1)])
def test_susy_ground_state(a, b):
    assert pot.susy_ground_state_check(a, b, np.linspace(-5, 5, 101)) < 1e-9


def test_rosen_morse1():
    assert pot.spectrum(pot.RosenMorseI(1, 50), 0)[0].energy == -621
    zz = np.linspace(0.05, math.pi - 0.05, 21)
    for n in range(4):
        assert pot.schrodinger_residual(pot.rosen_morse1_wavefunction(1, 50, n), zz).max() < 1e-8


def test_rosen_morse1_ground_state_closed_form():
    z = np.linspace(0.2, 2.9, 7)
    wf = pot.rosen_morse1_wavefunction(1, 50, 0)
    ratio = wf(z) / (np.sin(z) ** 2 * np.exp(-25 * z))
    np.testing.assert_allclose(ratio, ratio[0], rtol=1e-12)


@pytest.mark.parametrize("l,b", [(1, 50.0), (2, 3.0)])
def test_rosen_morse1_orthogonality(l, b):
    norms = [pot.rosen_morse1_overlap(l, b, n, n).value for n in range(3)]
    for n in range(3):
        for m in range(n + 1, 3):
            v = pot.rosen_morse1_overlap(l, b, n, m).value
            assert abs(v) / math.sqrt(norms[n] * norms[m]) < 1e-8


def test_rosen_morse2_levels_and_residuals():
    ps = pot.RosenMorseII(10, 10)
    assert pot.bound_state_count(ps) == 7
    levels = pot.spectrum(ps, 6)
    assert levels[0].energy == pytest.approx(0.0, abs=1e-12)
    assert all(lo.reduced < hi.reduced for lo, hi in zip(levels, levels[1:]))
    for n in range(7):
        assert pot.schrodinger_residual(pot.rosen_morse2_wavefunction(10, 10, n), Z21).max() < 1e-8
    with pytest.raises(AdmissibilityError):
        pot.spectrum(ps, 7)


def test_rosen_morse2_params():
    mu, nu, e = pot.rosen_morse2_params(10, 10, 0)
    assert (mu, nu, e) == pytest.approx((9, 11, -100))


def test_hydrogen():
    assert pot.spectrum(pot.Coulomb(), 0)[0].energy == -1
    z = np.array([0.5, 1.0, 2.0])
    wf = pot.hydrogen_wavefunction(0, 0)
    np.testing.assert_allclose(wf.radial(z) / np.exp(-z), 2.0)
    zr = np.linspace(0.05, 10, 21)
    for n in range(4):
        for l in range(3):
            assert pot.schrodinger_residual(pot.hydrogen_wavefunction(n, l), zr).max() < 1e-8


def test_oscillator3d():
    assert pot.spectrum(pot.Oscillator3D(), 0)[0].energy == 3
    zr = np.linspace(0.05, 10, 21)
    for n in range(4):
        for l in range(3):
            assert pot.schrodinger_residual(pot.oscillator3d_wavefunction(n, l), zr).max() < 1e-8


def test_oscillator1d():
    wf = pot.oscillator1d_wavefunction(0)
    np.testing.assert_allclose(wf(Z21), np.exp(-Z21 ** 2 / 2))
    assert pot.schrodinger_residual(wf, Z21).max() == 0
    for n in range(5):
        assert pot.schrodinger_residual(pot.oscillator1d_wavefunction(n, 3.0, 0.4), Z21).max() < 1e-8
    assert pot.spectrum(pot.Oscillator1D(3.0), 2)[2].energy == 6.0


def test_exp_barrier_solutions_are_modified_bessel():
    A, rate = 2.0, 1.0
    for n in range(4):
        wf = pot.exp_barrier_wavefunction(n, A, rate)
        assert not wf.bound
        assert wf.energy == pytest.approx(-(rate / 2) ** 2 * (n + 0.5) ** 2)
        assert pot.spectrum(pot.ExpBarrier(A, rate), n)[n].reduced == 0.25 + n * (n + 1)
        assert pot.schrodinger_residual(wf, Z21).max() < 1e-8
        for z in (-1.0, 0.5, 2.0):
            u = 2 * math.sqrt(A) / rate * math.exp(rate * z / 2)
            ref = math.sqrt(2 / math.pi) * float(mpmath.besselk(n + 0.5, u))
            assert float(wf(np.array(z))) == pytest.approx(ref, rel=1e-12)


KG_FROZEN = {  # mpmath roots of s^4 - 2 mu s^2 - 2 A n s + n^2 with E = s^2 - mu
    (1.0, 1.0, 1): (1.8350866816396354, -0.86198256826930725),
    (1.0, 1.0, 2): (1.9745162326015303, -0.38157518784997603),
    (2.0, 1.0, 1): (2.790673988934146, -0.9492532351252111),
    (2.0, 1.0, 2): (3.8150450489199272, -0.79405209068673021),
    (1.0, 5.0, 1): (5.5215382029878168, -4.946129736395538),
    (1.0, 5.0, 2): (5.8457826100201476, -4.7820068463123602),
}


@pytest.mark.parametrize("key", list(KG_FROZEN))
def test_klein_gordon_roots(key):
    A, mu, n = key
    e1, e2 = pot.klein_gordon_energies(pot.KGParams(A, 1.0, mu), n)
    assert (e1, e2) == pytest.approx(KG_FROZEN[key], rel=1e-12)
    for e in (e1, e2):
        assert pot.kg_matching_residual(pot.KGParams(A, 1.0, mu), n, e) < 1e-9


def test_klein_gordon_ground_pair():
    assert pot.klein_gordon_energies(pot.KGParams(2.0, 1.0, 1.0), 0) == pytest.approx((1.0, -1.0))


def test_klein_gordon_printed_form_is_the_linear_identification():
    for n in range(3):
        for E in pot.klein_gordon_printed(1.0, 1.0, n):
            assert pot.kg_linear_residual(1.0, 1.0, n, E) < 1e-12


def test_catalog_only_spectrum():
    for ps in (pot.Morse(3, 2), pot.Eckart(2, 3), pot.ScarfI(3, 2), pot.PoschlTeller2(4, 1)):
        with pytest.raises(CatalogOnlyError):
            pot.spectrum(ps, 1)


@pytest.mark.parametrize("ps", [pot.Morse(3, 2), pot.ScarfI(3, 2), pot.PoschlTeller2(4, 1), pot.Eckart(1, 6)],
                         ids=lambda p: type(p).__name__)
def test_catalog_levels_finite_difference(ps):
    g = pot.default_grid(ps, 21)
    h = 1e-3
    for n in range(2):
        E, psi = pot.catalog_level(ps, n)
        fd = lambda s: (psi(g + s) - 2 * psi(g) + psi(g - s)) / s ** 2
        d2 = (4 * fd(h / 2) - fd(h)) / 3
        v = pot.potential_value(ps, g)
        scale = np.maximum(np.abs(psi(g)) * (1 + abs(E) + np.abs(v)), np.abs(d2))
        assert np.max(np.abs(-d2 + (v - E) * psi(g)) / scale) < 1e-6


def test_domain_errors():
    with pytest.raises(DomainError):
        pot.potential_value(pot.RosenMorseI(1, 2), np.array([0.0]))
    with pytest.raises(DomainError):
        pot.make_potential("unknown")


def test_make_potential_aliases():
    assert pot.make_potential("hydrogen", Z=1.0, l=2.0) == pot.Coulomb(1.0, 2)
    assert isinstance(pot.make_potential("scarfII", a=2.0, b=1.0), pot.ScarfII)

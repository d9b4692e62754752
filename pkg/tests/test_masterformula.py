from __future__ import annotations

import math
from fractions import Fraction as F

import numpy as np
import pytest
from mpmath import mp, jacobi as mp_jacobi

from romanovski.errors import DomainError, PoleInC, ZeroLeadingTerm
from romanovski.hyperclass import Bessel, HyperParams, Jacobi, Romanovski
from romanovski.masterformula import (gauss2f1_terminating, jacobi_complex, master_prefactor, monic_master,
                                      monic_master_regularized, romanovski_via_jacobi)
from romanovski.rodrigues import rodrigues_raw

SETS = [Jacobi(1, 2), Jacobi(F(1, 2), F(-1, 3)), Bessel(2, 2), Bessel(F(7, 2), 3),
        Romanovski(F(13, 2), -4), Romanovski(F(15, 2), 2), Romanovski(F(5, 3), F(1, 2))]


def test_linear_example():
    mc = monic_master(HyperParams(1, 0, 1, -5, -4), 1)
    np.testing.assert_allclose(mc.real, [0.8, 1.0], atol=1e-14)


def test_jacobi_linear_example():
    mc = monic_master(Jacobi(1, 2).hyper(), 1)
    np.testing.assert_allclose(mc.real, [-0.2, 1.0], atol=1e-14)


@pytest.mark.parametrize("ws", SETS)
def test_oracle_equivalence(ws):
    for n in range(7):
        ref = rodrigues_raw(ws, n).monic().to_numpy()
        mc = monic_master(ws.hyper(), n)
        assert np.max(np.abs(mc.real - ref)) < 1e-9
        assert mc.max_imag < 1e-10


def test_regularized_branch_agrees_with_series():
    hp = Jacobi(1, 2).hyper()
    for n in range(6):
        np.testing.assert_allclose(monic_master_regularized(hp, n).real, monic_master(hp, n).real, atol=1e-9)


def test_double_root_uses_regularized_sum():
    mc = monic_master(Bessel(2, 2).hyper(), 3)
    assert mc.discriminant_root == 0
    np.testing.assert_allclose(mc.real, [1 / 15, 6 / 15, 1.0, 1.0], atol=1e-12)


def test_degenerate_leading_term():
    hp = Romanovski(F(7, 2), 0).hyper()
    assert master_prefactor(hp, 4) == 0
    with pytest.raises(ZeroLeadingTerm):
        monic_master(hp, 4)


def test_requires_quadratic_sigma():
    with pytest.raises(DomainError):
        monic_master(HyperParams(0, 0, 1, -2, 0), 2)


def test_terminating_series():
    assert gauss2f1_terminating(-2, 1, 1, 0.5) == pytest.approx(0.25)
    with pytest.raises(PoleInC):
        gauss2f1_terminating(-3, 1, -1, 0.5)
    with pytest.raises(DomainError):
        gauss2f1_terminating(1, 1, 1, 0.5)


def test_complex_jacobi_against_mpmath():
    mp.dps = 20
    for n in range(5):
        for al, be, x in ((0.5 + 1j, 0.5 - 1j, 0.3j), (1.0, 2.0, 0.7)):
            assert abs(jacobi_complex(n, al, be, x) - complex(mp_jacobi(n, al, be, x))) < 1e-12


@pytest.mark.parametrize("p,q", [(F(7, 2), -4), (5, 2)])
def test_romanovski_as_imaginary_jacobi(p, q):
    xs = np.linspace(-3, 3, 61)
    for n in range(6):
        c = rodrigues_raw(Romanovski(p, q), n).to_numpy()
        ref = np.polynomial.polynomial.polyval(xs, c)
        got = np.array([romanovski_via_jacobi(float(p), float(q), n, x) for x in xs])
        assert np.max(np.abs(got - ref)) < 1e-9


def test_swapped_jacobi_parameters_fail_for_nonzero_q():
    # with the two upper indices exchanged the identity only survives at q = 0
    p, q, n, x = 3.5, -4.0, 2, 0.7
    ref = float(rodrigues_raw(Romanovski(F(7, 2), -4), n)(x))
    swapped = (-2) ** n * math.factorial(n) * (1j) ** n * jacobi_complex(n, complex(-p, -q / 2), complex(-p, q / 2), 1j * x)
    assert abs(swapped - ref) > 1.0
    assert abs(romanovski_via_jacobi(p, 0.0, n, x) - float(rodrigues_raw(Romanovski(F(7, 2), 0), n)(x))) < 1e-12

import mpmath
import pytest

from tracelift.specfun import (
    arcsin_fourier,
    arcsin_s,
    arcsin_series,
    beta_half,
    beta_half_c,
    bessel_k,
    dirichlet_L1,
    dirichlet_L1_series,
    periodized_arctan,
    script_F,
    script_F_limit,
    script_F_prime,
)


@pytest.mark.parametrize("a", [1, 2, 4])
def test_arcsin_at_s_zero(a):
    assert abs(arcsin_s(a, 0) - mpmath.asin(1 / mpmath.sqrt(a))) < 1e-10


@pytest.mark.parametrize("a", [1, 1.5, 2, 4, 9])
@pytest.mark.parametrize("s", [0, 0.25, 1, 2.5])
def test_incomplete_beta_representation(a, s):
    assert abs(arcsin_s(a, s) - arcsin_s(a, s, method="quad")) < 1e-10


@pytest.mark.parametrize("x", [0, 0.1, 0.25, 0.4, 0.5])
@pytest.mark.parametrize("y", [0.6, 1.2])
def test_arcsin_fourier_expansion(x, y):
    z = mpmath.mpc(x, y)
    assert abs(arcsin_fourier(1, z) - arcsin_series(1, z)) < 1e-6


def test_beta_halves_add_up_to_gamma():
    assert abs(beta_half(1) + beta_half_c(1) - mpmath.sqrt(mpmath.pi)) < 1e-14
    oracle = mpmath.quad(lambda t: mpmath.exp(-4 * mpmath.pi * t) / mpmath.sqrt(t), [1, mpmath.inf])
    assert abs(beta_half(4 * mpmath.pi) - oracle) < 1e-12


def test_bessel_k():
    assert abs(bessel_k(0, 1, method="integral") - mpmath.besselk(0, 1)) < 1e-10
    for x in (1, 2):
        assert abs(bessel_k(0.5, x) - mpmath.sqrt(mpmath.pi / (2 * x)) * mpmath.exp(-x)) < 1e-14


def test_script_F_against_oracles():
    z = mpmath.mpc(0.3, 0.8)
    assert abs(script_F(z) - script_F_limit(z)) < 1e-5
    assert abs(script_F(z) - periodized_arctan(z)) < 1e-6


def test_script_F_prime_by_finite_differences():
    z, h = mpmath.mpc(0.3, 0.8), mpmath.mpf("1e-4")
    fx = (script_F(z + h) - script_F(z - h)) / (2 * h)
    fy = (script_F(z + 1j * h) - script_F(z - 1j * h)) / (2 * h)
    assert abs(script_F_prime(z) - (fx - 1j * fy) / 2) < 1e-5


def test_script_F_prime_symmetry():
    # 𝓕 is even in x, so ∂𝓕/∂x vanishes at x = 1/2 and 𝓕′ is purely imaginary there
    assert abs(mpmath.re(script_F_prime(mpmath.mpc(0.5, 0.9)))) < 1e-10


def test_L1_series():
    assert abs(dirichlet_L1_series(5) - float(dirichlet_L1(5))) < 1e-8

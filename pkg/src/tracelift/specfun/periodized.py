#  Copyright (c) 2024. Davi Pereira dos Santos
#  This file is part of the tracelift project.
#  Please respect the license - more about this in the section (*) below.
#
#  tracelift is free software: you can redistribute it and/or modify
#  it under the terms of the GNU General Public License as published by
#  the Free Software Foundation, either version 3 of the License, or
#  (at your option) any later version.
#
#  tracelift is distributed in the hope that it will be useful,
#  but WITHOUT ANY WARRANTY; without even the implied warranty of
#  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#  GNU General Public License for more details.
#
#  You should have received a copy of the GNU General Public License
#  along with tracelift.  If not, see <http://www.gnu.org/licenses/>.
#
#  (*) Removing authorship by any means, e.g. by distribution of derived
#  works or verbatim, obfuscated, compiled or rewritten versions of any
#  part of this work is illegal and it is unethical regarding the effort and
#  time spent here.
#

"""
The periodized arcsin sums and their s → 0 renormalization 𝓕

Σ_ℓ arcsin_s(a_ℓ), a_ℓ = ((x+ℓ)² + y²)/y², is a pole term plus the Bessel series
Σ_{n≥1} A_s (πny)^s I_s(2πny) cos(2πnx), A_s = 4y√π/Γ(s+1/2). Its n-th coefficient decays like n^{−2} only, so every
Bessel series here is summed exactly up to N and through the large-α expansion of I_s beyond N; the resulting tails
Σ_{n>N} cos(2πnx)/n^{2k+2} and Σ_{n>N} sin(2πnx)/n^{2k+1} are Bernoulli polynomials minus finite partial sums.
"""
import logging
from math import ceil

import mpmath
import numpy as np

from tracelift.errors import DomainError
from tracelift.specfun.bessel import ASYMPTOTIC_TERMS, arcsin_bessel_integral, arcsin_bessel_integral_derivative, asymptotic_coefficients
from tracelift.specfun.beta import arcsin_constant, arcsin_s

log = logging.getLogger(__name__)

SWITCH_ALPHA = 40
HURWITZ_TERMS = 4


def cosine_zeta(e: int, x):
    """
    Σ_{n≥1} cos(2πnx)/n^e for even e ≥ 2

    >>> abs(cosine_zeta(2, 0) - mpmath.pi ** 2 / 6) < 1e-14
    True
    """
    j = e // 2
    return (-1) ** (j + 1) * (2 * mpmath.pi) ** e * mpmath.bernpoly(e, mpmath.frac(x)) / (2 * mpmath.factorial(e))


def sine_zeta(e: int, x):
    """
    Σ_{n≥1} sin(2πnx)/n^e for odd e ≥ 1 (0 at integers)

    >>> abs(sine_zeta(1, 0.25) - mpmath.pi / 4) < 1e-14
    True
    """
    t = mpmath.frac(x)
    if t == 0:
        return mpmath.mpf(0)
    j = (e - 1) // 2
    return (-1) ** (j + 1) * (2 * mpmath.pi) ** e * mpmath.bernpoly(e, t) / (2 * mpmath.factorial(e))


def exact_terms(y) -> int:
    """Number of Bessel integrals computed by quadrature: enough for 2πNy ≥ 40"""
    return max(4, ceil(SWITCH_ALPHA / (2 * float(mpmath.pi) * float(y))))


def _fourier_sum(x, n_max, exact, coeffs, kind):
    """Σ_{n≤N} trig(2πnx)·exact(n) + Σ_k c_k Σ_{n>N} trig(2πnx)/n^{e_k}"""
    if kind == "cos":
        trig, full, shift = mpmath.cospi, cosine_zeta, 2
    else:
        trig, full, shift = mpmath.sinpi, sine_zeta, 1
    angles = [trig(2 * n * x) for n in range(1, n_max + 1)]
    head = mpmath.fsum(t * exact(n) for n, t in enumerate(angles, 1))
    tail = []
    for k, c in enumerate(coeffs):
        e = shift + 2 * k
        partial = mpmath.fsum(t / mpmath.mpf(n) ** e for n, t in enumerate(angles, 1))
        tail.append(c * (full(e, x) - partial))
    return head + mpmath.fsum(tail)


def _unpack(z):
    z = mpmath.mpmathify(z)
    if z.imag <= 0:
        raise DomainError(f"{z} is not in the upper half plane.")
    return z.real, z.imag


def bessel_series(s, z):
    """
    Σ_{n≥1} A_s (πny)^s I_s(2πny) cos(2πnx), the non-constant part of the arcsin Fourier expansion
    """
    x, y = _unpack(z)
    s = mpmath.mpf(s)
    amp = 4 * y * mpmath.sqrt(mpmath.pi) / mpmath.gamma(s + 0.5)
    n_max = exact_terms(y)
    coeffs = [amp * c / 2**s * (2 * mpmath.pi * y) ** (-2 - 2 * k) for k, c in enumerate(asymptotic_coefficients(s))]
    log.debug(f"Bessel series at s={mpmath.nstr(s, 5)}, y={mpmath.nstr(y, 5)}: {n_max} exact terms, {ASYMPTOTIC_TERMS} asymptotic")
    return _fourier_sum(x, n_max, lambda n: amp * (mpmath.pi * n * y) ** s * arcsin_bessel_integral(s, 2 * mpmath.pi * n * y), coeffs, "cos")


def pole_term(s, y):
    """y√π Γ(s)/Γ(s+1/2), the constant term of the arcsin Fourier expansion"""
    s = mpmath.mpf(s)
    return y * mpmath.sqrt(mpmath.pi) * mpmath.gamma(s) / mpmath.gamma(s + 0.5)


def arcsin_fourier(s, z):
    """
    Right side of the arcsin Fourier expansion: pole term plus Bessel series, s > 0

    >>> z = mpmath.mpc(0.3, 0.8)
    >>> abs(arcsin_fourier(1, z) - arcsin_series(1, z)) < 1e-6
    True
    """
    if s <= 0:
        raise DomainError(f"The pole term needs s > 0, not s={s}.\nHint: use script_F() for the renormalized s=0 value.")
    y = _unpack(z)[1]
    return pole_term(s, y) + bessel_series(s, z)


def arcsin_series(s, z, cut: int | None = None):
    """
    Σ_{ℓ∈ℤ} arcsin_s(((x+ℓ)² + y²)/y²) for s > 0: |ℓ| ≤ L directly, |ℓ| > L through Hurwitz zeta values

    With v = y²/(x+ℓ)², B(v/(1+v); p, 1/2) = Σ_N v^{p+N} Σ_{k+j=N} (1/2)_k/(k!(p+k)) binom(−p−k, j), p = s + 1/2.
    """
    if s <= 0:
        raise DomainError(f"The periodized arcsin sum diverges for s={s}.\nHint: s should be positive.")
    x, y = _unpack(z)
    s = mpmath.mpf(s)
    x = x - mpmath.floor(x + 0.5)
    cut = cut or max(64, ceil(8 * float(y)))
    direct = mpmath.fsum(arcsin_s(((x + ell) ** 2 + y * y) / (y * y), s) for ell in range(-cut, cut + 1))
    p = s + 0.5
    tail = []
    for order in range(HURWITZ_TERMS):
        coef = mpmath.fsum(mpmath.rf(0.5, k) / (mpmath.factorial(k) * (p + k)) * mpmath.binomial(-p - k, order - k) for k in range(order + 1))
        e = 2 * p + 2 * order
        tail.append(coef * y**e * (mpmath.zeta(e, cut + 1 + x) + mpmath.zeta(e, cut + 1 - x)))
    return direct + arcsin_constant(s) * mpmath.fsum(tail)


def script_F(z):
    """
    𝓕(z) = 4y Σ_{n≥1} cos(2πnx) I_0(2πny), even and 1-periodic in x

    >>> a, b, c = script_F(0.3 + 0.8j), script_F(-0.3 + 0.8j), script_F(1.3 + 0.8j)
    >>> abs(a - b) < 1e-12, abs(a - c) < 1e-12
    (True, True)
    """
    return bessel_series(0, z)


def script_F_gradient(z):
    """(∂𝓕/∂x, ∂𝓕/∂y)"""
    x, y = _unpack(z)
    n_max = exact_terms(y)
    two_pi_y = 2 * mpmath.pi * y
    cs = asymptotic_coefficients(0)
    fx = _fourier_sum(
        x,
        n_max,
        lambda n: -8 * mpmath.pi * n * y * arcsin_bessel_integral(0, two_pi_y * n),
        [-8 * mpmath.pi * y * c * two_pi_y ** (-2 - 2 * k) for k, c in enumerate(cs)],
        "sin",
    )
    fy = _fourier_sum(
        x,
        n_max,
        lambda n: 4 * arcsin_bessel_integral(0, two_pi_y * n) + 4 * two_pi_y * n * arcsin_bessel_integral_derivative(two_pi_y * n),
        [-4 * (1 + 2 * k) * c * two_pi_y ** (-2 - 2 * k) for k, c in enumerate(cs)],
        "cos",
    )
    return fx, fy


def script_F_prime(z):
    """
    𝓕′ = ∂𝓕/∂z = (∂_x − i∂_y)𝓕/2, defined off the vertical lines x ∈ ℤ

    >>> z, h = mpmath.mpc(0.3, 0.8), mpmath.mpf("1e-4")
    >>> fx = (script_F(z + h) - script_F(z - h)) / (2 * h)
    >>> fy = (script_F(z + 1j * h) - script_F(z - 1j * h)) / (2 * h)
    >>> abs(script_F_prime(z) - (fx - 1j * fy) / 2) < 1e-5
    True
    """
    fx, fy = script_F_gradient(z)
    return mpmath.mpc(fx, -fy) / 2


def neville(xs, ys, at=0):
    """
    Value at `at` of the interpolating polynomial through (xs, ys)

    >>> neville([1, 2, 3], [1, 4, 9], 0)
    mpf('0.0')
    """
    p = [mpmath.mpmathify(v) for v in ys]
    n = len(xs)
    for m in range(1, n):
        for i in range(n - m):
            p[i] = ((at - xs[i + m]) * p[i] + (xs[i] - at) * p[i + 1]) / (xs[i] - xs[i + m])
    return p[0]


LIMIT_SAMPLES = [mpmath.mpf("1e-2") / 2**k for k in range(4)]


def script_F_limit(z, samples=None):
    """
    𝓕 as lim_{s→0} (Σ_ℓ arcsin_s(a_ℓ) − pole term), extrapolated from small s
    """
    samples = samples or LIMIT_SAMPLES
    with mpmath.workdps(40):
        y = _unpack(z)[1]
        values = [arcsin_series(s, z) - pole_term(s, y) for s in samples]
        limit = neville(samples, values)
    return +limit


def _sgn_sum(s, z, cut):
    x, y = _unpack(z)
    x = x - mpmath.floor(x + 0.5)
    zc = mpmath.mpc(x, -y)
    direct = mpmath.fsum(mpmath.sign(x + ell) * (zc + ell) / (abs(mpmath.mpc(x + ell, y)) ** 2) ** (s + 1) for ell in range(-cut, cut + 1))
    tail = []
    for j in range(HURWITZ_TERMS):
        c = mpmath.binomial(-s - 1, j) * y ** (2 * j)
        e = 2 * s + 1 + 2 * j
        right, left = mpmath.zeta(e, cut + 1 + x), mpmath.zeta(e, cut + 1 - x)
        right2, left2 = mpmath.zeta(e + 1, cut + 1 + x), mpmath.zeta(e + 1, cut + 1 - x)
        tail.append(c * mpmath.mpc(right + left, -y * (right2 - left2)))
    return direct + mpmath.fsum(tail)


def script_F_prime_limit(z, samples=None):
    """
    𝓕′ = −(i/2) lim_{s→0} (y^{2s} Γ(s+1) Σ_ℓ sgn(x+ℓ)(z̄+ℓ)/|z+ℓ|^{2s+2} − Γ(s)), extrapolated from small s
    """
    samples = samples or LIMIT_SAMPLES
    with mpmath.workdps(40):
        y = _unpack(z)[1]
        cut = max(64, ceil(8 * float(y)))
        values = [y ** (2 * s) * mpmath.gamma(s + 1) * _sgn_sum(s, z, cut) - mpmath.gamma(s) for s in samples]
        limit = -0.5j * neville(samples, values)
    return +limit


def periodized_arctan(z, cut: int = 10_000) -> float:
    """
    s = 0 oracle: Σ_{|ℓ|≤L} arctan(y/|x+ℓ|) − ∫_{x−L−1/2}^{x+L+1/2} arctan(y/|u|) du, in floating point

    >>> z = 0.3 + 0.8j
    >>> abs(periodized_arctan(z) - float(script_F(z))) < 1e-6
    True
    """
    z = complex(z)
    x, y = z.real, z.imag
    x -= np.floor(x + 0.5)
    ell = np.arange(-cut, cut + 1, dtype=float)
    with np.errstate(divide="ignore"):
        total = np.sum(np.arctan(y / np.abs(x + ell)))

    def primitive(u):
        return u * np.arctan(y / u) + y / 2 * np.log1p((u / y) ** 2)

    return float(total - primitive(x + cut + 0.5) - primitive(cut + 0.5 - x))

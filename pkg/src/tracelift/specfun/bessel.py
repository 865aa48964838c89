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
K-Bessel functions and the arch integrals I_s(α) = ∫₀^{π/2} sin^{s+1}θ K_s(α sinθ) dθ
"""
import mpmath

from tracelift.errors import DomainError

ASYMPTOTIC_TERMS = 10


def bessel_k(s, x, method="mpmath"):
    """
    K_s(x) for x > 0; K_{−s} = K_s

    method="integral" evaluates K_s(x) = Γ(s+1/2)(2/x)^s/√π · ∫₀^∞ cos(xt)(1+t²)^{−s−1/2} dt by oscillatory quadrature;
    method="mpmath" delegates to mpmath.besselk.

    >>> abs(bessel_k(0, 1) - bessel_k(0, 1, method="integral")) < 1e-10
    True
    >>> abs(bessel_k(0.5, 2) - mpmath.sqrt(mpmath.pi / 4) * mpmath.exp(-2)) < 1e-14
    True
    >>> bessel_k(0, -1)
    Traceback (most recent call last):
    ...
    tracelift.errors.DomainError: K_s(x) needs x > 0, not x=-1.
    """
    if x <= 0:
        raise DomainError(f"K_s(x) needs x > 0, not x={x}.")
    s, x = abs(mpmath.mpf(s)), mpmath.mpf(x)
    match method:
        case "mpmath":
            return mpmath.besselk(s, x)
        case "integral":
            integral = mpmath.quadosc(lambda t: mpmath.cos(x * t) * (1 + t * t) ** (-s - 0.5), [0, mpmath.inf], omega=x)
            return mpmath.gamma(s + 0.5) * (2 / x) ** s / mpmath.sqrt(mpmath.pi) * integral
        case _:  # pragma: no cover
            raise DomainError(f"Unknown Bessel method: {method}.\nHint: use 'mpmath' or 'integral'.")


def arcsin_bessel_integral(s, alpha):
    """
    I_s(α) = ∫₀¹ (1−t²)^{s/2} K_s(α√(1−t²)) dt = ∫₀^{π/2} sin^{s+1}θ K_s(α sinθ) dθ

    >>> abs(arcsin_bessel_integral(0, 60) - arcsin_bessel_asymptotic(0, 60)) < 1e-16
    True
    """
    s, alpha = mpmath.mpf(s), mpmath.mpf(alpha)
    return mpmath.quad(lambda th: mpmath.sin(th) ** (s + 1) * mpmath.besselk(s, alpha * mpmath.sin(th)), [0, 1 / alpha, mpmath.pi / 2])


def arcsin_bessel_integral_derivative(alpha):
    """
    d/dα I_0(α) = −∫₀^{π/2} sin²θ K_1(α sinθ) dθ

    >>> h = mpmath.mpf("1e-5")
    >>> d = (arcsin_bessel_integral(0, 2 + h) - arcsin_bessel_integral(0, 2 - h)) / (2 * h)
    >>> abs(d - arcsin_bessel_integral_derivative(2)) < 1e-8
    True
    """
    alpha = mpmath.mpf(alpha)
    return -mpmath.quad(lambda th: mpmath.sin(th) ** 2 * mpmath.besselk(1, alpha * mpmath.sin(th)), [0, 1 / alpha, mpmath.pi / 2])


def asymptotic_coefficients(s, terms=ASYMPTOTIC_TERMS):
    """
    Coefficients 2^s (2k)! Γ(s+k+1)/k! of α^{−s−2−2k} in the large-α expansion of I_s(α)

    >>> [int(c) for c in asymptotic_coefficients(0, 4)]
    [1, 2, 24, 720]
    """
    s = mpmath.mpf(s)
    return [2**s * mpmath.factorial(2 * k) * mpmath.gamma(s + k + 1) / mpmath.factorial(k) for k in range(terms)]


def arcsin_bessel_asymptotic(s, alpha, terms=ASYMPTOTIC_TERMS):
    """
    Large-α expansion of I_s(α); the error is below the first omitted term for α ≳ 4 terms

    >>> abs(arcsin_bessel_asymptotic(1, 80) / arcsin_bessel_integral(1, 80) - 1) < 1e-12
    True
    """
    s, alpha = mpmath.mpf(s), mpmath.mpf(alpha)
    return mpmath.fsum(c * alpha ** (-s - 2 - 2 * k) for k, c in enumerate(asymptotic_coefficients(s, terms)))

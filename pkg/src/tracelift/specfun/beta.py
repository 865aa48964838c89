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
β_{1/2}, β^c_{1/2} and the incomplete-beta family arcsin_s
"""
from dataclasses import dataclass

import mpmath

from tracelift.errors import DomainError


def beta_half(s):
    """
    ∫₁^∞ e^{−st} t^{−1/2} dt = √(π/s) erfc(√s)

    >>> abs(beta_half(1) + beta_half_c(1) - mpmath.sqrt(mpmath.pi)) < 1e-14
    True
    >>> beta_half(0)
    Traceback (most recent call last):
    ...
    tracelift.errors.DomainError: β_1/2(s) diverges for s=0.
    Hint: s should be positive.
    """
    if s <= 0:
        raise DomainError(f"β_1/2(s) diverges for s={s}.\nHint: s should be positive.")
    s = mpmath.mpf(s)
    return mpmath.sqrt(mpmath.pi / s) * mpmath.erfc(mpmath.sqrt(s))


def beta_half_c(s):
    """
    ∫₀¹ e^{−st} t^{−1/2} dt, entire in s

    >>> beta_half_c(0)
    mpf('2.0')
    >>> abs(beta_half_c(-1) - mpmath.quad(lambda t: mpmath.exp(t) / mpmath.sqrt(t), [0, 1])) < 1e-12
    True
    """
    s = mpmath.mpf(s)
    if s == 0:
        return mpmath.mpf(2)
    root = mpmath.sqrt(abs(s))
    if s > 0:
        return mpmath.sqrt(mpmath.pi / s) * mpmath.erf(root)
    return mpmath.sqrt(mpmath.pi / -s) * mpmath.erfi(root)


@dataclass(frozen=True)
class ArcsinSParams:
    """
    Domain of arcsin_s: a ≥ 1, s > −1

    >>> ArcsinSParams(0.5, 1)
    Traceback (most recent call last):
    ...
    tracelift.errors.DomainError: arcsin_s needs a ≥ 1, not a=0.5.
    """

    a: float
    s: float

    def __post_init__(self):
        if self.a < 1:
            raise DomainError(f"arcsin_s needs a ≥ 1, not a={self.a}.")
        if self.s <= -1:
            raise DomainError(f"arcsin_s needs s > −1, not s={self.s}.\nHint: the defining integral diverges at t=1 otherwise.")


def arcsin_constant(s):
    """√π Γ(s+1) / (2Γ(s+1/2))"""
    s = mpmath.mpf(s)
    return mpmath.sqrt(mpmath.pi) * mpmath.gamma(s + 1) / (2 * mpmath.gamma(s + 0.5))


def arcsin_beta(a, s):
    """
    √π Γ(s+1)/(2Γ(s+1/2)) · B(1/a; s+1/2, 1/2)

    >>> abs(arcsin_beta(4, 0) - mpmath.pi / 6) < 1e-14
    True
    """
    a, s = mpmath.mpf(a), mpmath.mpf(s)
    return arcsin_constant(s) * mpmath.betainc(s + 0.5, 0.5, 0, 1 / a)


def arcsin_integral(a, s):
    """
    ∫₀¹ (a−t²)^{−1/2} ((1−t²)/(a−t²))^s dt by quadrature after t = sin θ

    >>> mpmath.nstr(arcsin_integral(1, 0), 12)
    '1.57079632679'
    """
    a, s = mpmath.mpf(a), mpmath.mpf(s)

    def f(theta):
        c2 = mpmath.cos(theta) ** 2
        d = a - 1 + c2
        return mpmath.cos(theta) * (c2 / d) ** s / mpmath.sqrt(d)

    return mpmath.quad(f, [0, mpmath.pi / 4, mpmath.pi / 2])


def arcsin_s(a, s, method="beta"):
    """
    arcsin_s(1/√a) = ∫₀¹ (a−t²)^{−1/2} ((1−t²)/(a−t²))^s dt, a ≥ 1, s > −1

    method="beta" uses the incomplete beta representation (s > −1/2), method="quad" the defining integral.

    >>> mpmath.nstr(arcsin_s(1, 0), 12), mpmath.nstr(arcsin_s(4, 0), 12)
    ('1.57079632679', '0.523598775598')
    >>> abs(arcsin_s(2, 1) - arcsin_s(2, 1, method="quad")) < 1e-12
    True
    """
    ArcsinSParams(a, s)
    match method:
        case "beta" if s > -0.5:
            return arcsin_beta(a, s)
        case "beta" | "quad":
            return arcsin_integral(a, s)
        case _:  # pragma: no cover
            raise DomainError(f"Unknown arcsin_s method: {method}.\nHint: use 'beta' or 'quad'.")


def arcsin_bound(a, s):
    """
    (a−1)^{−s−1/2}, an upper bound of arcsin_s(1/√a) for a > 1, s > 0

    >>> arcsin_s(3, 1) <= arcsin_bound(3, 1)
    True
    """
    return (mpmath.mpf(a) - 1) ** (-mpmath.mpf(s) - 0.5)

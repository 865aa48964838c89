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
The twisted Borcherds lift Φ_Δ(f, z) of a harmonic Maass form f of weight 1/2, and its z-derivative

Φ is evaluated through its Fourier expansion: a log-product line, a constant line and, inside the semicircles of
forms of discriminant ΔD with c⁻(D) ≠ 0, a singular line. Φ′ = ∂Φ/∂z is the holomorphic q-series, a constant and
an indicator sum that jumps across those semicircles.
"""
import logging
from dataclasses import dataclass, field
from math import isqrt

import mpmath

from tracelift.arith import character, divisors, kronecker, require_twist
from tracelift.errors import DomainError
from tracelift.lift.coefficients import HarmonicCoefficients
from tracelift.lift.series import DEFAULT_TRUNC, e, sum_series, upper_point
from tracelift.qforms import QuadForm, forms_containing, genus_character
from tracelift.specfun import dirichlet_L1, script_F, script_F_prime
from tracelift.traces import DEFAULT_TOL

log = logging.getLogger(__name__)

BOUNDARY_TOL = 1e-12


@dataclass(frozen=True)
class LiftValue:
    """
    >>> v = LiftValue(mpmath.mpf(1), mpmath.mpf(-2), (QuadForm(1, 1, -1),))
    >>> v.total, v.asdict()["forms"]
    (mpf('-1.0'), [[1, 1, -1]])
    """

    smooth_part: object
    singular_part: object
    contributing_forms: tuple[QuadForm, ...] = ()
    tail: object = 0
    terms: int = field(default=0, compare=False)

    @property
    def total(self):
        return self.smooth_part + self.singular_part

    def asdict(self):
        return {
            "total": self.total,
            "smooth": self.smooth_part,
            "singular": self.singular_part,
            "forms": [[q.a, q.b, q.c] for q in self.contributing_forms],
            "tail": self.tail,
            "terms": self.terms,
        }


def _character_sum(delta: int, f, w):
    """Σ_{b mod Δ} (Δ/b) f(w + b/Δ)"""
    chi = character(delta)
    return mpmath.fsum(chi(b) * f(w + mpmath.mpf(b) / delta) for b in range(delta) if chi(b))


def _twisted_orders(delta: int, coeffs: HarmonicCoefficients):
    """(m, c⁻(Δm²)) for the m ≥ 1 with Δm² in the principal part"""
    for D in coeffs.principal:
        m = isqrt(D // delta) if D % delta == 0 else 0
        if m and m * m * delta == D:
            yield m, coeffs.nonholo(D)


def on_geodesic(disc: int, z) -> list[QuadForm]:
    """
    Forms [a, b, c], a > 0, of discriminant disc whose geodesic passes through z

    >>> on_geodesic(5, mpmath.mpc(-0.5, mpmath.sqrt(5) / 2)), on_geodesic(5, 2j)
    ([[1, 1, -1]], [])
    """
    z = mpmath.mpmathify(z)
    x, y = z.real, z.imag
    forms, a = [], 1
    while 4 * a * a * y * y <= disc + BOUNDARY_TOL:
        half = mpmath.sqrt(max(disc - 4 * a * a * y * y, 0))
        for b in range(int(mpmath.floor(-2 * a * x - half)), int(mpmath.ceil(-2 * a * x + half)) + 1):
            if (b * b - disc) % (4 * a) == 0:
                q = QuadForm(a, b, (b * b - disc) // (4 * a))
                if abs(a * (x * x + y * y) + b * x + q.c) <= BOUNDARY_TOL:
                    forms.append(q)
        a += 1
    return forms


def _singular_forms(delta: int, coeffs: HarmonicCoefficients, z, strict: bool):
    """(D, Q) for the forms of discriminant ΔD, D in the principal part, whose semicircle contains z"""
    pairs = []
    for D in coeffs.principal:
        if strict and (hit := on_geodesic(delta * D, z)):
            raise DomainError(f"{mpmath.nstr(z, 8)} lies on the geodesic of {hit[0]}, where Φ′ jumps.\nHint: move the point off the geodesic.")
        pairs.extend((D, q) for q in forms_containing(delta * D, z))
    return pairs


def eval_phi(delta: int, coeffs: HarmonicCoefficients, z, trunc: int = DEFAULT_TRUNC, tol=DEFAULT_TOL) -> LiftValue:
    """
    Φ_Δ(f, z) = −4 Σ_{m≥1} c⁺(Δm²) Σ_b (Δ/b) log|1 − e(mz + b/Δ)|
              + √Δ L_Δ(1) (2c⁺(0) + y c⁻(0))
              − 4 Σ_{D>0} c⁻(D)/√D Σ_{Q ∈ Q_ΔD, a>0} χ_Δ(Q) 1_Q(z) (arctan(y√(ΔD)/(a|z|² + bx + c)) + π/2)

    plus (2c⁻(Δm²)/(m√Δ)) Σ_b (Δ/b) 𝓕(mz + b/Δ) for the m with c⁻(Δm²) ≠ 0.

    >>> f = HarmonicCoefficients.finite({5: 1}, {0: -8, 1: 2})
    >>> v = eval_phi(5, f, 2j)
    >>> v.singular_part, v.contributing_forms
    (0, ())
    >>> abs(eval_phi(5, f, 0.3 + 2j).total - eval_phi(5, f, 1.3 + 2j).total) < 1e-12
    True
    >>> eval_phi(5, f, -0.5 + 0.5j).contributing_forms
    ([1, 1, -1],)
    """
    delta = require_twist(delta)
    z = upper_point(z)
    y = z.imag
    root = mpmath.sqrt(delta)

    def term(m):
        c = coeffs.holo(delta * m * m)
        if not c:
            return 0
        return -4 * c * _character_sum(delta, lambda w: mpmath.log(abs(1 - e(w))), m * z)

    series = sum_series(term, tol, trunc, label=f"Φ_{delta} log-product line")
    smooth = series.value + root * dirichlet_L1(delta) * (2 * coeffs.holo(0) + y * coeffs.nonholo(0))
    for m, c in _twisted_orders(delta, coeffs):
        smooth += 2 * c / (m * root) * _character_sum(delta, script_F, m * z)

    singular, forms = mpmath.mpf(0), []
    for D, q in _singular_forms(delta, coeffs, z, strict=False):
        chi = genus_character(delta, q)
        if chi:
            P = q.a * abs(z) ** 2 + q.b * z.real + q.c
            singular += -4 * coeffs.nonholo(D) / mpmath.sqrt(D) * chi * (mpmath.atan(y * mpmath.sqrt(delta * D) / P) + mpmath.pi / 2)
            forms.append(q)
    log.debug(f"Φ_{delta}({mpmath.nstr(z, 8)}): {series.terms} terms, {len(forms)} singular forms")
    return LiftValue(smooth, singular if forms else 0, tuple(forms), series.tail, series.terms)


def eval_phi_prime(delta: int, coeffs: HarmonicCoefficients, z, trunc: int = DEFAULT_TRUNC, tol=DEFAULT_TOL) -> LiftValue:
    """
    Φ′_Δ(f, z) = 4πi√Δ Σ_{n≥1} (Σ_{d|n} (Δ/(n/d)) d c⁺(Δd²)) e(nz) − (i/2)√Δ L_Δ(1) c⁻(0)
               + 2i√Δ Σ_{D>0} c⁻(D) Σ_{Q ∈ Q_ΔD, a>0} χ_Δ(Q) 1_Q(z)/Q(z,1)

    plus (2c⁻(Δm²)/√Δ) Σ_b (Δ/b) 𝓕′(mz + b/Δ) for the m with c⁻(Δm²) ≠ 0. Points on a geodesic are rejected.

    >>> f = HarmonicCoefficients.finite({5: 1}, {0: -8, 1: 2})
    >>> z, h = mpmath.mpc(0.3, 2), mpmath.mpf("1e-5")
    >>> dx = (eval_phi(5, f, z + h).total - eval_phi(5, f, z - h).total) / (2 * h)
    >>> dy = (eval_phi(5, f, z + 1j * h).total - eval_phi(5, f, z - 1j * h).total) / (2 * h)
    >>> abs(eval_phi_prime(5, f, z).total - (dx - 1j * dy) / 2) < 1e-6
    True
    >>> z0 = mpmath.mpc(-0.5, mpmath.sqrt(5) / 2)
    >>> eval_phi_prime(5, f, z0)
    Traceback (most recent call last):
    ...
    tracelift.errors.DomainError: (-0.5 + 1.118034j) lies on the geodesic of [1, 1, -1], where Φ′ jumps.
    Hint: move the point off the geodesic.
    """
    delta = require_twist(delta)
    z = upper_point(z)
    root = mpmath.sqrt(delta)
    scale = 4j * mpmath.pi * root

    def term(n):
        c = mpmath.fsum(k * d * coeffs.holo(delta * d * d) for d in divisors(n) if (k := kronecker(delta, n // d)))
        return c * e(n * z) if c else 0

    series = sum_series(term, tol / abs(scale), trunc, label=f"Φ′_{delta} q-series")
    smooth = scale * series.value - 0.5j * root * dirichlet_L1(delta) * coeffs.nonholo(0)
    for m, c in _twisted_orders(delta, coeffs):
        smooth += 2 * c / root * _character_sum(delta, script_F_prime, m * z)

    singular, forms = mpmath.mpc(0), []
    for D, q in _singular_forms(delta, coeffs, z, strict=True):
        chi = genus_character(delta, q)
        if chi:
            singular += 2j * root * coeffs.nonholo(D) * chi / q.eval(z)
            forms.append(q)
    return LiftValue(smooth, singular if forms else 0, tuple(forms), abs(scale) * series.tail, series.terms)


def predicted_jump(delta: int, coeffs: HarmonicCoefficients, q: QuadForm, z0):
    """
    Φ′ outside minus Φ′ inside the semicircle of q, at z₀ on its geodesic: −2i√Δ c⁻(D) χ_Δ(Q)/Q(z₀,1)

    >>> f = HarmonicCoefficients.finite({}, {0: -8, 1: 2})
    >>> jump = predicted_jump(5, f, QuadForm(1, 1, -1), mpmath.mpc(-0.5, mpmath.sqrt(5) / 2))
    >>> abs(jump - 8j / mpmath.sqrt(5)) < 1e-14
    True
    """
    D = q.disc // delta
    return -2j * mpmath.sqrt(delta) * coeffs.nonholo(D) * genus_character(delta, q) / q.eval(z0)

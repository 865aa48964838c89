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
Geodesics of indefinite forms

The geodesic c_Q = {a|z|² + bx + c = 0} is parametrized by hyperbolic arclength s from its apex, in the direction
on which dz/Q(z,1) = ds/√D. For a > 0 this runs from w to w′ (decreasing real part), for a < 0 from w′ to w.
One period of Γ_Q on c_Q has length 2 log ε, ε the fundamental unit of norm 1 of the primitive part.
"""
from dataclasses import dataclass
from functools import cached_property
from math import isqrt

import mpmath

from tracelift.arith import PellSolution, pell_minimal
from tracelift.errors import DomainError
from tracelift.qforms.quadform import Matrix, QuadForm, mobius, power


def automorph(q: QuadForm) -> Matrix:
    """
    Generator [[(t−bu)/2, −cu], [au, (t+bu)/2]] of the stabilizer of q, from the Pell solution of its primitive part

    >>> automorph(QuadForm(1, 1, -1))
    ((1, 1), (1, 2))
    >>> m = automorph(QuadForm(2, 2, -2))
    >>> m, QuadForm(2, 2, -2).act(m)
    (((1, 1), (1, 2)), [2, 2, -2])
    """
    p = q.primitive
    sol = pell_minimal(p.disc)
    t, u = sol.t, sol.u
    return ((t - p.b * u) // 2, -p.c * u), (p.a * u, (t + p.b * u) // 2)


@dataclass(frozen=True)
class GeodesicClass:
    """
    Indefinite form with its automorph

    >>> g = geodesic_data(QuadForm(1, 1, -1))
    >>> g.automorph, mpmath.nstr(g.radius, 12), g.center
    (((1, 1), (1, 2)), '1.11803398875', mpf('-0.5'))
    >>> [mpmath.nstr(w, 12) for w in g.endpoints]
    ['0.61803398875', '-1.61803398875']
    >>> mpmath.nstr(g.length, 12)  # 2 log((3+√5)/2)
    '1.92484730024'
    >>> [mpmath.nstr(w, 12) for w in geodesic_data(QuadForm(2, 0, -1)).endpoints]
    ['0.707106781187', '-0.707106781187']
    """

    representative: QuadForm
    automorph: Matrix | None
    pell: PellSolution | None

    @property
    def disc(self):
        return self.representative.disc

    @property
    def vertical(self):
        return self.representative.a == 0

    @cached_property
    def center(self):
        q = self.representative
        if self.vertical:
            return -mpmath.mpf(q.c) / q.b
        return -mpmath.mpf(q.b) / (2 * q.a)

    @cached_property
    def radius(self):
        """Euclidean radius √D/(2|a|); infinite for vertical geodesics"""
        if self.vertical:
            return mpmath.inf
        return mpmath.sqrt(self.disc) / (2 * abs(self.representative.a))

    @property
    def endpoints(self):
        """(w, w′) with w > w′ for a ≠ 0; (−c/b, ∞) for a = 0"""
        if self.vertical:
            return self.center, mpmath.inf
        return self.center + self.radius, self.center - self.radius

    @property
    def apex(self):
        if self.vertical:
            return mpmath.mpc(self.center, 1)
        return mpmath.mpc(self.center, self.radius)

    @cached_property
    def length(self):
        """Hyperbolic length of one period, 2 log ε"""
        if self.pell is None:
            return mpmath.inf
        return 2 * self.pell.log_epsilon

    def point(self, s):
        """
        Point at signed arclength s from the apex

        >>> g = geodesic_data(QuadForm(1, 0, -1))
        >>> g.point(0)
        mpc(real='0.0', imag='1.0')
        >>> abs(QuadForm(1, 0, -1).p_value(g.point(0.7))) < 1e-12
        True
        """
        s = mpmath.mpf(s)
        q = self.representative
        if self.vertical:
            sign = 1 if q.b > 0 else -1
            return mpmath.mpc(self.center, mpmath.exp(sign * s))
        sign = -1 if q.a > 0 else 1
        return mpmath.mpc(self.center + sign * self.radius * mpmath.tanh(s), self.radius * mpmath.sech(s))

    def angle(self, z):
        """Argument θ of z − center, for points on a semicircle"""
        return mpmath.arg(mpmath.mpmathify(z) - self.center)

    def translate(self, z, k: int = 1):
        """Image of z under the k-th power of the automorph"""
        return mobius(power(self.automorph, k), z)


def geodesic_data(q: QuadForm) -> GeodesicClass:
    """
    Geodesic of q; a vertical one (a = 0, square discriminant) carries no automorph

    >>> geodesic_data(QuadForm(0, 3, 1)).endpoints
    (mpf('-0.33333333333333331'), mpf('+inf'))
    >>> geodesic_data(QuadForm(1, 0, 1))
    Traceback (most recent call last):
    ...
    tracelift.errors.DomainError: [1, 0, 1] has no geodesic: a positive nonsquare discriminant is needed, not -4.
    """
    disc = q.disc
    if q.a == 0 and q.b:
        return GeodesicClass(q, None, None)
    if disc <= 0 or isqrt(disc) ** 2 == disc:
        raise DomainError(f"{q} has no geodesic: a positive nonsquare discriminant is needed, not {disc}.")
    return GeodesicClass(q, automorph(q), pell_minimal(q.primitive.disc))

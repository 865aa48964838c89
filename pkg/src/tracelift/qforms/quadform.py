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

from dataclasses import dataclass
from functools import cached_property
from math import gcd

import mpmath

from tracelift.errors import DomainError

Matrix = tuple[tuple[int, int], tuple[int, int]]
I: Matrix = ((1, 0), (0, 1))
S: Matrix = ((0, -1), (1, 0))
T: Matrix = ((1, 1), (0, 1))

BOUNDARY_TOL = 1e-12


def matmul(*ms: Matrix) -> Matrix:
    """
    >>> matmul(S, S)
    ((-1, 0), (0, -1))
    >>> matmul(S, T, S, T, S, T)
    ((-1, 0), (0, -1))
    """
    (a, b), (c, d) = I
    for (e, f), (g, h) in ms:
        a, b, c, d = a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h
    return (a, b), (c, d)


def inverse(m: Matrix) -> Matrix:
    """
    >>> inverse(T)
    ((1, -1), (0, 1))
    """
    (a, b), (c, d) = m
    if a * d - b * c != 1:  # pragma: no cover
        raise DomainError(f"Not in SL₂(ℤ): {m}")
    return (d, -b), (-c, a)


def power(m: Matrix, k: int) -> Matrix:
    """
    >>> power(T, -3)
    ((1, -3), (0, 1))
    """
    base = m if k >= 0 else inverse(m)
    return matmul(*([base] * abs(k)))


def mobius(m: Matrix, z):
    """
    Möbius action z ↦ (αz + β)/(γz + δ)

    >>> mobius(S, mpmath.mpc(0, 2))
    mpc(real='0.0', imag='0.5')
    """
    (a, b), (c, d) = m
    z = mpmath.mpmathify(z)
    return (a * z + b) / (c * z + d)


@dataclass(frozen=True, order=True)
class QuadForm:
    """
    Integral binary quadratic form [a, b, c] = ax² + bxy + cy²

    >>> q = QuadForm(1, 1, -1)
    >>> q, q.disc
    ([1, 1, -1], 5)
    >>> q.act(S)
    [-1, -1, 1]
    >>> q.act(T).act(S) == q.act(matmul(T, S))
    True
    >>> QuadForm(2, 4, -6).primitive, QuadForm(2, 4, -6).content
    ([1, 2, -3], 2)
    """

    a: int
    b: int
    c: int

    def __repr__(self):
        return f"[{self.a}, {self.b}, {self.c}]"

    @cached_property
    def disc(self):
        return self.b * self.b - 4 * self.a * self.c

    @property
    def content(self):
        return gcd(gcd(self.a, self.b), self.c)

    @property
    def primitive(self):
        g = self.content
        return QuadForm(self.a // g, self.b // g, self.c // g)

    def __neg__(self):
        return QuadForm(-self.a, -self.b, -self.c)

    def __call__(self, x, y):
        return self.a * x * x + self.b * x * y + self.c * y * y

    def act(self, m: Matrix) -> "QuadForm":
        """Q∘M, i.e. (x, y) ↦ Q(αx + βy, γx + δy)"""
        (al, be), (ga, de) = m
        a, b, c = self.a, self.b, self.c
        return QuadForm(
            a * al * al + b * al * ga + c * ga * ga,
            2 * a * al * be + b * (al * de + be * ga) + 2 * c * ga * de,
            a * be * be + b * be * de + c * de * de,
        )

    def eval(self, z):
        """Q(z, 1)"""
        z = mpmath.mpmathify(z)
        return (self.a * z + self.b) * z + self.c

    def p_value(self, z):
        return p_value(self, z)

    def asdict(self):
        return {"a": self.a, "b": self.b, "c": self.c, "disc": self.disc}


def reduce_definite(q: QuadForm) -> tuple[QuadForm, Matrix]:
    """
    Reduced form |b| ≤ a ≤ c (b ≥ 0 if |b| = a or a = c) and M with q∘M = reduced

    >>> reduce_definite(QuadForm(1, 1, 1))
    ([1, 1, 1], ((1, 0), (0, 1)))
    >>> r, m = reduce_definite(QuadForm(1, 2, 2))
    >>> r, QuadForm(1, 2, 2).act(m) == r
    ([1, 0, 1], True)
    >>> reduce_definite(QuadForm(2, 2, 3))[0]
    [2, 2, 3]
    >>> r, m = reduce_definite(QuadForm(22, 28, 9))
    >>> r, QuadForm(22, 28, 9).act(m) == r
    ([1, 0, 2], True)
    >>> reduce_definite(QuadForm(1, 3, 1))
    Traceback (most recent call last):
    ...
    tracelift.errors.DomainError: [1, 3, 1] is not positive definite.
    """
    if q.disc >= 0 or q.a <= 0:
        raise DomainError(f"{q} is not positive definite.")
    total = I
    while True:
        k = (q.a - q.b) // (2 * q.a)
        if k:
            step = ((1, k), (0, 1))
            q, total = q.act(step), matmul(total, step)
        if q.a > q.c or (q.a == q.c and q.b < 0):
            q, total = q.act(S), matmul(total, S)
        else:
            return q, total


def stabilizer_order(q: QuadForm) -> int:
    """
    |Γ̄_Q| for a positive definite form

    >>> stabilizer_order(QuadForm(1, 1, 1)), stabilizer_order(QuadForm(1, 0, 1)), stabilizer_order(QuadForm(1, 0, 2))
    (3, 2, 1)
    >>> stabilizer_order(QuadForm(3, 3, 3)), stabilizer_order(QuadForm(2, 4, 4))
    (3, 2)
    """
    match reduce_definite(q.primitive)[0]:
        case QuadForm(a=1, b=1, c=1):
            return 3
        case QuadForm(a=1, b=0, c=1):
            return 2
        case _:
            return 1


@dataclass(frozen=True)
class HeegnerPoint:
    form: QuadForm
    z: mpmath.mpc


def heegner_point(q: QuadForm) -> HeegnerPoint:
    """
    CM point z_Q = (−b + i√|D|)/(2a), the root of Q(z, 1) in ℍ

    >>> heegner_point(QuadForm(1, 0, 1)).z
    mpc(real='0.0', imag='1.0')
    >>> mpmath.nstr(heegner_point(QuadForm(2, 0, 1)).z.imag, 12)
    '0.707106781187'
    """
    if q.disc >= 0 or q.a <= 0:
        raise DomainError(f"{q} has no Heegner point: a positive definite form is needed.")
    z = mpmath.mpc(-q.b, mpmath.sqrt(-q.disc)) / (2 * q.a)
    return HeegnerPoint(q, z)


def p_value(q: QuadForm, z):
    """
    −(a|z|² + bx + c)/y, which vanishes exactly on the geodesic of q

    >>> p_value(QuadForm(1, 1, -1), 2j)
    mpf('-1.5')
    >>> p_value(QuadForm(1, 0, -1), 1j)
    mpf('0.0')
    """
    z = mpmath.mpmathify(z)
    x, y = z.real, z.imag
    return -(q.a * (x * x + y * y) + q.b * x + q.c) / y


def indicator(q: QuadForm, z) -> int:
    """
    1 inside the semicircle of q (a > 0), 0 outside and on the boundary

    >>> indicator(QuadForm(1, 1, -1), -0.5 + 0.5j), indicator(QuadForm(1, 1, -1), 2j), indicator(QuadForm(1, 0, -1), 0.5j)
    (1, 0, 1)
    """
    z = mpmath.mpmathify(z)
    x, y = z.real, z.imag
    return int(q.a * (x * x + y * y) + q.b * x + q.c < -BOUNDARY_TOL)

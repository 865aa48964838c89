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
from fractions import Fraction
from math import isqrt

import mpmath

from tracelift.errors import DomainError


@dataclass(frozen=True)
class PellSolution:
    """
    Minimal positive solution of t² − D·u² = 4

    ε = (t + u√D)/2 is the smallest unit > 1 of norm 1 in the order of discriminant D.

    >>> s = pell_minimal(5)
    >>> s.t, s.u
    (3, 1)
    >>> mpmath.nstr(s.epsilon, 10)
    '2.618033989'
    """

    t: int
    u: int
    disc: int

    def __post_init__(self):
        if self.t * self.t - self.disc * self.u * self.u != 4:  # pragma: no cover
            raise DomainError(f"({self.t}, {self.u}) does not solve t² − {self.disc}u² = 4.")

    @property
    def epsilon(self):
        return (self.t + self.u * mpmath.sqrt(self.disc)) / 2

    @property
    def log_epsilon(self):
        """log ε, computed without cancellation even for huge t"""
        return mpmath.acosh(mpmath.mpf(self.t) / 2)


def pell_minimal(d: int) -> PellSolution:
    """
    Minimal (t, u), t, u > 0, with t² − d·u² = 4, via the continued fraction of (d mod 2 + √d)/2

    The complete quotients over one period multiply to the fundamental unit;
    a unit of norm −1 is squared.

    >>> [(s.t, s.u) for s in map(pell_minimal, (5, 8, 12, 13, 21))]
    [(3, 1), (6, 2), (4, 1), (11, 3), (5, 1)]
    >>> s = pell_minimal(376)
    >>> s.t, s.u
    (4286590, 221064)
    >>> pell_minimal(9)
    Traceback (most recent call last):
    ...
    tracelift.errors.DomainError: Pell equation needs a positive nonsquare discriminant, not 9.
    """
    d = int(d)
    r = isqrt(d) if d > 0 else 0
    if d <= 0 or r * r == d or d % 4 not in (0, 1):
        raise DomainError(f"Pell equation needs a positive nonsquare discriminant, not {d}.")
    p, q = d % 2, 2
    a = (p + r) // q
    p = a * q - p
    q = (d - p * p) // q
    start = p, q
    x, y = Fraction(1), Fraction(0)
    while True:
        # multiply by the complete quotient (p + √d)/q
        x, y = (x * p + y * d) / q, (x + y * p) / q
        a = (p + r) // q
        p = a * q - p
        q = (d - p * p) // q
        if (p, q) == start:
            break
    if x * x - d * y * y == -1:
        x, y = x * x + d * y * y, 2 * x * y
    return PellSolution(int(2 * x), int(2 * y), d)

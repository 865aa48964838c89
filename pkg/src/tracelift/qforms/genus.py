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

from math import gcd

from tracelift.arith import content, is_fundamental, kronecker
from tracelift.errors import DomainError
from tracelift.qforms.quadform import QuadForm

SEARCH_RADIUS = 64


def represented_values(q: QuadForm, radius: int = SEARCH_RADIUS):
    """
    Values Q(x, y) at primitive vectors, by growing max(|x|, |y|)

    >>> from itertools import islice
    >>> list(islice(represented_values(QuadForm(1, 1, -1)), 5))
    [-1, -1, 1, 1, 1]
    """
    for k in range(1, radius + 1):
        for x in range(-k, k + 1):
            for y in (k, -k) if abs(x) < k else range(-k, k + 1):
                if y < 0 or (y == 0 and x < 0) or gcd(x, y) != 1:
                    continue
                yield q(x, y)


def genus_character(delta: int, q: QuadForm) -> int:
    """
    Genus character χ_Δ(Q) for Δ | disc(Q) with disc(Q)/Δ a discriminant

    (Δ/n) for any n represented by Q and coprime to Δ; 0 when Δ and the coefficients of Q share a factor.

    >>> genus_character(5, QuadForm(1, 1, -1)), genus_character(5, QuadForm(5, 5, 0)), genus_character(5, QuadForm(1, 7, 1))
    (1, 0, 1)
    >>> genus_character(5, QuadForm(1, 0, 5)), genus_character(5, QuadForm(2, 2, 3))
    (1, -1)
    >>> genus_character(5, QuadForm(1, 0, -2))
    Traceback (most recent call last):
    ...
    tracelift.errors.DomainError: Δ=5 does not fit the discriminant 8 of [1, 0, -2].
    Hint: disc(Q)/Δ should be an integer ≡ 0 or 1 (mod 4).
    """
    disc = q.disc
    if not is_fundamental(delta):
        raise DomainError(f"Genus characters need a fundamental discriminant, not Δ={delta}.")
    if disc % delta or (disc // delta) % 4 not in (0, 1):
        raise DomainError(f"Δ={delta} does not fit the discriminant {disc} of {q}.\nHint: disc(Q)/Δ should be an integer ≡ 0 or 1 (mod 4).")
    if content(q.a, q.b, q.c, delta) > 1:
        return 0
    for n in represented_values(q):
        if n and gcd(n, delta) == 1:
            return kronecker(delta, n)
    raise DomainError(f"No value of {q} coprime to Δ={delta} within the search radius {SEARCH_RADIUS}.")  # pragma: no cover

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
Finite sets of forms of one discriminant: forms whose semicircle contains a point, and the sets defining period functions
"""
from math import ceil, floor, isqrt

import mpmath

from tracelift.errors import DomainError
from tracelift.qforms.classes import check_disc
from tracelift.qforms.quadform import Matrix, QuadForm, indicator


def forms_containing(disc: int, z, level: int = 1) -> list[QuadForm]:
    """
    Every [a, b, c], a > 0 (and level | a), of discriminant disc > 0 whose semicircle strictly contains z

    Apex heights √D/(2a) bound a; |2ax + b| < √(D − 4a²y²) bounds b.

    >>> forms_containing(5, 1j), forms_containing(5, 3j)
    ([], [])
    >>> forms_containing(5, -0.5 + 0.5j)
    [[1, 1, -1]]
    >>> forms_containing(12, 0.1 + 0.3j)
    [[1, -2, -2], [1, 0, -3], [1, 2, -2], [2, -2, -1], [2, 2, -1], [3, 0, -1]]
    """
    if disc <= 0:
        raise DomainError(f"Semicircles only exist for positive discriminants, not {disc}.")
    z = mpmath.mpmathify(z)
    x, y = z.real, z.imag
    if y <= 0:
        raise DomainError(f"{z} is not in the upper half plane.")
    forms = []
    a = level
    while 4 * a * a * y * y < disc:
        half = mpmath.sqrt(disc - 4 * a * a * y * y)
        lo, hi = int(mpmath.ceil(-2 * a * x - half)), int(mpmath.floor(-2 * a * x + half))
        for b in range(lo, hi + 1):
            if (b * b - disc) % (4 * a):
                continue
            q = QuadForm(a, b, (b * b - disc) // (4 * a))
            if indicator(q, z):
                forms.append(q)
        a += level
    return forms


def forms_S_period(disc: int) -> list[QuadForm]:
    """
    Every [a, b, c] of discriminant disc with c < 0 < a; finite since 4a|c| = disc − b²

    >>> forms_S_period(5)
    [[1, -1, -1], [1, 1, -1]]
    >>> forms_S_period(8)
    [[1, -2, -1], [1, 0, -2], [1, 2, -1], [2, 0, -1]]
    >>> len(forms_S_period(12))
    6
    """
    check_disc(disc)
    if disc < 0:
        raise DomainError(f"Period sets need a positive discriminant, not {disc}.")
    forms = []
    r = isqrt(disc)
    for b in range(-r, r + 1):
        k, rest = divmod(disc - b * b, 4)
        if rest or k == 0:
            continue
        for a in range(1, k + 1):
            if k % a == 0:
                forms.append(QuadForm(a, b, -k // a))
    return sorted(forms)


def forms_period(m: Matrix, disc: int) -> list[QuadForm]:
    """
    {Q : a_{Q∘M⁻¹} < 0 < a_Q}, the forms whose semicircle contains the cusp M⁻¹∞ = −δ/γ

    Q(δ, −γ) = a_{Q∘M⁻¹} and 4a·Q(δ, −γ) = (2aδ − bγ)² − Dγ², so a ≤ Dγ²/4.
    Empty when γ = 0.

    >>> from tracelift.qforms.quadform import S, T, matmul
    >>> forms_period(S, 5) == forms_S_period(5), forms_period(T, 5)
    (True, [])
    >>> forms_period(matmul(S, T), 5)
    [[1, 1, -1], [1, 3, 1]]
    """
    check_disc(disc)
    (al, be), (ga, de) = m
    if ga == 0:
        return []
    r = isqrt(disc)
    forms = []
    for a in range(1, disc * ga * ga // 4 + 1):
        center = 2 * a * de / ga
        for b in range(floor(center) - r - 1, ceil(center) + r + 2):
            if (2 * a * de - b * ga) ** 2 >= disc * ga * ga or (b * b - disc) % (4 * a):
                continue
            forms.append(QuadForm(a, b, (b * b - disc) // (4 * a)))
    return sorted(forms)

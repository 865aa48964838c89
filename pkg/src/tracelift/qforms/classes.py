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
SL₂(ℤ)-classes of binary quadratic forms of a given discriminant

Definite classes are represented by reduced forms, indefinite classes by the cycles of reduced forms under
the reduction operator ρ; imprimitive forms are included, as the traces sum over every form of the discriminant.
"""
from math import isqrt

from tracelift.arith import divisors
from tracelift.errors import DomainError
from tracelift.qforms.quadform import I, Matrix, QuadForm, matmul, reduce_definite

MAX_REDUCTION_STEPS = 100_000


def check_disc(disc: int):
    if disc % 4 not in (0, 1) or disc == 0:
        raise DomainError(f"{disc} is not a nonzero discriminant.")
    if disc > 0 and isqrt(disc) ** 2 == disc:
        raise DomainError(f"Square discriminant {disc}: its cycle integrals need a regularization that is not implemented.\nHint: use a nonsquare discriminant.")


def definite_reduced_forms(disc: int) -> list[QuadForm]:
    """
    Every reduced positive definite form of discriminant disc < 0

    >>> definite_reduced_forms(-3), definite_reduced_forms(-4), definite_reduced_forms(-20)
    ([[1, 1, 1]], [[1, 0, 1]], [[1, 0, 5], [2, 2, 3]])
    >>> definite_reduced_forms(-12)
    [[1, 0, 3], [2, 2, 2]]
    """
    forms = []
    a = 1
    while 3 * a * a <= -disc:
        for b in range(-a + 1, a + 1):
            if (b * b - disc) % (4 * a):
                continue
            c = (b * b - disc) // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            forms.append(QuadForm(a, b, c))
        a += 1
    return forms


def is_reduced_indefinite(q: QuadForm) -> bool:
    """
    0 < b < √D and √D − b < 2|a| < √D + b, tested with integers only

    >>> is_reduced_indefinite(QuadForm(1, 1, -1)), is_reduced_indefinite(QuadForm(1, 0, -2))
    (True, False)
    """
    r = isqrt(q.disc)
    return 0 < q.b <= r and 2 * abs(q.a) + q.b > r and 2 * abs(q.a) - q.b <= r


def _normalized_b(b: int, c: int, disc: int) -> int:
    r, two_c = isqrt(disc), 2 * abs(c)
    if abs(c) > r:
        nb = (-b) % two_c
        return nb - two_c if nb > abs(c) else nb
    return r - (r + b) % two_c


def rho(q: QuadForm) -> tuple[QuadForm, Matrix]:
    """
    Reduction operator ρ([a, b, c]) = [c, b', (b'² − D)/4c] with b' ≡ −b (mod 2c), and the matrix realizing it

    >>> rho(QuadForm(1, 1, -1))
    ([-1, 1, 1], ((0, -1), (1, -1)))
    >>> q, m = rho(QuadForm(5, 13, 7))
    >>> QuadForm(5, 13, 7).act(m) == q
    True
    """
    disc = q.disc
    nb = _normalized_b(q.b, q.c, disc)
    s = (nb + q.b) // (2 * q.c)
    m = ((0, -1), (1, s))
    return QuadForm(q.c, nb, (nb * nb - disc) // (4 * q.c)), m


def reduce_indefinite(q: QuadForm) -> tuple[QuadForm, Matrix]:
    """
    First reduced form reached from q by ρ, and M with q∘M equal to it

    >>> r, m = reduce_indefinite(QuadForm(5, 5, 1))
    >>> r, QuadForm(5, 5, 1).act(m) == r, is_reduced_indefinite(r)
    ([1, 1, -1], True, True)
    """
    check_disc(q.disc)
    if q.disc < 0:  # pragma: no cover
        raise DomainError(f"{q} is definite.\nHint: use reduce_definite().")
    total = I
    for _ in range(MAX_REDUCTION_STEPS):
        if is_reduced_indefinite(q):
            return q, total
        q, m = rho(q)
        total = matmul(total, m)
    raise DomainError(f"Reduction of {q} did not terminate.")  # pragma: no cover


def cycle(q: QuadForm) -> list[QuadForm]:
    """
    The ρ-cycle of reduced forms equivalent to q, starting at its first reduced form

    >>> cycle(QuadForm(1, 1, -1))
    [[1, 1, -1], [-1, 1, 1]]
    >>> cycle(QuadForm(1, 2, -2))
    [[1, 2, -2], [-2, 2, 1]]
    """
    start = reduce_indefinite(q)[0]
    forms, current = [start], rho(start)[0]
    while current != start:
        forms.append(current)
        current = rho(current)[0]
    return forms


def _cycle_representative(forms: list[QuadForm], sign: int) -> QuadForm:
    return min(f for f in forms if f.a * sign > 0)


def indefinite_reduced_forms(disc: int) -> list[QuadForm]:
    """
    >>> indefinite_reduced_forms(5)
    [[-1, 1, 1], [1, 1, -1]]
    """
    r = isqrt(disc)
    forms = []
    for b in range(1, r + 1):
        if (disc - b * b) % 4:
            continue
        k = (disc - b * b) // 4
        for a in divisors(k):
            if r - b < 2 * a <= r + b:
                forms.append(QuadForm(a, b, -k // a))
                forms.append(QuadForm(-a, b, k // a))
    return sorted(forms)


def class_representatives(disc: int, sign: int = 1) -> list[QuadForm]:
    """
    One form per SL₂(ℤ)-class of discriminant disc

    Definite: reduced forms (a > 0 for sign=+1, their negatives for sign=-1).
    Indefinite: per ρ-cycle the smallest form whose leading coefficient has the given sign.

    >>> class_representatives(-3), class_representatives(-4), class_representatives(5)
    ([[1, 1, 1]], [[1, 0, 1]], [[1, 1, -1]])
    >>> class_representatives(12)
    [[1, 2, -2], [2, 2, -1]]
    >>> class_representatives(-23)
    [[1, 1, 6], [2, -1, 3], [2, 1, 3]]
    >>> class_representatives(9)
    Traceback (most recent call last):
    ...
    tracelift.errors.DomainError: Square discriminant 9: its cycle integrals need a regularization that is not implemented.
    Hint: use a nonsquare discriminant.
    """
    check_disc(disc)
    if disc < 0:
        forms = definite_reduced_forms(disc)
        return forms if sign > 0 else [-f for f in forms]
    seen, reps = set(), []
    for form in indefinite_reduced_forms(disc):
        if form in seen:
            continue
        forms = cycle(form)
        seen.update(forms)
        reps.append(_cycle_representative(forms, sign))
    return sorted(reps)


def class_of(q: QuadForm) -> QuadForm:
    """
    Canonical representative of the class of q, for equivalence tests

    >>> class_of(QuadForm(22, 28, 9)), class_of(QuadForm(5, 5, 1)), class_of(QuadForm(-1, 2, 2))
    ([1, 0, 2], [1, 1, -1], [2, 2, -1])
    """
    check_disc(q.disc)
    if q.disc < 0:
        if q.a < 0:
            return -reduce_definite(-q)[0]
        return reduce_definite(q)[0]
    return _cycle_representative(cycle(q), 1)


def class_number(disc: int) -> int:
    """
    >>> [class_number(d) for d in (-3, -4, -23, 5, 8, 12, 13, 40)]
    [1, 1, 3, 1, 1, 2, 1, 2]
    """
    return len(class_representatives(disc))

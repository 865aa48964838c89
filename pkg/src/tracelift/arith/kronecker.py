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
from math import gcd, isqrt

import mpmath

from tracelift.errors import DomainError


def jacobi(n: int, m: int) -> int:
    """
    Jacobi symbol (n/m) for odd positive m

    >>> jacobi(2, 7), jacobi(3, 7), jacobi(21, 7)
    (1, -1, 0)
    """
    if m <= 0 or m % 2 == 0:  # pragma: no cover
        raise DomainError(f"Jacobi symbol needs an odd positive modulus, not {m}.")
    n %= m
    result = 1
    while n:
        while n % 2 == 0:
            n //= 2
            if m % 8 in (3, 5):
                result = -result
        n, m = m, n
        if n % 4 == 3 and m % 4 == 3:
            result = -result
        n %= m
    return result if m == 1 else 0


def kronecker(n: int, m: int) -> int:
    """
    Kronecker symbol (n/m), completely multiplicative in m

    >>> kronecker(5, 1), kronecker(5, 3), kronecker(5, 5)
    (1, -1, 0)
    >>> kronecker(5, 2), kronecker(8, 3), kronecker(-4, -1), kronecker(1, 0)
    (-1, -1, -1, 1)
    >>> kronecker(5, 0)
    0
    """
    if m == 0:
        return 1 if n in (1, -1) else 0
    result = 1
    if m < 0:
        m = -m
        if n < 0:
            result = -1
    v = 0
    while m % 2 == 0:
        m //= 2
        v += 1
    if v:
        if n % 2 == 0:
            return 0
        if v % 2 and n % 8 in (3, 5):
            result = -result
    return result * jacobi(n, m)


def squarefree(n: int) -> bool:
    """
    >>> [k for k in range(1, 13) if squarefree(k)]
    [1, 2, 3, 5, 6, 7, 10, 11]
    """
    n = abs(n)
    if n == 0:
        return False
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        if n % p == 0:
            n //= p
        p += 1
    return True


def is_fundamental(d: int) -> bool:
    """
    Fundamental discriminant test; 1 counts as the trivial fundamental discriminant

    >>> is_fundamental(5), is_fundamental(12), is_fundamental(9)
    (True, True, False)
    >>> [d for d in range(-12, 30) if is_fundamental(d)]
    [-11, -8, -7, -4, -3, 1, 5, 8, 12, 13, 17, 21, 24, 28, 29]
    """
    if d == 1:
        return True
    if d % 4 == 1:
        return squarefree(d)
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and squarefree(m)
    return False


def divisors(n: int) -> list[int]:
    """
    >>> divisors(1), divisors(6), divisors(12)
    ([1], [1, 2, 3, 6], [1, 2, 3, 4, 6, 12])
    """
    if n < 1:  # pragma: no cover
        raise DomainError(f"Divisors are only enumerated for positive integers, not {n}.")
    small, large = [], []
    for k in range(1, isqrt(n) + 1):
        if n % k == 0:
            small.append(k)
            if k * k != n:
                large.append(n // k)
    return small + large[::-1]


def moebius(n: int) -> int:
    """
    >>> [moebius(k) for k in range(1, 11)]
    [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
    """
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def conductor(d: int) -> int:
    """
    Largest f such that d/f² is still a discriminant

    >>> conductor(5), conductor(20), conductor(45), conductor(-12), conductor(32)
    (1, 2, 3, 2, 2)
    """
    best = 1
    for f in range(1, isqrt(abs(d)) + 1):
        if d % (f * f) == 0 and (d // (f * f)) % 4 in (0, 1):
            best = f
    return best


def fundamental_part(d: int) -> int:
    """
    >>> fundamental_part(20), fundamental_part(-27), fundamental_part(13)
    (5, -3, 13)
    """
    return d // conductor(d) ** 2


def character(delta: int):
    """
    The real character b ↦ (Δ/b)

    >>> chi = character(5)
    >>> [chi(b) for b in range(5)]
    [0, 1, -1, -1, 1]
    """

    def chi(b: int) -> int:
        return kronecker(delta, b)

    chi.modulus = abs(delta)
    return chi


def gauss_sum(delta: int, k: int = 1):
    """
    Σ_{b mod Δ} (Δ/b) e(kb/Δ), which equals (Δ/k)√Δ for fundamental Δ > 0

    >>> mpmath.nstr(gauss_sum(5, 1).real, 12)
    '2.2360679775'
    >>> mpmath.nstr(gauss_sum(5, 2).real, 12)
    '-2.2360679775'
    """
    modulus = abs(delta)
    return mpmath.fsum(kronecker(delta, b) * mpmath.expjpi(mpmath.mpf(2 * k * b) / modulus) for b in range(modulus))


@dataclass(frozen=True)
class Discriminant:
    """
    Integer ≡ 0 or 1 (mod 4)

    >>> d = Discriminant(20)
    >>> d.is_fundamental, d.conductor, d.fundamental_part
    (False, 2, 5)
    >>> Discriminant(5).is_usable
    True
    >>> Discriminant(1).is_usable
    False
    >>> Discriminant(7)
    Traceback (most recent call last):
    ...
    tracelift.errors.DomainError: 7 is not a discriminant: it should be ≡ 0 or 1 (mod 4).
    """

    value: int

    def __post_init__(self):
        if self.value % 4 not in (0, 1):
            raise DomainError(f"{self.value} is not a discriminant: it should be ≡ 0 or 1 (mod 4).")

    @cached_property
    def is_fundamental(self):
        return is_fundamental(self.value)

    @property
    def is_trivial(self):
        return self.value == 1

    @property
    def is_usable(self):
        """Fundamental and > 1, the requirement of the twisted lifts."""
        return self.value > 1 and self.is_fundamental

    @property
    def is_square(self):
        return self.value >= 0 and isqrt(self.value) ** 2 == self.value

    @cached_property
    def conductor(self):
        return conductor(self.value)

    @property
    def fundamental_part(self):
        return self.value // self.conductor**2

    def __int__(self):
        return self.value


def require_twist(delta: int) -> int:
    """
    Validate Δ for the twisted lifts

    >>> require_twist(8)
    8
    >>> require_twist(1)
    Traceback (most recent call last):
    ...
    tracelift.errors.DomainError: Δ=1 is outside the twisted lifts.
    Hint: use a fundamental discriminant Δ > 1, e.g. 5, 8, 12, 13.
    """
    delta = int(delta)
    if delta <= 1 or not is_fundamental(delta):
        raise DomainError(f"Δ={delta} is outside the twisted lifts.\nHint: use a fundamental discriminant Δ > 1, e.g. 5, 8, 12, 13.")
    return delta


def content(*ns: int) -> int:
    """
    >>> content(4, 6, -8), content(0, 5)
    (2, 5)
    """
    g = 0
    for n in ns:
        g = gcd(g, n)
    return g

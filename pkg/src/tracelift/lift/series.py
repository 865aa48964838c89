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
Summation of series whose coefficients are traces

No growth bound for the traces is available, so the stopping rule is empirical: three consecutive terms below
both tol and 1e−3 × |partial sum|, and a decreasing last ratio, which then bounds the tail geometrically.
"""
import logging
from dataclasses import dataclass

import mpmath

from tracelift.errors import DomainError, TruncationError

log = logging.getLogger(__name__)

STREAK = 3
RELATIVE = 1e-3
DEFAULT_TRUNC = 64


def e(w):
    """e(w) = exp(2πiw)"""
    return mpmath.exp(2j * mpmath.pi * w)


def upper_point(z):
    """
    >>> upper_point("0.5+2j")
    mpc(real='0.5', imag='2.0')
    >>> upper_point(0.5)
    Traceback (most recent call last):
    ...
    tracelift.errors.DomainError: 0.5 is not in the upper half plane.
    Hint: give a point with Im z > 0, e.g. 0.3+0.9i.
    """
    w = mpmath.mpc(mpmath.mpmathify(z))
    if w.imag <= 0:
        raise DomainError(f"{z} is not in the upper half plane.\nHint: give a point with Im z > 0, e.g. 0.3+0.9i.")
    return w


@dataclass(frozen=True)
class SeriesSum:
    value: object
    tail: object
    terms: int


def sum_series(term, tol, trunc: int, start: int = 1, label: str = "series") -> SeriesSum:
    """
    Σ_{n ≥ start} term(n) under the stopping rule above, at most up to n = trunc

    >>> s = sum_series(lambda n: mpmath.mpf(2) ** -n, 1e-9, 64)
    >>> abs(s.value - 1) <= s.tail < 1e-9, s.terms
    (True, 32)
    >>> sum_series(lambda n: 1 / mpmath.mpf(n), 1e-9, 20, label="harmonic series")
    Traceback (most recent call last):
    ...
    tracelift.errors.TruncationError: harmonic series did not settle within 20 terms (last term 0.05).
    Hint: raise the truncation order (--trunc) or evaluate at a larger Im z.
    """
    total, streak, prev, last = mpmath.mpf(0), 0, None, None
    for n in range(start, trunc + 1):
        t = term(n)
        total += t
        prev, last = last, abs(t)
        small = last <= tol and (last <= RELATIVE * abs(total) or last == 0)
        streak = streak + 1 if small else 0
        if streak >= STREAK:
            ratio = last / prev if prev else 0
            if ratio < 1:
                tail = last * ratio / (1 - ratio)
                log.debug(f"{label}: {n - start + 1} terms, tail ≤ {mpmath.nstr(tail, 3)}")
                return SeriesSum(total, tail, n - start + 1)
    raise TruncationError(
        f"{label} did not settle within {trunc} terms (last term {mpmath.nstr(last, 3)}).\nHint: raise the truncation order (--trunc) or evaluate at a larger Im z.",
        required_order=2 * trunc,
    )

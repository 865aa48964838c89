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
Evaluation of J_m with reduction to the standard fundamental domain and certified truncation
"""
import logging
from dataclasses import dataclass
from functools import lru_cache

import mpmath

from tracelift.errors import DomainError, TruncationError
from tracelift.modfun.qseries import faber
from tracelift.qforms.quadform import I, S, Matrix, matmul, mobius

log = logging.getLogger(__name__)

FUNDAMENTAL_Y = mpmath.sqrt(3) / 2
MAX_ORDER = 4096


@dataclass(frozen=True)
class ModularPoint:
    """
    z together with its reduction and the word carrying z there

    >>> p = reduce_point(0.1j)
    >>> p.reduced, p.word
    (mpc(real='0.0', imag='10.0'), ((0, -1), (1, 0)))
    """

    z: mpmath.mpc
    reduced: mpmath.mpc
    word: Matrix


def reduce_point(z) -> ModularPoint:
    """
    Reduce z into |x| ≤ 1/2, |z| ≥ 1 and record the SL₂(ℤ) word with word·z = reduced

    >>> reduce_point(1j).word, reduce_point(5 + 1j).reduced
    (((1, 0), (0, 1)), mpc(real='0.0', imag='1.0'))
    >>> p = reduce_point(mpmath.mpc(0.3, 0.01))
    >>> abs(mobius(p.word, p.z) - p.reduced) < 1e-10, abs(p.reduced) >= 1, abs(p.reduced.real) <= 0.5
    (True, True, True)
    """
    z = mpmath.mpmathify(z)
    if z.imag <= 0:
        raise DomainError(f"{z} is not in the upper half plane.")
    w, word = z, I
    eps = mpmath.mpf(2) ** (-mpmath.mp.prec + 8)
    while True:
        n = int(mpmath.floor(w.real + 0.5))
        if n:
            w -= n
            word = matmul(((1, -n), (0, 1)), word)
        if abs(w) ** 2 < 1 - eps:
            w = -1 / w
            word = matmul(S, word)
        else:
            return ModularPoint(z, w, word)


def coefficient_bound(m: int, n: int):
    """
    Bound 4π√(m/n) e^X / √(2πX), X = 4π√(mn), for |c_m(n)|, the q^n coefficient of J_m

    >>> from tracelift.modfun.qseries import faber
    >>> all(abs(faber(2, 6)[n]) <= coefficient_bound(2, n) for n in range(1, 7))
    True
    """
    x = 4 * mpmath.pi * mpmath.sqrt(m * n)
    return 4 * mpmath.pi * mpmath.sqrt(mpmath.mpf(m) / n) * mpmath.exp(x) / mpmath.sqrt(2 * mpmath.pi * x)


def tail_bound(m: int, order: int, y):
    """
    Σ_{n>N} |c_m(n)| e^{−2πny} ≤ b_{N+1} e^{−2π(N+1)y} / (1 − r), r = e^{2π√(m/(N+1)) − 2πy}; infinite when r ≥ 1
    """
    y = mpmath.mpf(y)
    r = mpmath.exp(2 * mpmath.pi * (mpmath.sqrt(mpmath.mpf(m) / (order + 1)) - y))
    if r >= 1:
        return mpmath.inf
    return coefficient_bound(m, order + 1) * mpmath.exp(-2 * mpmath.pi * (order + 1) * y) / (1 - r)


@lru_cache(maxsize=None)
def required_order(m: int, tol, y=FUNDAMENTAL_Y) -> int:
    """
    Smallest truncation order whose tail bound at Im z ≥ y is below tol

    >>> required_order(1, 1e-9) < 16 < required_order(8, 1e-9)
    True
    """
    lo, hi = 1, 1
    while tail_bound(m, hi, y) > tol:
        lo, hi = hi, 2 * hi
        if hi > MAX_ORDER:
            raise TruncationError(f"J_{m} needs more than {MAX_ORDER} coefficients for tol={tol} at y={mpmath.nstr(y, 5)}.", required_order=hi)
    while lo < hi:
        mid = (lo + hi) // 2
        if tail_bound(m, mid, y) > tol:
            lo = mid + 1
        else:
            hi = mid
    return hi


def eval_Jm(m: int, z, tol=1e-9, order: int | None = None):
    """
    J_m(z) through its q-expansion at the reduced point, with truncation error ≤ tol

    Without `order` the truncation is the smallest one certified at the fundamental domain's lowest height.

    >>> mpmath.nstr(eval_Jm(1, 1j).real, 12), mpmath.nstr(eval_Jm(1, mpmath.mpc(-0.5, mpmath.sqrt(3) / 2)).real, 12)
    ('984.0', '-744.0')
    >>> eval_Jm(0, 0.3 + 2j)
    mpf('1.0')
    >>> eval_Jm(4, 1j, tol=1e-9, order=8)
    Traceback (most recent call last):
    ...
    tracelift.errors.TruncationError: J_4 at y=1.0 needs order 21, not 8.
    """
    if m == 0:
        return mpmath.mpf(1)
    point = reduce_point(z)
    w = point.reduced
    if order is None:
        order = required_order(m, tol)
    elif tail_bound(m, order, w.imag) > tol:
        needed = required_order(m, tol, w.imag)
        raise TruncationError(f"J_{m} at y={mpmath.nstr(w.imag, 5)} needs order {needed}, not {order}.", required_order=needed)
    series = faber(m, order)
    return series.eval(mpmath.expjpi(2 * w))

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
Truncated q-expansions with exact integer (or mpmath) coefficients

>>> j = j_series(4)
>>> j[-1], j[0], j[1], j[2]
(1, 744, 196884, 21493760)
>>> faber(2)[1]
42987520
"""
import logging
import threading
from collections import defaultdict
from dataclasses import dataclass, field
from math import gcd

import mpmath

from tracelift.arith import divisors
from tracelift.errors import DomainError, TruncationError

log = logging.getLogger(__name__)

DEFAULT_ORDER = 64


@dataclass(frozen=True)
class QSeries:
    """
    Σ_{leading ≤ n ≤ order} c_n qⁿ + O(q^{order+1})

    `tail_bound` bounds Σ_{n>order} |c_n| |q|ⁿ for every Im z ≥ `tail_y`.

    >>> a = QSeries(0, (1, 2, 3), 2)
    >>> a * a
    1 + 4q + 10q^2 + O(q^3)
    >>> (a - 1)[1], a.inverse()[2]
    (2, 1)
    >>> QSeries(-1, (1, 0, 5), 1) ** 2
    q^-2 + 10 + O(q^1)
    """

    leading: int
    coeffs: tuple
    order: int
    tail_bound: object = field(default=None, compare=False)
    tail_y: object = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.coeffs) != self.order - self.leading + 1:  # pragma: no cover
            raise DomainError(f"{len(self.coeffs)} coefficients do not span q^{self.leading}..q^{self.order}.")

    @classmethod
    def constant(cls, c, order=DEFAULT_ORDER):
        return cls(0, (c,) + (0,) * order, order)

    @classmethod
    def from_function(cls, leading, order, f):
        return cls(leading, tuple(f(n) for n in range(leading, order + 1)), order)

    def __getitem__(self, n: int):
        if n > self.order:
            raise TruncationError(f"Coefficient of q^{n} is beyond the truncation order {self.order}.", required_order=n)
        if n < self.leading:
            return 0
        return self.coeffs[n - self.leading]

    def items(self):
        return zip(range(self.leading, self.order + 1), self.coeffs)

    def truncate(self, order: int) -> "QSeries":
        if order > self.order:
            raise TruncationError(f"Cannot extend a series known to q^{self.order} up to q^{order}.", required_order=order)
        return QSeries(self.leading, self.coeffs[: order - self.leading + 1], order)

    def _promote(self, other):
        if isinstance(other, QSeries):
            return other
        return QSeries.constant(other, max(self.order, 0))

    def __add__(self, other):
        other = self._promote(other)
        lo, hi = min(self.leading, other.leading), min(self.order, other.order)
        return QSeries.from_function(lo, hi, lambda n: self[n] + other[n])

    __radd__ = __add__

    def __neg__(self):
        return QSeries(self.leading, tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other):
        return self + (-self._promote(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            return QSeries(self.leading, tuple(other * c for c in self.coeffs), self.order)
        lo = self.leading + other.leading
        hi = min(self.order + other.leading, other.order + self.leading)
        out = [0] * (hi - lo + 1)
        for i, a in enumerate(self.coeffs):
            if i > hi - lo:
                break
            if not a:
                continue
            for j, b in enumerate(other.coeffs[: hi - lo - i + 1]):
                out[i + j] += a * b
        return QSeries(lo, tuple(out), hi)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** -k
        result, base = None, self
        while k:
            if k & 1:
                result = base if result is None else result * base
            k >>= 1
            if k:
                base = base * base
        return result if result is not None else QSeries.constant(1, self.order)

    def inverse(self) -> "QSeries":
        """1/f for a leading coefficient ±1, exactly"""
        lead = self.coeffs[0]
        if lead not in (1, -1):
            raise DomainError(f"Only series with leading coefficient ±1 are inverted exactly, not {lead}.")
        n = self.order - self.leading
        inv = [lead]
        for k in range(1, n + 1):
            inv.append(-lead * sum(self.coeffs[i] * inv[k - i] for i in range(1, k + 1)))
        return QSeries(-self.leading, tuple(inv), -self.leading + n)

    def eval(self, q):
        """Σ c_n qⁿ by Horner's rule at the current mpmath precision"""
        q = mpmath.mpmathify(q)
        acc = mpmath.mpf(0)
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc * q**self.leading

    def stamped(self, tail_bound, tail_y) -> "QSeries":
        return QSeries(self.leading, self.coeffs, self.order, tail_bound, tail_y)

    def tail_bound_at(self, y):
        """
        Bound of the truncation error for Im z = y ≥ tail_y, scaled by e^{−2π(order+1)(y − tail_y)}

        >>> s = QSeries(0, (1, 1), 1).stamped(1e-3, 1)
        >>> s.tail_bound_at(1) == 1e-3, s.tail_bound_at(2) < 1e-3
        (True, True)
        """
        if self.tail_bound is None:
            raise DomainError("This series carries no tail bound.\nHint: use faber() or eval_Jm() for certified evaluations.")
        if y < self.tail_y:
            raise DomainError(f"The tail bound holds for Im z ≥ {self.tail_y}, not {y}.")
        return self.tail_bound * mpmath.exp(-2 * mpmath.pi * (self.order + 1) * (mpmath.mpf(y) - self.tail_y))

    def asdict(self):
        """
        >>> QSeries(-1, (1, 0, 196884), 1).asdict()
        {'-1': 1, '0': 0, '1': 196884}
        """
        return {str(n): c for n, c in self.items()}

    def __repr__(self):
        terms = []
        for n, c in self.items():
            if not c:
                continue
            mono = "" if n == 0 else ("q" if n == 1 else f"q^{n}")
            coef = "" if c == 1 and mono else ("-" if c == -1 and mono else str(c))
            terms.append(f"{coef}{mono}")
        body = " + ".join(terms).replace("+ -", "- ") or "0"
        return f"{body} + O(q^{self.order + 1})"


def sigma(n: int, k: int) -> int:
    return sum(d**k for d in divisors(n))


def eisenstein(k: int, order: int = DEFAULT_ORDER) -> QSeries:
    """
    Normalized Eisenstein series E_4, E_6

    >>> eisenstein(4, 3)
    1 + 240q + 2160q^2 + 6720q^3 + O(q^4)
    >>> eisenstein(6, 2)
    1 - 504q - 16632q^2 + O(q^3)
    """
    match k:
        case 4:
            factor = 240
        case 6:
            factor = -504
        case _:
            raise DomainError(f"Only E_4 and E_6 are provided, not E_{k}.")
    return QSeries.from_function(0, order, lambda n: 1 if n == 0 else factor * sigma(n, k - 1))


def discriminant_cusp(order: int = DEFAULT_ORDER) -> QSeries:
    """
    Δ = (E_4³ − E_6²)/1728 = q − 24q² + 252q³ − ...

    >>> discriminant_cusp(4)
    q - 24q^2 + 252q^3 - 1472q^4 + O(q^5)
    """
    e4, e6 = eisenstein(4, order), eisenstein(6, order)
    diff = e4**3 - e6**2
    return QSeries(1, tuple(c // 1728 for c in diff.coeffs[1:]), order)


def j_series(order: int = DEFAULT_ORDER) -> QSeries:
    """j = E_4³/Δ, known up to q^order"""
    e4 = eisenstein(4, order + 1)
    return (e4**3 * discriminant_cusp(order + 2).inverse()).truncate(order)


_memo: dict[tuple[int, str], QSeries] = {}
_guard = threading.Lock()
_locks: dict[tuple[int, str], threading.Lock] = defaultdict(threading.Lock)


def _newton(m: int, order: int) -> QSeries:
    """J_{k+1} = J·J_k − Σ_{i=1}^{k−1} b_i J_{k−i} − (k+1) b_k, with J = q^{−1} + Σ b_i q^i"""
    big = order + max(m - 1, 0)
    jj = j_series(big) - 744
    fs = [QSeries.constant(1, big), jj]
    for k in range(1, m):
        nxt = jj * fs[k] - (k + 1) * jj[k]
        for i in range(1, k):
            nxt = nxt - jj[i] * fs[k - i]
        fs.append(nxt)
    return fs[m].truncate(order)


def _elimination(m: int, order: int) -> QSeries:
    """J^m with its principal part q^{−m+1} ... q^{−1} cancelled by powers of J, highest first, then the constant"""
    big = order + max(m - 1, 0)
    jj = j_series(big) - 744
    powers = {1: jj}
    for k in range(2, m + 1):
        powers[k] = powers[k - 1] * jj
    f = powers[m]
    for k in range(m - 1, 0, -1):
        f = f - f[-k] * powers[k]
    return (f - f[0]).truncate(order)


def faber(m: int, order: int = DEFAULT_ORDER, method: str = "newton") -> QSeries:
    """
    Faber polynomial J_m = q^{−m} + O(q) in j, up to q^order

    >>> faber(0, 2)
    1 + O(q^3)
    >>> faber(1, 2)
    q^-1 + 196884q + 21493760q^2 + O(q^3)
    >>> faber(2, 2)
    q^-2 + 42987520q + 40491909396q^2 + O(q^3)
    >>> faber(3, 3) == faber(3, 3, method="elimination")
    True
    """
    if m < 0:
        raise DomainError(f"Faber polynomials are indexed by m ≥ 0, not {m}.")
    if m == 0:
        return QSeries.constant(1, order)
    key = (m, method)
    with _guard:
        lock = _locks[key]
    with lock:
        cached = _memo.get(key)
        if cached is None or cached.order < order:
            log.debug(f"Faber J_{m} up to q^{order} ({method})")
            match method:
                case "newton":
                    cached = _newton(m, order)
                case "elimination":
                    cached = _elimination(m, order)
                case _:
                    raise DomainError(f"Unknown Faber construction: {method}.\nHint: use 'newton' or 'elimination'.")
            _memo[key] = cached
    return cached if cached.order == order else cached.truncate(order)


def hecke_consistency(m: int, order: int = 8) -> bool:
    """
    Principal part q^{−m}, zero constant term and c_m(n) = Σ_{d|(m,n)} (m/d) c_1(mn/d²)

    >>> all(hecke_consistency(m) for m in range(1, 5))
    True
    """
    fm, f1 = faber(m, order), faber(1, m * order)
    if fm[-m] != 1 or fm[0] != 0 or any(fm[n] for n in range(-m + 1, 0)):
        return False
    for n in range(1, order + 1):
        expected = sum((m // d) * f1[m * n // (d * d)] for d in divisors(gcd(m, n)))
        if fm[n] != expected:
            log.warning(f"J_{m}: coefficient of q^{n} is {fm[n]}, Hecke relation gives {expected}")
            return False
    return True

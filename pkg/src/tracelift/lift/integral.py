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
The weight-2 modular integral F_Δ(z) = (1/π) Σ_{m≥0} tr_{J_m}(Δ) e(mz), its period functions and cocycles

F_Δ is 1-periodic and z^{−2}F_Δ(−1/z) − F_Δ(z) = (2/π) Σ_{c<0<a} 1/Q(z,1). More generally F_Δ|₂M − F_Δ is
(2/π) q_M with q_M(z) = Σ_{a_{Q∘M⁻¹} < 0 < a_Q} 1/Q(z,1), and q_{MN} = q_M|₂N + q_N.
A primitive G of F_Δ has weight-0 periods R_M(z) = G(Mz) − G(z): R_T = tr_1(Δ)/π and R_S = (2/π) cocycle_RS.
"""
import logging
from dataclasses import dataclass

import mpmath

from tracelift.arith import require_twist
from tracelift.errors import DomainError
from tracelift.lift.series import DEFAULT_TRUNC, SeriesSum, e, sum_series, upper_point
from tracelift.qforms import S, T, Matrix, QuadForm, forms_period, forms_S_period, matmul, mobius, power
from tracelift.traces import DEFAULT_TOL, F_name, twisted_coefficient

log = logging.getLogger(__name__)

SOURCES = ("twisted", "direct")


def F_coefficient(delta: int, m: int, table, source: str = "twisted"):
    """
    m-th Fourier coefficient tr_{J_m}(Δ)/π of F_Δ, with tr_{J_0} = tr_1

    >>> F_coefficient(5, 1, None, source="cm")
    Traceback (most recent call last):
    ...
    tracelift.errors.DomainError: Unknown coefficient source 'cm'.
    Hint: use 'twisted' or 'direct'.
    """
    match source:
        case _ if m == 0:
            trace = table.value("cycle", "one", delta)
        case "twisted":
            trace = twisted_coefficient(delta, m, table)
        case "direct":
            trace = table.value("cycle", F_name(m), delta)
        case _:
            raise DomainError(f"Unknown coefficient source {source!r}.\nHint: use 'twisted' or 'direct'.")
    return trace / mpmath.pi


def F_series(delta: int, table, z, trunc: int = DEFAULT_TRUNC, tol=DEFAULT_TOL, source: str = "twisted") -> SeriesSum:
    delta = require_twist(delta)
    z = upper_point(z)
    return sum_series(lambda m: F_coefficient(delta, m, table, source) * e(m * z), tol, trunc, start=0, label=f"F_{delta}")


def eval_F(delta: int, table, z, trunc: int = DEFAULT_TRUNC, tol=DEFAULT_TOL, source: str = "twisted"):
    """
    F_Δ(z), summed until the tail is negligible

    The Fourier coefficients come from the twisted trace combinations or from the direct traces of J_m.
    """
    return F_series(delta, table, z, trunc, tol, source).value


def primitive_G(delta: int, table, z, trunc: int = DEFAULT_TRUNC, tol=DEFAULT_TOL, source: str = "twisted"):
    """G(z) = (tr_1(Δ)/π) z + Σ_{m≥1} tr_{J_m}(Δ)/(2πi m π) e(mz), so that G′ = F_Δ"""
    z = upper_point(z)
    series = sum_series(lambda m: F_coefficient(delta, m, table, source) * e(m * z) / (2j * mpmath.pi * m), tol, trunc, label=f"G_{delta}")
    return F_coefficient(delta, 0, table) * z + series.value


@dataclass(frozen=True)
class PeriodFunction:
    """
    z ↦ scale · Σ_Q 1/Q(z,1) over a finite set of forms of one discriminant, all with a > 0

    >>> q = PeriodFunction.S(5)
    >>> q.forms, q.disc
    (([1, -1, -1], [1, 1, -1]), 5)
    >>> abs(q(1j) - (2 / mpmath.pi) * (-0.8)) < 1e-15
    True
    >>> PeriodFunction((QuadForm(1, 1, -1), QuadForm(1, 0, -2)))
    Traceback (most recent call last):
    ...
    tracelift.errors.DomainError: Forms of a period function share one discriminant; got [5, 8].
    """

    forms: tuple[QuadForm, ...]
    scale: object = 1

    def __post_init__(self):
        object.__setattr__(self, "forms", tuple(self.forms))
        discs = sorted({q.disc for q in self.forms})
        if len(discs) > 1:
            raise DomainError(f"Forms of a period function share one discriminant; got {discs}.")
        if any(q.a <= 0 for q in self.forms):  # pragma: no cover
            raise DomainError("Forms of a period function have a > 0.")

    @property
    def disc(self):
        return self.forms[0].disc if self.forms else None

    @classmethod
    def S(cls, delta: int, scale=None) -> "PeriodFunction":
        """The S-period of F_Δ: the forms with c < 0 < a, scale 2/π"""
        return cls(tuple(forms_S_period(require_twist(delta))), 2 / mpmath.pi if scale is None else scale)

    @classmethod
    def of(cls, m: Matrix, delta: int, scale=1) -> "PeriodFunction":
        return cls(tuple(forms_period(m, delta)), scale)

    def __call__(self, z):
        z = mpmath.mpmathify(z)
        return self.scale * mpmath.fsum(1 / q.eval(z) for q in self.forms)


def period_qS(delta: int, z):
    """
    Σ_{c<0<a} 1/Q(z,1)

    >>> abs(period_qS(5, 1j) + 0.8) < 1e-15
    True
    """
    return PeriodFunction.S(delta, scale=1)(upper_point(z))


def _endpoints(q: QuadForm):
    root = mpmath.sqrt(q.disc)
    return (-q.b + root) / (2 * q.a), (-q.b - root) / (2 * q.a)


def cocycle_RS(delta: int, z):
    """
    (1/√Δ) Σ_{c<0<a} (log((z − w)/(i − w)) − log((z − w′)/(i − w′))), w > w′ the endpoints of Q

    The quotients have both terms in the upper half plane, so principal logarithms never cross the cut.
    Its derivative is period_qS.

    >>> cocycle_RS(5, 1j)
    mpc(real='0.0', imag='0.0')
    >>> z, h = mpmath.mpc(0, 2), mpmath.mpf("1e-5")
    >>> abs((cocycle_RS(5, z + h) - cocycle_RS(5, z - h)) / (2 * h) - period_qS(5, z)) < 1e-6
    True
    """
    delta = require_twist(delta)
    z = upper_point(z)
    total = mpmath.mpc(0)
    for q in forms_S_period(delta):
        w, w_ = _endpoints(q)
        total += mpmath.log((z - w) / (1j - w)) - mpmath.log((z - w_) / (1j - w_))
    return total / mpmath.sqrt(delta)


def slash(f, m: Matrix, z):
    """(f|₂M)(z) = (γz + δ)^{−2} f(Mz)"""
    (_, _), (c, d) = m
    return f(mobius(m, z)) / (c * z + d) ** 2


def weight2_period(delta: int, m: Matrix, z):
    """
    q_M(z) = Σ_{a_{Q∘M⁻¹} < 0 < a_Q} 1/Q(z,1)

    >>> weight2_period(5, S, 1j) == period_qS(5, 1j), weight2_period(5, T, 1j)
    (True, mpf('0.0'))
    """
    return PeriodFunction.of(m, require_twist(delta))(upper_point(z))


def cocycle_residual(delta: int, m: Matrix, n: Matrix, z):
    """
    |q_{MN}(z) − (q_M|₂N)(z) − q_N(z)|

    >>> from tracelift.qforms import matmul
    >>> all(cocycle_residual(5, m, n, 0.3 + 1.1j) < 1e-12 for m, n in [(S, T), (T, S), (S, S), (matmul(S, T), S)])
    True
    """
    z = upper_point(z)
    left = weight2_period(delta, matmul(m, n), z)
    right = slash(lambda w: weight2_period(delta, m, w), n, z) + weight2_period(delta, n, z)
    return abs(left - right)


def cocycle_RT(delta: int, table):
    """R_T = tr_1(Δ)/π, the constant by which G changes under z ↦ z + 1"""
    return F_coefficient(require_twist(delta), 0, table)


def st_word(m: Matrix) -> tuple[int, list[Matrix]]:
    """
    (±1, [A₁, ..., A_k]) with each A_i a power of T or S, and M = ±A₁⋯A_k

    >>> from tracelift.qforms import matmul
    >>> st_word(matmul(S, T))
    (1, [((0, -1), (1, 0)), ((1, 1), (0, 1))])
    >>> sign, word = st_word(((2, 1), (1, 1)))
    >>> sign, matmul(*word)
    (1, ((2, 1), (1, 1)))
    """
    (a, b), (c, d) = m
    word = []
    while c != 0:
        k = a // c
        a, b = a - k * c, b - k * d
        if k:
            word.append(power(T, k))
        word.append(S)
        a, b, c, d = c, d, -a, -b
    if a * b:
        word.append(power(T, a * b))
    return a, word


def integral_cocycle(delta: int, m: Matrix, z, table):
    """
    R_M(z) = G(Mz) − G(z), assembled from R_T and R_S with R_{AB}(z) = R_A(Bz) + R_B(z)

    >>> from tracelift.traces import TraceEntry, TraceKey, TraceTable
    >>> t = TraceTable([TraceEntry(TraceKey("cycle", "one", 5), mpmath.pi, 0)])
    >>> integral_cocycle(5, ((1, 3), (0, 1)), 0.2 + 1j, t)
    mpf('3.0')
    >>> integral_cocycle(5, S, 1j, t)
    mpc(real='0.0', imag='0.0')
    """
    z = upper_point(z)
    _, word = st_word(m)
    total, w = 0, z
    for factor in reversed(word):
        if factor == S:
            total += 2 / mpmath.pi * cocycle_RS(delta, w)
        else:
            total += factor[0][1] * cocycle_RT(delta, table)
        w = mobius(factor, w)
    return total


def weight0_residual(delta: int, m: Matrix, z, table, trunc: int = DEFAULT_TRUNC, tol=DEFAULT_TOL, source: str = "twisted"):
    """|R_M(z) − (G(Mz) − G(z))|"""
    z = upper_point(z)
    difference = primitive_G(delta, table, mobius(m, z), trunc, tol, source) - primitive_G(delta, table, z, trunc, tol, source)
    return abs(integral_cocycle(delta, m, z, table) - difference)


def verify_period_relation(delta: int, z, table, trunc: int = DEFAULT_TRUNC, tol=DEFAULT_TOL, source: str = "twisted"):
    """
    |z^{−2}F_Δ(−1/z) − F_Δ(z) − (2/π) Σ_{c<0<a} 1/Q(z,1)|

    """
    z = upper_point(z)

    def F(w):
        return eval_F(delta, table, w, trunc, tol, source)

    residual = abs(slash(F, S, z) - F(z) - PeriodFunction.S(delta)(z))
    log.info(f"Period relation Δ={delta} at z={mpmath.nstr(z, 6)}: residual {mpmath.nstr(residual, 3)}")
    return residual

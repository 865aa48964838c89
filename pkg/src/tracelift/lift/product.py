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
The twisted Borcherds product

    Ψ_Δ(z) = e(−√Δ tr_1(Δ) z) Π_{m≥1} Π_{b mod Δ} (1 − e(mz + b/Δ))^{(Δ/b) tr_J(Δm²)}

Exponents are irrational, so Ψ is only handled through log Ψ, a sum of principal logarithms of 1 − e(mz + b/Δ)
(|e(mz + b/Δ)| < 1), exponentiated once.
"""
import logging

import mpmath

from tracelift.arith import character, require_twist
from tracelift.lift.integral import cocycle_RS, eval_F
from tracelift.lift.series import DEFAULT_TRUNC, SeriesSum, e, sum_series, upper_point
from tracelift.traces import DEFAULT_TOL

log = logging.getLogger(__name__)

STEP = mpmath.mpf("1e-4")


def log_product(delta: int, table, z, trunc: int = DEFAULT_TRUNC, tol=DEFAULT_TOL) -> SeriesSum:
    """
    log Ψ_Δ(z) = −2πi√Δ tr_1(Δ) z + Σ_m tr_J(Δm²) Σ_b (Δ/b) Log(1 − e(mz + b/Δ))
    """
    delta = require_twist(delta)
    z = upper_point(z)
    chi = character(delta)

    def term(m):
        exponent = table.value("cycle", "J", delta * m * m)
        return exponent * mpmath.fsum(chi(b) * mpmath.log(1 - e(m * z + mpmath.mpf(b) / delta)) for b in range(delta) if chi(b))

    series = sum_series(term, tol, trunc, label=f"log Ψ_{delta}")
    head = -2j * mpmath.pi * mpmath.sqrt(delta) * table.value("cycle", "one", delta) * z
    return SeriesSum(head + series.value, series.tail, series.terms)


def eval_product(delta: int, table, z, trunc: int = DEFAULT_TRUNC, tol=DEFAULT_TOL):
    return mpmath.exp(log_product(delta, table, z, trunc, tol).value)


def verify_product_T(delta: int, z, table, trunc: int = DEFAULT_TRUNC, tol=DEFAULT_TOL):
    """|Ψ(z + 1)/(Ψ(z) e(−√Δ tr_1(Δ))) − 1|"""
    z = upper_point(z)
    shift = log_product(delta, table, z + 1, trunc, tol).value - log_product(delta, table, z, trunc, tol).value
    phase = -2j * mpmath.pi * mpmath.sqrt(delta) * table.value("cycle", "one", delta)
    return abs(mpmath.expm1(shift - phase))


def verify_product_S(delta: int, z, table, trunc: int = DEFAULT_TRUNC, tol=DEFAULT_TOL):
    """
    |Ψ(−1/z)/(Ψ(z) e(−2 Σ_{c<0<a} (log((z − w)/(i − w)) − log((z − w′)/(i − w′))))) − 1|
    """
    z = upper_point(z)
    logs = mpmath.sqrt(delta) * cocycle_RS(delta, z)
    ratio = log_product(delta, table, -1 / z, trunc, tol).value - log_product(delta, table, z, trunc, tol).value
    return abs(mpmath.expm1(ratio + 4j * mpmath.pi * logs))


def verify_log_derivative(delta: int, z, table, trunc: int = DEFAULT_TRUNC, tol=DEFAULT_TOL, source: str = "twisted"):
    """
    Relative gap between (Ψ′/Ψ)(z), by central differences of log Ψ, and −2π²i√Δ F_Δ(z)
    """
    z = upper_point(z)
    h = STEP
    derivative = (log_product(delta, table, z + h, trunc, tol).value - log_product(delta, table, z - h, trunc, tol).value) / (2 * h)
    expected = -2j * mpmath.pi**2 * mpmath.sqrt(delta) * eval_F(delta, table, z, trunc, tol, source)
    return abs(derivative - expected) / abs(expected)

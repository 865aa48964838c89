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
L_Δ(1) for the even real characters (Δ/·), Δ > 1 fundamental
"""
from math import ceil

import mpmath
import numpy as np

from tracelift.arith import kronecker, pell_minimal, require_twist
from tracelift.qforms import class_number


def dirichlet_L1(delta: int):
    """
    L_Δ(1) = −(1/√Δ) Σ_{0<b<Δ} (Δ/b) log sin(πb/Δ)

    >>> mpmath.nstr(dirichlet_L1(5), 12)
    '0.430408940964'
    >>> abs(dirichlet_L1(5) - mpmath.log((3 + mpmath.sqrt(5)) / 2) / mpmath.sqrt(5)) < 1e-14
    True
    >>> dirichlet_L1(-4)
    Traceback (most recent call last):
    ...
    tracelift.errors.DomainError: Δ=-4 is outside the twisted lifts.
    Hint: use a fundamental discriminant Δ > 1, e.g. 5, 8, 12, 13.
    """
    delta = require_twist(delta)
    total = mpmath.fsum(kronecker(delta, b) * mpmath.log(mpmath.sinpi(mpmath.mpf(b) / delta)) for b in range(1, delta))
    return -total / mpmath.sqrt(delta)


def dirichlet_L1_series(delta: int, terms: int = 10**6) -> float:
    """
    Partial sum of Σ (Δ/n)/n over whole periods of the character; the remainder is O(Δ²/N²) for even characters

    >>> abs(dirichlet_L1_series(5) - float(dirichlet_L1(5))) < 1e-8
    True
    """
    delta = require_twist(delta)
    chi = np.array([kronecker(delta, b) for b in range(delta)], dtype=float)
    n = np.arange(1, delta * ceil(terms / delta) + 1)
    return float(np.sum(chi[n % delta] / n))


def class_number_check(delta: int):
    """
    (h⁺, ε, L_Δ(1), h⁺ log ε/√Δ): narrow class number, unit of norm 1 and both sides of the class number formula

    >>> h, eps, lhs, rhs = class_number_check(12)
    >>> h, mpmath.nstr(eps, 10), abs(lhs - rhs) < 1e-14
    (2, '3.732050808', True)
    """
    delta = require_twist(delta)
    h = class_number(delta)
    sol = pell_minimal(delta)
    return h, sol.epsilon, dirichlet_L1(delta), h * sol.log_epsilon / mpmath.sqrt(delta)

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

from dataclasses import dataclass, field
from typing import Callable

import mpmath

from tracelift.errors import DomainError


def _lookup(mapping: dict):
    return lambda D: mapping.get(D, 0)


@dataclass(frozen=True)
class HarmonicCoefficients:
    """
    Coefficients c⁺(D) (`holo`) and c⁻(D) (`nonholo`) of a harmonic Maass form of weight 1/2 in the plus space

    `principal` lists the D > 0 with c⁻(D) ≠ 0; it is finite.

    >>> f = HarmonicCoefficients.finite({5: 1.5}, {0: -8, 1: 2})
    >>> f.holo(5), f.holo(8), f.nonholo(1), f.principal
    (1.5, 0, 2, (1,))
    >>> HarmonicCoefficients.finite({-3: 1}, {})
    Traceback (most recent call last):
    ...
    tracelift.errors.DomainError: c⁺(-3) = 1 ≠ 0, but only inputs without negative holomorphic principal part are lifted.
    """

    holo: Callable
    nonholo: Callable
    principal: tuple[int, ...] = ()
    label: str = field(default="custom", compare=False)

    @classmethod
    def finite(cls, holo: dict, nonholo: dict, label="custom") -> "HarmonicCoefficients":
        for D, c in holo.items():
            if D < 0 and c:
                raise DomainError(f"c⁺({D}) = {c} ≠ 0, but only inputs without negative holomorphic principal part are lifted.")
        principal = tuple(sorted(D for D, c in nonholo.items() if D > 0 and c))
        return cls(_lookup(dict(holo)), _lookup(dict(nonholo)), principal, label)

    @classmethod
    def h(cls, table) -> "HarmonicCoefficients":
        """
        The form h: c⁺(D) = tr_J(D)/2π for D > 0, c⁻(0) = −8, c⁻(1) = 2, c⁻(D) = tr_J(D) for D < 0

        Traces are taken from the table, computed on first use.

        >>> from tracelift.traces import TraceTable
        >>> h = HarmonicCoefficients.h(TraceTable())
        >>> h.nonholo(0), h.nonholo(1), h.holo(-4), h.principal
        (-8, 2, 0, (1,))
        >>> mpmath.nstr(h.nonholo(-3), 10)
        '-248.0'
        """

        def holo(D):
            if D <= 0 or D % 4 not in (0, 1):
                return 0
            return table.value("cycle", "J", D) / (2 * mpmath.pi)

        def nonholo(D):
            match D:
                case 0:
                    return -8
                case 1:
                    return 2
                case _ if D < 0 and D % 4 in (0, 1):
                    return table.value("cm", "J", D)
            return 0

        return cls(holo, nonholo, (1,), "h")

    def twisted(self, delta: int, m: int):
        """c⁻(Δm²), nonzero only when Δm² is in the principal part"""
        return self.nonholo(delta * m * m) if delta * m * m in self.principal else 0

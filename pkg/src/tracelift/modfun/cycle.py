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
Cycle integrals ∫_{Γ_Q∖c_Q} F(z) dz/Q(z,1) over one period of a closed geodesic

Along the arclength parametrization of `GeodesicClass.point`, dz/Q(z,1) = ds/√D, so for a modular function F the
integrand s ↦ F(z(s)) is periodic with period ℓ = 2 log ε and the trapezoidal rule converges geometrically.
The angular form dz/Q(z,1) = dθ/(2ar sin θ) on the semicircle gives an independent Gauss-type quadrature.

>>> from tracelift.qforms import QuadForm, geodesic_data
>>> g = geodesic_data(QuadForm(1, 1, -1))
>>> r = integrate_cycle(lambda z: 1, g, 1e-12)
>>> abs(r.value - 2 * mpmath.log((3 + mpmath.sqrt(5)) / 2) / mpmath.sqrt(5)) < 1e-12
True
"""
import logging
from dataclasses import dataclass
from math import ceil

import mpmath

from tracelift.errors import ConvergenceError, DomainError

log = logging.getLogger(__name__)

MAX_NODES = 1 << 15
MAX_PANELS = 512


@dataclass(frozen=True)
class CycleIntegral:
    value: mpmath.mpc
    abs_err: mpmath.mpf
    nodes: int
    method: str

    @property
    def real_part(self):
        """Real part, with the imaginary residue folded into the error"""
        return mpmath.re(self.value), self.abs_err + abs(mpmath.im(self.value))


def _trapezoid(f, length, start, tol, nodes):
    h = length / nodes
    total = mpmath.fsum(f(start + k * h) for k in range(nodes))
    current = h * total
    while True:
        # midpoints of the previous grid
        total += mpmath.fsum(f(start + (k + mpmath.mpf(1) / 2) * h) for k in range(nodes))
        nodes, h = 2 * nodes, h / 2
        previous, current = current, h * total
        diff = abs(current - previous)
        if diff <= tol:
            return current, diff, nodes
        if nodes >= MAX_NODES:
            raise ConvergenceError(f"Trapezoidal rule stalled at {nodes} nodes with difference {mpmath.nstr(diff, 3)} > {tol}.", achieved=diff)


def _angular(F_eval, g, start, tol, panels):
    q = g.representative
    scale = 2 * q.a * g.radius

    def f(theta):
        z = g.center + g.radius * mpmath.expj(theta)
        return F_eval(z) / mpmath.sin(theta)

    while True:
        # panel ends at equal arclength steps, the last one being the automorph image of the first
        points = [g.angle(g.point(start + k * g.length / panels)) for k in range(panels + 1)]
        value, err = mpmath.quad(f, points, error=True)
        if err <= tol * abs(scale):
            return value / scale, err / abs(scale), panels
        if panels >= MAX_PANELS:
            raise ConvergenceError(f"Angular quadrature reached {panels} panels with error {mpmath.nstr(err / abs(scale), 3)} > {tol}.", achieved=err / abs(scale))
        panels *= 2


def integrate_cycle(F_eval, g, tol=1e-9, method: str = "trapezoid", nodes: int | None = None, start=0, dps: int | None = None) -> CycleIntegral:
    """
    ∫ F(z) dz/Q(z,1) from z(start) to its automorph image, in the direction on which dz/Q(z,1) = ds/√D

    `start` is the arclength offset of the base point from the apex; `dps` raises the working precision.

    >>> from tracelift.qforms import QuadForm, geodesic_data
    >>> g = geodesic_data(QuadForm(1, 0, -2))
    >>> a = integrate_cycle(lambda z: 1, g, 1e-10, method="quad")
    >>> abs(a.value - 2 * mpmath.log(3 + 2 * mpmath.sqrt(2)) / mpmath.sqrt(8)) < 1e-10
    True
    >>> integrate_cycle(lambda z: 1, geodesic_data(QuadForm(0, 1, 0)))
    Traceback (most recent call last):
    ...
    tracelift.errors.DomainError: The geodesic of [0, 1, 0] is vertical and not closed.
    Hint: square discriminants have no cycle integrals here.
    """
    if g.pell is None:
        raise DomainError(f"The geodesic of {g.representative} is vertical and not closed.\nHint: square discriminants have no cycle integrals here.")
    with mpmath.workdps(dps or mpmath.mp.dps):
        start = mpmath.mpf(start)
        root = mpmath.sqrt(g.disc)
        match method:
            case "trapezoid":
                nodes = nodes or 16 * ceil(g.length)
                value, err, used = _trapezoid(lambda s: F_eval(g.point(s)), g.length, start, tol * root, nodes)
                value, err = value / root, err / root
            case "quad":
                value, err, used = _angular(F_eval, g, start, tol, nodes or max(2, ceil(g.length)))
            case _:
                raise DomainError(f"Unknown cycle quadrature: {method}.\nHint: use 'trapezoid' or 'quad'.")
        log.debug(f"Cycle integral over {g.representative}: {method} with {used} nodes at {mpmath.mp.dps} digits")
        return CycleIntegral(+mpmath.mpmathify(value), +mpmath.mpf(err), used, method)


def cycle_integral(F_eval, g, tol=1e-9, **kwargs):
    """
    Complex value of the cycle integral of F over the geodesic class g

    >>> from tracelift.qforms import QuadForm, geodesic_data
    >>> g = geodesic_data(QuadForm(1, 1, -1))
    >>> mpmath.nstr(cycle_integral(lambda z: 1, g).real, 8)
    '0.86081788'
    """
    return integrate_cycle(F_eval, g, tol, **kwargs).value

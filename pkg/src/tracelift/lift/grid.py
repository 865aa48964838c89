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
Row-major evaluation of Φ, Φ′, F_Δ or Ψ over a rectangle, for plot export
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import repeat

import mpmath
from pandas import DataFrame

from tracelift.errors import DomainError
from tracelift.lift.coefficients import HarmonicCoefficients
from tracelift.lift.integral import eval_F
from tracelift.lift.phi import eval_phi, eval_phi_prime, on_geodesic
from tracelift.lift.product import eval_product
from tracelift.lift.series import DEFAULT_TRUNC
from tracelift.qforms import forms_containing
from tracelift.traces import DEFAULT_TOL

log = logging.getLogger(__name__)

KINDS = ("lift", "deriv", "integral", "product")
GRID_COLUMNS = ["x", "y", "re", "im", "singular_flag"]


def grid_points(box, nx: int, ny: int):
    """
    Rows of constant y from ymin up, x increasing within each row

    >>> grid_points((0, 1, 1, 2), 2, 2)
    [(0.0, 1.0), (1.0, 1.0), (0.0, 2.0), (1.0, 2.0)]
    """
    xmin, xmax, ymin, ymax = map(float, box)
    if nx < 1 or ny < 1 or ymin <= 0 or xmax < xmin or ymax < ymin:
        raise DomainError(f"Invalid grid {box} with {nx}×{ny} points.\nHint: use ymin > 0, xmin ≤ xmax, ymin ≤ ymax and at least one point per axis.")

    def axis(lo, hi, n):
        return [lo] if n == 1 else [lo + (hi - lo) * k / (n - 1) for k in range(n)]

    return [(x, y) for y in axis(ymin, ymax, ny) for x in axis(xmin, xmax, nx)]


def evaluate(kind: str, delta: int, table, z, trunc: int = DEFAULT_TRUNC, tol=DEFAULT_TOL, source: str = "twisted"):
    """Value of one of the lift objects at z, with f = h for lift and deriv"""
    match kind:
        case "lift":
            return eval_phi(delta, HarmonicCoefficients.h(table), z, trunc, tol).total
        case "deriv":
            return eval_phi_prime(delta, HarmonicCoefficients.h(table), z, trunc, tol).total
        case "integral":
            return eval_F(delta, table, z, trunc, tol, source)
        case "product":
            return eval_product(delta, table, z, trunc, tol)
    raise DomainError(f"Unknown kind {kind!r}.\nHint: use one of {', '.join(KINDS)}.")


def grid_row(point, kind, delta, table, trunc, tol, source):
    """One row of the grid; module level so that process pools can pickle it"""
    x, y = point
    z = mpmath.mpc(x, y)
    flag = int(bool(forms_containing(delta, z) or on_geodesic(delta, z)))
    if kind == "deriv" and on_geodesic(delta, z):
        value = mpmath.mpc(mpmath.nan, mpmath.nan)
    else:
        value = mpmath.mpmathify(evaluate(kind, delta, table, z, trunc, tol, source))
    return x, y, float(mpmath.re(value)), float(mpmath.im(value)), flag


def grid(kind: str, delta: int, box, nx: int, ny: int, table, trunc: int = DEFAULT_TRUNC, tol=DEFAULT_TOL, source: str = "twisted", threads: int = 1) -> DataFrame:
    """
    DataFrame with columns x, y, re, im, singular_flag; `singular_flag` marks points inside or on a geodesic of
    discriminant Δ, where Φ′ carries its singular part

    The lowest row needs the longest series, so its first point is evaluated here first and the other points,
    sharing those traces, may then go to a process pool; rows come back in grid order.

    >>> grid("lift", 5, (-0.5, 0.5, 0, 2), 2, 2, None)
    Traceback (most recent call last):
    ...
    tracelift.errors.DomainError: Invalid grid (-0.5, 0.5, 0, 2) with 2×2 points.
    Hint: use ymin > 0, xmin ≤ xmax, ymin ≤ ymax and at least one point per axis.
    """
    if kind not in KINDS:
        raise DomainError(f"Unknown kind {kind!r}.\nHint: use one of {', '.join(KINDS)}.")
    points = grid_points(box, nx, ny)
    first = grid_row(points[0], kind, delta, table, trunc, tol, source)
    rest = points[1:]
    args = repeat(kind), repeat(delta), repeat(table), repeat(trunc), repeat(tol), repeat(source)
    if threads > 1 and len(rest) > 1:
        log.info(f"Evaluating {len(points)} grid points with {threads} processes")
        with ProcessPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(grid_row, rest, *args))
    else:
        rows = list(map(grid_row, rest, *args))
    return DataFrame([first] + rows, columns=GRID_COLUMNS)

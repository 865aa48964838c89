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

"""Twisted Borcherds lifts of h: Φ_Δ and Φ′_Δ, the modular integral F_Δ with its periods and cocycles, the product Ψ_Δ and verification suites."""
from tracelift.lift.coefficients import HarmonicCoefficients
from tracelift.lift.grid import GRID_COLUMNS, KINDS, evaluate, grid, grid_points
from tracelift.lift.integral import (
    SOURCES,
    F_coefficient,
    F_series,
    PeriodFunction,
    cocycle_residual,
    cocycle_RS,
    cocycle_RT,
    eval_F,
    integral_cocycle,
    period_qS,
    primitive_G,
    slash,
    st_word,
    verify_period_relation,
    weight0_residual,
    weight2_period,
)
from tracelift.lift.phi import LiftValue, eval_phi, eval_phi_prime, on_geodesic, predicted_jump
from tracelift.lift.product import eval_product, log_product, verify_log_derivative, verify_product_S, verify_product_T
from tracelift.lift.series import DEFAULT_TRUNC, SeriesSum, e, sum_series, upper_point
from tracelift.lift.verify import SUITES, Check, principal_form, run_suites

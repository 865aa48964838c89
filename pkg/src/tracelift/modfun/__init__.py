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

"""Modular-function engine: q-expansions of E_4, E_6, Δ and j, the Faber polynomials J_m, point evaluation and cycle integrals."""
from tracelift.modfun.cycle import CycleIntegral, cycle_integral, integrate_cycle
from tracelift.modfun.point import FUNDAMENTAL_Y, ModularPoint, coefficient_bound, eval_Jm, reduce_point, required_order, tail_bound
from tracelift.modfun.qseries import QSeries, discriminant_cusp, eisenstein, faber, hecke_consistency, j_series, sigma

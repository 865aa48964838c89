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
Traces of CM values and geodesic cycle integrals, the twisted Borcherds lift of the harmonic form h,
its derivative, the weight 2 modular integral F_Δ and the Borcherds product Ψ_Δ.

>>> from tracelift import kronecker, QuadForm, faber
>>> kronecker(5, 3)
-1
>>> QuadForm(1, 1, -1).disc
5
>>> faber(1)[1]
196884
"""
from tracelift.arith import Discriminant, PellSolution, divisors, is_fundamental, kronecker, pell_minimal
from tracelift.errors import CacheError, ConfigError, ConvergenceError, DomainError, TraceliftError, TruncationError
from tracelift.modfun import QSeries, cycle_integral, eval_Jm, faber, reduce_point
from tracelift.qforms import QuadForm, class_representatives, forms_containing, forms_S_period, genus_character
from tracelift.traces import SCHEMA, TraceEntry, TraceKey, TraceTable, trace_cm, trace_cycle, twisted_coefficient

__version__ = "0.241018.1"
CACHE_SCHEMA = SCHEMA

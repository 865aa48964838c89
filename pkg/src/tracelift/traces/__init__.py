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

"""Traces of CM values and cycle integrals of J_m, their twisted combinations and the persistent trace table."""
from tracelift.traces.table import SCHEMA, TraceEntry, TraceKey, TraceTable
from tracelift.traces.trace import (
    DEFAULT_DPS,
    DEFAULT_TOL,
    F_index,
    F_name,
    compute_entry,
    cycle_dps,
    example_constants,
    trace_cm,
    trace_cm_error,
    trace_cycle,
    trace_cycle_error,
    twisted_coefficient,
    twisted_error,
    twisted_terms,
)

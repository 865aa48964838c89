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

from tracelift.qforms.classes import check_disc, class_number, class_of, class_representatives, cycle, definite_reduced_forms, indefinite_reduced_forms, reduce_indefinite, rho
from tracelift.qforms.enumeration import forms_S_period, forms_containing, forms_period
from tracelift.qforms.genus import genus_character
from tracelift.qforms.geodesic import GeodesicClass, automorph, geodesic_data
from tracelift.qforms.quadform import S, T, HeegnerPoint, I, Matrix, QuadForm, heegner_point, indicator, inverse, matmul, mobius, p_value, power, reduce_definite, stabilizer_order

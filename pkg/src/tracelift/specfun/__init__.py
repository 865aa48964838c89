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

from tracelift.specfun.bessel import arcsin_bessel_asymptotic, arcsin_bessel_integral, arcsin_bessel_integral_derivative, bessel_k
from tracelift.specfun.beta import ArcsinSParams, arcsin_beta, arcsin_bound, arcsin_integral, arcsin_s, beta_half, beta_half_c
from tracelift.specfun.lfunction import class_number_check, dirichlet_L1, dirichlet_L1_series
from tracelift.specfun.periodized import (
    arcsin_fourier,
    arcsin_series,
    cosine_zeta,
    neville,
    periodized_arctan,
    script_F,
    script_F_gradient,
    script_F_limit,
    script_F_prime,
    script_F_prime_limit,
    sine_zeta,
)

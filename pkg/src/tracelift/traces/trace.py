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
Traces of J_m over CM points (D < 0) and over closed geodesics (D > 0 nonsquare)

    tr_F(D) = Σ_{Q ∈ Q_D/Γ} F(z_Q)/|Γ̄_Q|                      for D < 0
    tr_F(D) = Σ_{Q ∈ Q_D/Γ} ∫_{Γ_Q∖c_Q} F(z) dz/Q(z,1)           for D > 0

Every form of discriminant D counts, imprimitive ones included.
"""
import logging
import time
from math import ceil

import mpmath

from tracelift.arith import divisors, kronecker, require_twist
from tracelift.errors import DomainError
from tracelift.modfun import eval_Jm, integrate_cycle
from tracelift.qforms import check_disc, class_representatives, geodesic_data, heegner_point, stabilizer_order

log = logging.getLogger(__name__)

DEFAULT_TOL = 1e-9
DEFAULT_DPS = 30


def F_index(F: str) -> int:
    """
    Index m of J_m named by "one", "J" or "J<m>"

    >>> F_index("one"), F_index("J"), F_index("J3")
    (0, 1, 3)
    >>> F_index("j")
    Traceback (most recent call last):
    ...
    tracelift.errors.DomainError: Unknown function 'j'.
    Hint: use 'one', 'J' or 'J<m>' such as 'J2'.
    """
    match F:
        case "one":
            return 0
        case "J":
            return 1
        case str() if F.startswith("J") and F[1:].isdigit():
            return int(F[1:])
    raise DomainError(f"Unknown function {F!r}.\nHint: use 'one', 'J' or 'J<m>' such as 'J2'.")


def F_name(m: int) -> str:
    """
    >>> F_name(0), F_name(1), F_name(4)
    ('one', 'J', 'J4')
    """
    return {0: "one", 1: "J"}.get(m, f"J{m}")


def cycle_dps(m: int, disc: int, dps: int = DEFAULT_DPS) -> int:
    """
    Working precision for cycle integrals of J_m over discriminant disc: |J_m| reaches e^{πm√D} along the cycle

    >>> cycle_dps(0, 5), cycle_dps(1, 5), cycle_dps(3, 5)
    (35, 39, 45)
    """
    return max(dps, 30) + ceil(mpmath.pi * m * mpmath.sqrt(disc) / mpmath.log(10)) + 5


def cm_terms(D: int, F: str = "J", tol=DEFAULT_TOL):
    """
    Per class: (form, CM value F(z_Q), weight 1/|Γ̄_Q|)

    >>> [(q, mpmath.nstr(v.real, 10), w) for q, v, w in cm_terms(-4)]
    [([1, 0, 1], '984.0', mpf('0.5'))]
    """
    if D >= 0:
        raise DomainError(f"CM traces need a negative discriminant, not {D}.")
    check_disc(D)
    m = F_index(F)
    terms = []
    for q in class_representatives(D):
        z = heegner_point(q).z
        terms.append((q, mpmath.mpmathify(eval_Jm(m, z, tol)), mpmath.mpf(1) / stabilizer_order(q)))
    return terms


def trace_cm_error(D: int, F: str = "J", tol=DEFAULT_TOL):
    """tr_F(D) for D < 0 with its error: evaluation tolerance per class plus the imaginary residue"""
    terms = cm_terms(D, F, tol)
    total = mpmath.fsum(v * w for _, v, w in terms)
    return mpmath.re(total), len(terms) * tol + abs(mpmath.im(total))


def trace_cm(D: int, F: str = "J", tol=DEFAULT_TOL):
    """
    Σ_{Q ∈ Q_D/Γ} F(z_Q)/|Γ̄_Q|

    >>> mpmath.nstr(trace_cm(-3), 10), mpmath.nstr(trace_cm(-4), 10)
    ('-248.0', '492.0')
    >>> trace_cm(-3, "one") == mpmath.mpf(1) / 3
    True
    """
    return trace_cm_error(D, F, tol)[0]


def trace_cycle_error(F: str, D: int, tol=DEFAULT_TOL, method: str = "trapezoid", dps: int = DEFAULT_DPS):
    """
    tr_F(D) for D > 0 nonsquare, with its error and the number of quadrature nodes used
    """
    if D <= 0:
        raise DomainError(f"Cycle traces need a positive discriminant, not {D}.")
    check_disc(D)
    m = F_index(F)
    reps = class_representatives(D)
    # pointwise evaluation error must stay below the per-class share of tol
    share = tol / (10 * len(reps))
    work = cycle_dps(m, D, dps)
    value, err, nodes = mpmath.mpf(0), mpmath.mpf(0), 0
    with mpmath.workdps(work):
        for q in reps:
            g = geodesic_data(q)
            f = (lambda z: 1) if m == 0 else (lambda z: eval_Jm(m, z, share / g.length))
            r = integrate_cycle(f, g, share, method=method)
            part, e = r.real_part
            value, err, nodes = value + part, err + e, nodes + r.nodes
    log.debug(f"tr_{F}({D}): {len(reps)} classes, {nodes} nodes at {work} digits")
    return +value, +err, nodes


def trace_cycle(F: str, D: int, tol=DEFAULT_TOL, method: str = "trapezoid", dps: int = DEFAULT_DPS):
    """
    Σ_{Q ∈ Q_D/Γ} ∫_{Γ_Q∖c_Q} F(z) dz/Q(z,1)

    >>> from tracelift.specfun import dirichlet_L1
    >>> abs(trace_cycle("one", 5) - 2 * dirichlet_L1(5)) < 1e-10
    True
    >>> trace_cycle("J", 9)
    Traceback (most recent call last):
    ...
    tracelift.errors.DomainError: Square discriminant 9: its cycle integrals need a regularization that is not implemented.
    Hint: use a nonsquare discriminant.
    """
    return trace_cycle_error(F, D, tol, method, dps)[0]


def compute_entry(key, tol=DEFAULT_TOL, dps: int = DEFAULT_DPS, method: str = "trapezoid"):
    """
    Computes the table entry of a key; module level so that process pools can pickle it

    >>> from tracelift.traces.table import TraceKey
    >>> mpmath.nstr(compute_entry(TraceKey("cm", "J", -4)).value, 10)
    '492.0'
    """
    from tracelift.traces.table import TraceEntry

    start = time.perf_counter()
    match key.kind:
        case "cm":
            value, err = trace_cm_error(key.disc, key.F, tol)
            provenance = f"cm:tol={tol}"
        case "cycle":
            value, err, nodes = trace_cycle_error(key.F, key.disc, tol, method, dps)
            provenance = f"cycle:{method}:nodes={nodes}:dps={cycle_dps(key.m, key.disc, dps)}"
        case _:  # pragma: no cover
            raise DomainError(f"Unknown trace kind {key.kind}.")
    elapsed = time.perf_counter() - start
    log.info(f"Trace {key.kind} tr_{key.F}({key.disc}) = {mpmath.nstr(value, 12)} ± {mpmath.nstr(err, 2)} in {elapsed:.2f}s")
    return TraceEntry(key, value, err, provenance)


def twisted_terms(delta: int, n: int):
    """
    (coefficient, discriminant) pairs of Σ_{d|n} (Δ/(n/d))·d·tr_J(Δd²), zero coefficients dropped

    >>> twisted_terms(5, 1), twisted_terms(5, 2), twisted_terms(5, 5)
    ([(1, 5)], [(-1, 5), (2, 20)], [(5, 125)])
    """
    require_twist(delta)
    if n < 1:
        raise DomainError(f"Twisted coefficients are indexed by n ≥ 1, not {n}.")
    return [(c, delta * d * d) for d in divisors(n) if (c := kronecker(delta, n // d) * d)]


def twisted_coefficient(delta: int, n: int, table):
    """
    Σ_{d|n} (Δ/(n/d))·d·tr_J(Δd²), which equals tr_{J_n}(Δ)

    >>> from tracelift.traces.table import TraceTable
    >>> t = TraceTable()
    >>> twisted_coefficient(5, 1, t) == t.value("cycle", "J", 5)
    True
    """
    return mpmath.fsum(c * table.value("cycle", "J", D) for c, D in twisted_terms(delta, n))


def twisted_error(delta: int, n: int, table):
    """Accumulated abs_err of the twisted coefficient"""
    return sum(abs(c) * table.entry("cycle", "J", D).abs_err for c, D in twisted_terms(delta, n))


def example_constants() -> dict:
    """
    Level-one constants of the F = J specialization, taken as given: the index-0 trace and the complementary trace

    >>> example_constants()
    {'tr_J(0,0)': 4, 'tr_J^c(-1/4,1)': 2}
    """
    return {"tr_J(0,0)": 4, "tr_J^c(-1/4,1)": 2}

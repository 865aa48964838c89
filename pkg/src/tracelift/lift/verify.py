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
Numerical verification suites: each check evaluates an identity and reports its residual against a tolerance
"""
import logging
from dataclasses import dataclass, field

import mpmath

from tracelift.arith import require_twist
from tracelift.errors import DomainError
from tracelift.lift.coefficients import HarmonicCoefficients
from tracelift.lift.integral import cocycle_residual, verify_period_relation
from tracelift.lift.phi import eval_phi, eval_phi_prime, predicted_jump
from tracelift.lift.product import verify_log_derivative, verify_product_S, verify_product_T
from tracelift.lift.series import DEFAULT_TRUNC
from tracelift.qforms import S, T, QuadForm, matmul
from tracelift.traces import DEFAULT_TOL, F_name, twisted_coefficient

log = logging.getLogger(__name__)

PERIOD_POINTS = {"i": 1j, "(1+3i)/2": (1 + 3j) / 2, "1/4+2i": 0.25 + 2j}
COCYCLE_PAIRS = {"S,T": (S, T), "T,S": (T, S), "S,S": (S, S), "ST,S": (matmul(S, T), S)}
CROSSING_EPS = [mpmath.mpf(10) ** -k for k in range(3, 7)]


@dataclass(frozen=True)
class Check:
    """
    >>> c = Check("period", "z=i", 2e-6, 1e-5)
    >>> c.passed, c.asdict()["check"]
    (True, 'period:z=i')
    """

    suite: str
    name: str
    residual: object
    tol: float
    detail: dict = field(default_factory=dict, compare=False)

    @property
    def passed(self):
        return bool(self.residual <= self.tol)

    def asdict(self):
        return {"check": f"{self.suite}:{self.name}", "residual": self.residual, "tol": self.tol, "pass": self.passed} | self.detail


def principal_form(delta: int) -> QuadForm:
    """
    [1, b, (b² − Δ)/4] with b ≡ Δ (mod 2)

    >>> principal_form(5), principal_form(8)
    ([1, 1, -1], [1, 0, -2])
    """
    b = delta % 2
    return QuadForm(1, b, (b - delta) // 4)


def apex(q: QuadForm):
    return mpmath.mpc(-mpmath.mpf(q.b) / (2 * q.a), mpmath.sqrt(q.disc) / (2 * q.a))


def series_tol(tol, check_tol):
    return min(tol, check_tol / 100)


def period_suite(delta, table, trunc=DEFAULT_TRUNC, tol=DEFAULT_TOL, source="twisted"):
    return [
        Check("period", f"z={label}", verify_period_relation(delta, z, table, trunc, series_tol(tol, 1e-4), source), 1e-4)
        for label, z in PERIOD_POINTS.items()
    ]


def product_suite(delta, table, trunc=DEFAULT_TRUNC, tol=DEFAULT_TOL, source="twisted"):
    return [
        Check("product", "T", verify_product_T(delta, 2j, table, trunc, series_tol(tol, 1e-8)), 1e-8),
        Check("product", "logderiv", verify_log_derivative(delta, 2j, table, trunc, series_tol(tol, 1e-5), source), 1e-5),
        Check("product", "S:z=2i", verify_product_S(delta, 2j, table, trunc, series_tol(tol, 1e-4)), 1e-4),
        Check("product", "S:z=0.5+2i", verify_product_S(delta, 0.5 + 2j, table, trunc, series_tol(tol, 1e-4)), 1e-4),
    ]


def jump_suite(delta, table, trunc=DEFAULT_TRUNC, tol=DEFAULT_TOL, source="twisted"):
    h = HarmonicCoefficients.h(table)
    q = principal_form(delta)
    z0, eps = apex(q), CROSSING_EPS[-1]
    outside = eval_phi_prime(delta, h, z0 + 1j * eps, trunc, tol).total
    inside = eval_phi_prime(delta, h, z0 - 1j * eps, trunc, tol).total
    predicted = predicted_jump(delta, h, q, z0)
    residual = abs(outside - inside - predicted) / abs(predicted)
    return [Check("jump", f"apex of {q}", residual, 1e-3, {"jump": outside - inside, "predicted": predicted})]


def continuity_suite(delta, table, trunc=DEFAULT_TRUNC, tol=DEFAULT_TOL, source="twisted"):
    h = HarmonicCoefficients.h(table)
    q = principal_form(delta)
    z0 = apex(q)
    gaps = [abs(eval_phi(delta, h, z0 + 1j * eps, trunc, tol).total - eval_phi(delta, h, z0 - 1j * eps, trunc, tol).total) for eps in CROSSING_EPS]
    ratios = shrink_ratios(gaps, 10 * tol)
    return [
        Check("continuity", f"apex of {q}", gaps[-1], 1e-4, {"gaps": gaps}),
        Check("continuity", f"shrinking at apex of {q}", max(ratios, default=0), 1, {"ratios": ratios}),
    ]


def shrink_ratios(gaps, floor):
    """
    Ratios of consecutive gaps as ε decreases, ignoring gaps already below the evaluation noise `floor`

    >>> shrink_ratios([1, 0.5, 0.25, 1e-12], 1e-8)
    [0.5, 0.5]
    >>> shrink_ratios([0.25, 0.5], 1e-8), shrink_ratios([0, 1e-3], 1e-8)
    ([2.0], [mpf('+inf')])
    """
    return [g1 / g0 if g0 else mpmath.inf for g0, g1 in zip(gaps, gaps[1:]) if g1 > floor]


def traceid_suite(delta, table, trunc=DEFAULT_TRUNC, tol=DEFAULT_TOL, source="twisted"):
    checks = []
    for m in (2, 3):
        direct = table.value("cycle", F_name(m), delta)
        twisted = twisted_coefficient(delta, m, table)
        checks.append(Check("traceid", f"m={m}", abs(direct - twisted), 1e-5, {"direct": direct, "twisted": twisted}))
    return checks


def cocycle_suite(delta, table, trunc=DEFAULT_TRUNC, tol=DEFAULT_TOL, source="twisted"):
    return [
        Check("cocycle", f"{name}:z={label}", cocycle_residual(delta, m, n, z), 1e-10)
        for name, (m, n) in COCYCLE_PAIRS.items()
        for label, z in PERIOD_POINTS.items()
    ]


SUITES = {
    "period": period_suite,
    "product": product_suite,
    "jump": jump_suite,
    "continuity": continuity_suite,
    "traceid": traceid_suite,
    "cocycle": cocycle_suite,
}


def run_suites(names, delta: int, table, trunc: int = DEFAULT_TRUNC, tol=DEFAULT_TOL, source: str = "twisted") -> list[Check]:
    """
    Checks of the named suites, "all" meaning every suite, in a fixed order

    >>> from tracelift.traces import TraceTable
    >>> [c.passed for c in run_suites(["cocycle"], 5, TraceTable())] == [True] * 12
    True
    >>> run_suites(["plot"], 5, None)
    Traceback (most recent call last):
    ...
    tracelift.errors.DomainError: Unknown suite 'plot'.
    Hint: choose among period, product, jump, continuity, traceid, cocycle, all.
    """
    delta = require_twist(delta)
    names = list(SUITES) if "all" in names else list(names)
    for name in names:
        if name not in SUITES:
            raise DomainError(f"Unknown suite {name!r}.\nHint: choose among {', '.join(SUITES)}, all.")
    checks = []
    for name in names:
        found = SUITES[name](delta, table, trunc, tol, source)
        for c in found:
            log.info(f"{'pass' if c.passed else 'FAIL'} {c.suite}:{c.name} residual={mpmath.nstr(c.residual, 3)} tol={c.tol}")
        checks.extend(found)
    return checks

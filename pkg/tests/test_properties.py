import random
from fractions import Fraction
from math import gcd, isqrt

import mpmath
import pytest

from tracelift.arith import jacobi, kronecker, pell_minimal
from tracelift.modfun import eval_Jm, faber, hecke_consistency, integrate_cycle
from tracelift.qforms import S, T, QuadForm, class_representatives, forms_containing, genus_character, geodesic_data, indicator, matmul, mobius, p_value, power, reduce_definite
from tracelift.specfun import arcsin_bound, arcsin_s
from tracelift.traces import trace_cm, trace_cycle

PAIRS = [(5, -3), (5, -4), (8, -4), (5, 8), (8, 5), (12, -3), (5, 13), (-4, -3), (-3, 8)]


def random_matrix(rng):
    factors = []
    for _ in range(rng.randint(1, 4)):
        factors += [power(T, rng.randint(-3, 3)), S]
    return matmul(*factors)


def test_genus_character_is_invariant():
    rng = random.Random(0)
    failures = []
    for _ in range(100):
        delta, D = rng.choice(PAIRS)
        q = rng.choice(class_representatives(delta * D))
        m = random_matrix(rng)
        if genus_character(delta, q) != genus_character(delta, q.act(m)):
            failures.append((delta, q, m))
    assert failures == []


def brute_force(disc, x, y):
    found = []
    bound = int(2 * abs(x) + 1) + 8
    for a in range(1, 4 * disc):
        for b in range(-2 * a * bound, 2 * a * bound + 1):
            if (b * b - disc) % (4 * a) == 0:
                c = (b * b - disc) // (4 * a)
                if a * (x * x + y * y) + b * x + c < 0:
                    found.append((a, b, c))
    return found


GRID = [(Fraction(i, 5), Fraction(j, 7)) for i in (-4, -2, 0, 1, 3) for j in (1, 2, 3, 5, 9)]


@pytest.mark.parametrize("disc", [d for d in range(5, 41) if d % 4 in (0, 1) and int(d**0.5) ** 2 != d])
def test_forms_containing_against_brute_force(disc):
    for x, y in GRID:
        found = [(q.a, q.b, q.c) for q in forms_containing(disc, mpmath.mpc(float(x), float(y)))]
        assert found == brute_force(disc, x, y), (disc, x, y)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_faber_constructions_agree(m):
    newton, elimination = faber(m, 8), faber(m, 8, method="elimination")
    for (n, a), (_, b) in zip(newton.items(), elimination.items()):
        assert abs(a - b) <= 1e-9 * max(abs(a), 1), n
    assert hecke_consistency(m)


def legendre(n, p):
    if n % p == 0:
        return 0
    return 1 if any((x * x - n) % p == 0 for x in range(1, p)) else -1


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17, 19, 23])
def test_kronecker_matches_legendre_at_odd_primes(p):
    assert [kronecker(n, p) for n in range(-40, 41)] == [legendre(n, p) for n in range(-40, 41)]


def test_kronecker_is_multiplicative():
    nonzero = [m for m in range(-12, 13) if m]
    tops = [n for n in range(-9, 10) if n]
    for a in tops:
        for b in tops:
            for m in nonzero:
                assert kronecker(a * b, m) == kronecker(a, m) * kronecker(b, m), (a, b, m)
    for n in range(-15, 16):
        for m in nonzero:
            for k in nonzero:
                assert kronecker(n, m * k) == kronecker(n, m) * kronecker(n, k), (n, m, k)


def test_quadratic_reciprocity():
    odd = range(1, 60, 2)
    for m in odd:
        for n in odd:
            if gcd(m, n) == 1:
                assert jacobi(m, n) * jacobi(n, m) == (-1) ** ((m - 1) // 2 * ((n - 1) // 2)), (m, n)


NONSQUARE = [d for d in range(5, 81) if d % 4 in (0, 1) and isqrt(d) ** 2 != d]


@pytest.mark.parametrize("d", NONSQUARE)
def test_pell_solution_is_minimal(d):
    u = 1
    while isqrt(d * u * u + 4) ** 2 != d * u * u + 4:
        u += 1
    s = pell_minimal(d)
    assert (s.t, s.u) == (isqrt(d * u * u + 4), u)


def test_definite_reduction():
    for a in range(1, 10):
        for b in range(-15, 16):
            for c in range(1, 12):
                q = QuadForm(a, b, c)
                if q.disc >= 0:
                    continue
                r, ((al, be), (ga, de)) = reduce_definite(q)
                assert q.act(((al, be), (ga, de))) == r and al * de - be * ga == 1
                assert abs(r.b) <= r.a <= r.c, q
                if abs(r.b) == r.a or r.a == r.c:
                    assert r.b >= 0, q
                assert reduce_definite(r)[0] == r


def test_Jm_is_modular():
    rng = random.Random(1)
    with mpmath.workdps(30):
        for _ in range(20):
            z = mpmath.mpc(rng.uniform(-1, 1), rng.uniform(0.5, 2))
            m, w = rng.randint(1, 3), mobius(random_matrix(rng), z)
            a, b = eval_Jm(m, z, 1e-15), eval_Jm(m, w, 1e-15)
            assert abs(a - b) <= 1e-10 * max(1, abs(a)), (m, z)


def test_cycle_integral_ignores_the_base_point():
    g = geodesic_data(QuadForm(1, 1, -1))

    def J(z):
        return eval_Jm(1, z, 1e-14)

    values = [integrate_cycle(J, g, 1e-10, start=start, dps=30).value for start in (0, 0.35, g.length / 3)]
    assert abs(values[1] - values[0]) < 1e-8 and abs(values[2] - values[0]) < 1e-8


def test_cycle_quadratures_agree(table):
    assert abs(trace_cycle("J", 5, method="quad") - table.value("cycle", "J", 5)) < 1e-6


def test_indicator_agrees_with_p_value():
    rng = random.Random(2)
    forms = [QuadForm(a, b, (b * b - d) // (4 * a)) for d in (5, 8, 12, 13) for a in range(1, 6) for b in range(-7, 8) if (b * b - d) % (4 * a) == 0]
    for _ in range(400):
        q, z = rng.choice(forms), mpmath.mpc(rng.uniform(-2, 2), rng.uniform(0.05, 2))
        p = p_value(q, z)
        if abs(p) > 1e-9:
            assert indicator(q, z) == (1 if p > 0 else 0), (q, z)


@pytest.mark.parametrize("a", [1.01, 1.5, 2, 3, 5, 10, 100])
def test_arcsin_bound(a):
    for s in [0.01, 0.25, 0.5, 1, 2, 5, 10]:
        assert arcsin_s(a, s) <= arcsin_bound(a, s), (a, s)
        assert arcsin_s(a, s, method="quad") <= arcsin_bound(a, s), (a, s)


@pytest.mark.parametrize("disc, expected", [(-7, -4119), (-8, 7256), (-11, -33512)])
def test_cm_traces_are_integers(disc, expected):
    value = trace_cm(disc)
    assert abs(value - mpmath.nint(value)) < 1e-6
    assert int(mpmath.nint(value)) == expected

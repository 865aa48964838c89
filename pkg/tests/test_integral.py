import mpmath
import pytest

from tracelift.errors import DomainError
from tracelift.lift import (
    HarmonicCoefficients,
    PeriodFunction,
    cocycle_residual,
    cocycle_RT,
    eval_F,
    eval_phi_prime,
    period_qS,
    st_word,
    verify_period_relation,
    weight0_residual,
)
from tracelift.qforms import S, T, matmul

POINTS = [1j, (1 + 3j) / 2, 0.25 + 2j]


def test_F_at_i(table):
    assert abs(eval_F(5, table, 1j) - 4 / (5 * mpmath.pi)) <= 1e-5


def test_F_is_periodic(table):
    assert abs(eval_F(5, table, 0.2 + 1.5j) - eval_F(5, table, 1.2 + 1.5j)) < 1e-9


@pytest.mark.parametrize("z", POINTS)
def test_period_relation_5(table, z):
    assert verify_period_relation(5, z, table) <= 1e-4


@pytest.mark.parametrize("delta", [8, 12])
@pytest.mark.parametrize("z", POINTS)
def test_period_relation_direct(table, delta, z):
    assert verify_period_relation(delta, z, table, source="direct") <= 1e-4


def test_coefficient_sources_agree(table):
    z = 0.1 + 1.2j
    assert abs(eval_F(5, table, z) - eval_F(5, table, z, source="direct")) < 1e-6


def test_derivative_of_lift_is_a_multiple_of_F(table):
    z = mpmath.mpc(0.3, 2)
    smooth = eval_phi_prime(5, HarmonicCoefficients.h(table), z).smooth_part
    expected = 2j * mpmath.pi * mpmath.sqrt(5) * eval_F(5, table, z)
    assert abs(smooth - expected) < 1e-6


def test_S_period_function():
    z = mpmath.mpc(0.4, 0.7)
    assert abs(PeriodFunction.S(5)(z) - 2 / mpmath.pi * period_qS(5, z)) < 1e-15
    assert PeriodFunction.S(8).disc == 8


@pytest.mark.parametrize("m, n", [(S, T), (T, S), (S, S), (matmul(S, T), S), (matmul(T, T, S), matmul(S, T))])
def test_weight2_cocycle(m, n):
    assert cocycle_residual(5, m, n, 0.3 + 1.1j) < 1e-10
    assert cocycle_residual(8, m, n, -0.2 + 0.6j) < 1e-10


@pytest.mark.parametrize("m", [T, S, matmul(T, S), ((1, -2), (0, 1))])
def test_weight0_cocycle(table, m):
    assert weight0_residual(5, m, 0.2 + 1.1j, table) < 1e-5


def test_RT_is_the_constant_term(table):
    assert abs(cocycle_RT(5, table) - table.value("cycle", "one", 5) / mpmath.pi) < 1e-15


@pytest.mark.parametrize("m", [((2, 1), (1, 1)), ((1, 0), (3, 1)), ((-1, 0), (0, -1)), ((5, 2), (-3, -1))])
def test_st_word_reconstructs_the_matrix(m):
    sign, word = st_word(m)
    assert tuple(tuple(sign * x for x in row) for row in matmul(*word)) == m


def test_non_fundamental_delta():
    with pytest.raises(DomainError):
        eval_F(4, None, 1j)

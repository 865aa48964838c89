import mpmath
import pytest

from tracelift.lift import eval_product, log_product, verify_log_derivative, verify_product_S, verify_product_T


def test_T_phase(table):
    assert verify_product_T(5, 2j, table) <= 1e-8


def test_log_derivative(table):
    assert verify_log_derivative(5, 2j, table) <= 1e-5


@pytest.mark.parametrize("z", [2j, 0.5 + 2j])
def test_S_transformation(table, z):
    assert verify_product_S(5, z, table) <= 1e-4


def test_product_is_the_exponential_of_its_logarithm(table):
    z = 0.1 + 1.5j
    assert abs(eval_product(5, table, z) - mpmath.exp(log_product(5, table, z).value)) < 1e-12
    assert log_product(5, table, z).terms >= 3

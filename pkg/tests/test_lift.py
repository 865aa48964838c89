import mpmath
import pytest

from tracelift.errors import DomainError, TruncationError
from tracelift.lift import GRID_COLUMNS, HarmonicCoefficients, eval_phi, eval_phi_prime, grid, on_geodesic, predicted_jump, principal_form, run_suites
from tracelift.qforms import QuadForm


@pytest.fixture(scope="module")
def h(table):
    return HarmonicCoefficients.h(table)


def test_lift_is_periodic(h):
    assert abs(eval_phi(5, h, 0.3 + 1.4j).total - eval_phi(5, h, -0.7 + 1.4j).total) < 1e-9


def test_lift_is_real(h):
    assert mpmath.im(mpmath.mpmathify(eval_phi(5, h, 0.3 + 1.4j).total)) == 0


def test_derivative_matches_finite_differences(h):
    z, step = mpmath.mpc(0.3, 2), mpmath.mpf("1e-5")
    dx = (eval_phi(5, h, z + step).total - eval_phi(5, h, z - step).total) / (2 * step)
    dy = (eval_phi(5, h, z + 1j * step).total - eval_phi(5, h, z - 1j * step).total) / (2 * step)
    assert abs(eval_phi_prime(5, h, z).total - (dx - 1j * dy) / 2) < 1e-5


def test_singular_part_inside_the_principal_semicircle(h):
    inside = eval_phi(5, h, -0.5 + 0.5j)
    assert principal_form(5) in inside.contributing_forms
    assert inside.singular_part != 0
    assert eval_phi(5, h, 2j).singular_part == 0


def test_continuity_and_jump(table):
    continuity, shrinking, jump = run_suites(["continuity", "jump"], 5, table)
    assert continuity.residual <= 1e-4
    assert shrinking.passed and shrinking.detail["ratios"]
    assert all(r < 0.5 for r in shrinking.detail["ratios"])
    assert jump.residual <= 1e-3


def test_jump_where_two_geodesics_cross(h):
    z0, eps = mpmath.mpc(0, 1), mpmath.mpf("1e-6")
    crossing = on_geodesic(5, z0)
    assert crossing == [QuadForm(1, -1, -1), QuadForm(1, 1, -1)]
    predicted = mpmath.fsum(predicted_jump(5, h, q, z0) for q in crossing)
    assert abs(predicted - 16j / mpmath.sqrt(5)) < 1e-14
    outside = eval_phi_prime(5, h, z0 + 1j * eps).total
    inside = eval_phi_prime(5, h, z0 - 1j * eps).total
    assert abs(outside - inside - predicted) <= 1e-3 * abs(predicted)
    assert abs(eval_phi(5, h, z0 + 1j * eps).total - eval_phi(5, h, z0 - 1j * eps).total) <= 1e-4


@pytest.mark.parametrize("z", [0.3 + 2j, -0.4 + 0.6j, 0.1 + 0.7j])
def test_derivative_is_holomorphic_off_the_geodesics(h, z):
    z, step = mpmath.mpc(z), mpmath.mpf("1e-5")
    dx = (eval_phi_prime(5, h, z + step).total - eval_phi_prime(5, h, z - step).total) / (2 * step)
    dy = (eval_phi_prime(5, h, z + 1j * step).total - eval_phi_prime(5, h, z - 1j * step).total) / (2 * step)
    assert abs((dx + 1j * dy) / 2) <= 1e-4 * max(1, abs(dx))


@pytest.mark.parametrize("z", [0.3 + 1.4j, -0.4 + 0.6j])
def test_derivative_is_periodic(h, z):
    assert abs(eval_phi_prime(5, h, z).total - eval_phi_prime(5, h, z + 1).total) < 1e-9


def test_jump_at_the_apex(h):
    q = principal_form(5)
    z0 = mpmath.mpc(-0.5, mpmath.sqrt(5) / 2)
    assert on_geodesic(5, z0) == [q]
    assert abs(predicted_jump(5, h, q, z0) - 8j / mpmath.sqrt(5)) < 1e-14
    with pytest.raises(DomainError):
        eval_phi_prime(5, h, z0)


def test_truncation_is_reported():
    f = HarmonicCoefficients.finite({5 * m * m: mpmath.mpf(10) ** m for m in range(1, 40)}, {})
    with pytest.raises(TruncationError) as e:
        eval_phi(5, f, 0.1 + 0.05j, trunc=8)
    assert e.value.required_order == 16


def test_lower_half_plane_is_rejected(h):
    with pytest.raises(DomainError):
        eval_phi(5, h, 0.3 - 1j)


def test_grid(table):
    df = grid("integral", 5, (-0.5, 0.5, 1.5, 2), 3, 2, table)
    assert list(df.columns) == GRID_COLUMNS
    assert len(df) == 6
    assert list(df["y"]) == [1.5, 1.5, 1.5, 2.0, 2.0, 2.0]
    assert not df["singular_flag"].any()

import mpmath
import pytest

from tracelift.errors import DomainError
from tracelift.qforms import class_representatives, heegner_point, stabilizer_order
from tracelift.modfun import eval_Jm
from tracelift.specfun import dirichlet_L1
from tracelift.traces import TraceEntry, TraceKey, TraceTable, trace_cm, trace_cycle, twisted_coefficient


@pytest.mark.parametrize("disc, expected", [(-3, -248), (-4, 492)])
def test_cm_traces(disc, expected):
    assert abs(trace_cm(disc) - expected) < 1e-6


def test_cm_trace_is_weighted_sum_over_heegner_points():
    reps = class_representatives(-23)
    direct = mpmath.fsum(eval_Jm(1, heegner_point(q).z) / stabilizer_order(q) for q in reps)
    assert len(reps) == 3
    assert abs(trace_cm(-23) - mpmath.re(direct)) < 1e-8


def test_cm_trace_of_one_counts_classes():
    assert abs(trace_cm(-3, "one") - mpmath.mpf(1) / 3) < 1e-15
    assert abs(trace_cm(-20, "one") - 2) < 1e-15


@pytest.mark.parametrize("delta", [5, 8, 12])
def test_cycle_trace_of_one_is_twice_L1(delta):
    assert abs(trace_cycle("one", delta) - 2 * dirichlet_L1(delta)) <= 1e-8


@pytest.mark.parametrize("delta, m", [(5, 2), (5, 3), (8, 2)])
def test_trace_identity(table, delta, m):
    direct = table.value("cycle", f"J{m}", delta)
    assert abs(direct - twisted_coefficient(delta, m, table)) <= 1e-5


def test_cycle_trace_of_five_is_not_the_rounded_constant():
    value = trace_cycle("one", 5)
    assert abs(value - mpmath.mpf("0.86081788")) < 1e-8
    assert abs(value - mpmath.mpf("0.86094")) > 1e-4


def test_wrong_signs_are_rejected():
    with pytest.raises(DomainError):
        trace_cm(5)
    with pytest.raises(DomainError):
        trace_cycle("J", -4)


def test_table_identity_is_order_independent():
    a = TraceEntry(TraceKey("cm", "J", -3), mpmath.mpf(-248), 1e-9, "given")
    b = TraceEntry(TraceKey("cm", "J", -4), mpmath.mpf(492), 1e-9, "given")
    assert TraceTable([a, b]).id == TraceTable([b, a]).id
    assert TraceTable([a]).id != TraceTable([a, b]).id


def test_loose_entries_are_flagged(caplog):
    loose = TraceEntry(TraceKey("cm", "J", -3), mpmath.mpf(-248), 1e-4, "cm:tol=0.0001")
    t = TraceTable([loose])
    stored = t.get(loose.key)
    assert stored.low_precision and stored.provenance == "cm:tol=0.0001;low-precision"
    assert "abs_err 1.0e-04" in caplog.text
    caplog.clear()
    t2 = TraceTable(t.entries)
    assert t2.get(loose.key).provenance == "cm:tol=0.0001;low-precision"
    assert caplog.text == ""
    assert t2.id == t.id
    tight = TraceEntry(TraceKey("cm", "J", -4), mpmath.mpf(492), 1e-9, "given")
    assert not TraceTable([tight]).get(tight.key).low_precision

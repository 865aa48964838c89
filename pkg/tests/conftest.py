import pytest

from tracelift.traces import TraceTable


@pytest.fixture(scope="session")
def table():
    """One trace table for the whole session: traces are expensive and never change"""
    return TraceTable()

import numpy as np
import pytest

E_THIRD = 1.0 / 3.0


def dense_grid():
    """1000 uniform points over [0, 1/3] plus the exact points 0, 1/4, 1/3."""
    return np.unique(np.concatenate([np.linspace(0.0, E_THIRD, 1000), [0.0, 0.25, E_THIRD]]))


@pytest.fixture(scope="session")
def grid():
    return dense_grid()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, (ok, detail) in RESULTS.items():
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {name}: {detail}")

import mpmath
import pytest

# Frozen at 30 digits with mpmath (ellipe / quad / hyp2f1 / legenp).
PERIMETER_2_1 = 9.6884482205476762
E_075 = 1.2110560275684595


@pytest.fixture(scope="session")
def mp_perimeter():
    """Independent high-precision perimeter 4 a E(1 - (b/a)^2)."""

    def perimeter(a, b):
        with mpmath.workdps(30):
            a, b = max(a, b), min(a, b)
            xi = mpmath.mpf(b) / a
            return float(4 * a * mpmath.ellipe(1 - xi * xi))

    return perimeter


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)

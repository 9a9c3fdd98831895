import pytest
from hypothesis import HealthCheck, settings

from bbwcalc.bundles import GrassmannianContext, Sym, U
from bbwcalc.koszul import ZeroLocusSetup

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def G():
    return GrassmannianContext(2, 6)


@pytest.fixture(scope="session")
def X(G):
    """Zero locus of a general section of Sym^3 U^dual on Gr(2,6)."""
    return ZeroLocusSetup(G, Sym(3, U()))


# one PASS/FAIL line per acceptance criterion, printed after the run
_CRITERIA = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or report.outcome != "passed":
        number = int(report.nodeid.split("test_criterion_")[1][:2])
        ok = _CRITERIA.get(number, True) and report.outcome == "passed"
        _CRITERIA[number] = ok


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if _CRITERIA[number] else 'FAIL'}")

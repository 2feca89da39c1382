import pytest

from ringinv import make_ring

SMALL_RINGS = ["zmod:4", "zmod:6", "zmod:8", "zmod:9", "zmod:12", "mat:2:z2"]


@pytest.fixture(params=SMALL_RINGS)
def small_ring(request):
    return make_ring(request.param)


def pytest_terminal_summary(terminalreporter):
    from tests import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)

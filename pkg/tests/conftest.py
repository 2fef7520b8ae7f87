import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "mwlat", deadline=None, derandomize=True, print_blob=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("mwlat")

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def acceptance_lines():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

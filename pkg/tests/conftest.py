import pytest
from hypothesis import settings

from janetbasis import VariableContext
from janetbasis.systems import parse_polynomial

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def xy():
    return VariableContext(["x", "y"])


@pytest.fixture
def xyz():
    return VariableContext(["x", "y", "z"])


def poly(text, names=("x", "y"), order="degrevlex"):
    return parse_polynomial(text, VariableContext(names), order)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.report_lines():
        terminalreporter.write_line(line)

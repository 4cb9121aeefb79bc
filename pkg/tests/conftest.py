"""Collects one PASS/FAIL line per acceptance criterion and prints them at the end."""
import pytest

LINES = pytest.StashKey[dict]()


def _lines(config):
    if LINES not in config.stash:
        config.stash[LINES] = {}
    return config.stash[LINES]


@pytest.fixture
def report(request):
    """report(number, name, ok, detail) records a criterion result and asserts it."""
    lines = _lines(request.config)

    def _report(number, name, ok, detail=""):
        line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {name}  {detail}".rstrip()
        print(line)
        lines[request.node.nodeid] = (number, line)
        assert ok, line

    return _report


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    number = getattr(item.function, "criterion", None)
    lines = _lines(item.config)
    if number is not None and rep.when == "call" and rep.failed and item.nodeid not in lines:
        lines[item.nodeid] = (number, f"criterion {number:2d}: FAIL  {item.name}  (raised before reporting)")


def pytest_terminal_summary(terminalreporter, config):
    lines = _lines(config)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(lines.values()):
        terminalreporter.write_line(line)

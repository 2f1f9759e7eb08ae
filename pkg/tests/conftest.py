import pytest

_ACCEPTANCE = []


class _Criterion:
    def __init__(self, label):
        self.label = label

    def check(self, passed, detail=""):
        _ACCEPTANCE.append((self.label, bool(passed), detail))
        assert passed, f"{self.label}: {detail}"


@pytest.fixture
def criterion(request):
    marker = request.node.get_closest_marker("criterion")
    return _Criterion(marker.args[0] if marker else request.node.name)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion label")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {label}  {detail}")

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

ACCEPTANCE_KEY = pytest.StashKey[dict]()


@pytest.fixture
def acceptance(request):
    """Dict criterion id -> (passed, title, detail) shared across the session."""
    return request.config.stash.setdefault(ACCEPTANCE_KEY, {})


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(ACCEPTANCE_KEY, None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(results, key=_order):
        passed, title, detail = results[cid]
        mark = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{mark}] {cid:>4} {title}: {detail}")


def _order(cid):
    digits = "".join(ch for ch in cid if ch.isdigit())
    return int(digits), cid

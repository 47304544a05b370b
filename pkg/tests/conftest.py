from functools import lru_cache

import pytest

from klchar import Context


@lru_cache(maxsize=None)
def shared_context(descriptor: str) -> Context:
    return Context(descriptor)


@pytest.fixture
def ctx():
    return shared_context


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("KLCHAR_CACHE_DIR", str(tmp_path / "cache"))
    return tmp_path / "cache"


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from kakimizu.complex import build_ms_complex, cycle_graph_complex  # noqa: E402

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def ms():
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = build_ms_complex(n)
        return cache[n]

    return get


@pytest.fixture
def hollow_square():
    return cycle_graph_complex(["a", "b", "c", "d"])


@pytest.fixture
def golden_dir():
    return GOLDEN


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail in sorted(RESULTS, key=lambda r: r[0]):
        line = f"[{'PASS' if ok else 'FAIL'}] {number}. {title}"
        if detail:
            line += f" -- {detail}"
        terminalreporter.write_line(line)

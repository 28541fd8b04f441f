import sys
from pathlib import Path

import pytest
from hypothesis import settings

from betti_forge.diagrams import BettiTable
from betti_forge.ferrers import from_cells

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")

EXAMPLE_CELLS = [(1, 1, 1), (1, 1, 2), (1, 1, 3), (1, 2, 1), (1, 2, 2), (2, 1, 1)]


@pytest.fixture
def cubical_stacking():
    return from_cells(3, EXAMPLE_CELLS)


@pytest.fixture
def canonical_ring_table():
    return BettiTable({(0, 0): 1, (0, 2): 2, (1, 3): 6, (2, 4): 2, (2, 6): 1})


@pytest.fixture
def stacked_table():
    return BettiTable({
        (0, 0): 1, (1, 2): 6, (2, 3): 8, (3, 4): 3,
        (1, 3): 3, (2, 4): 8, (3, 5): 6, (4, 7): 1,
    })


# -- acceptance summary: one PASS/FAIL line per criterion ---------------------

_criteria: dict[int, dict] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        marker = item.get_closest_marker("criterion")
        if marker:
            item.user_properties.append(("criterion", marker.args))


def pytest_runtest_logreport(report):
    for key, value in report.user_properties:
        if key != "criterion":
            continue
        number, text = value
        entry = _criteria.setdefault(number, {"text": text, "ok": True, "ran": False})
        if report.failed:
            entry["ok"] = False
        if report.when == "call":
            entry["ran"] = True


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        status = "PASS" if entry["ok"] and entry["ran"] else "FAIL"
        terminalreporter.write_line(f"criterion {number:>2}: {status}  {entry['text']}")

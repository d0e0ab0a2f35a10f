from __future__ import annotations

import pytest
from hypothesis import strategies as st

from ccsymbol import parse_ring_spec, parse_series, random_gamma_series

RING_SPECS = ["Q", "F7", "Z/4", "Z/27", "Q[e]/e^2", "F5[e]/e^3"]


def ring(spec: str):
    return parse_ring_spec(spec)


def series(spec_or_ring, text: str):
    r = parse_ring_spec(spec_or_ring) if isinstance(spec_or_ring, str) else spec_or_ring
    return parse_series(text, r)


def units(r, profile: str = "anyGamma"):
    """Hypothesis strategy of seeded unit series over ``r``."""
    return st.integers(0, 2**32).map(lambda seed: random_gamma_series(r, profile, seed))


# ---------------------------------------------------------------------------
# acceptance reporting: one PASS/FAIL line per criterion in the terminal summary

_CRITERIA: dict[int, dict] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    n, title = marker.args
    entry = _CRITERIA.setdefault(n, {"title": title, "ok": True, "ran": False})
    report = outcome.get_result()
    entry["ran"] |= report.when == "call"
    entry["ok"] &= not report.failed


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        entry = _CRITERIA[n]
        status = "PASS" if entry["ok"] and entry["ran"] else "FAIL"
        terminalreporter.write_line(f"criterion {n:2d} [{status}] {entry['title']}")

import sys
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from liedecomp.partitions import Partition  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@st.composite
def partitions(draw, max_size=8, min_size=0, max_length=None):
    m = draw(st.integers(min_value=min_size, max_value=max_size))
    parts = []
    left = m
    while left:
        if max_length is not None and len(parts) == max_length:
            break
        cap = min(left, parts[-1] if parts else left)
        p = draw(st.integers(min_value=1, max_value=cap))
        parts.append(p)
        left -= p
    if left and parts:
        # length cap hit: fold the remainder into the first row
        parts[0] += left
    return Partition(parts)


# acceptance criteria report ------------------------------------------------

_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and report.outcome == "passed":
        return
    for key in report.keywords:
        if not key.startswith("criterion_"):
            continue
        cid = int(key.split("_", 1)[1])
        ok = report.outcome == "passed" and not hasattr(report, "wasxfail")
        _CRITERIA[cid] = ("PASS" if ok else "FAIL", report.nodeid.split("::")[-1])


def pytest_configure(config):
    for i in range(1, 13):
        config.addinivalue_line("markers", f"criterion_{i}: acceptance criterion {i}")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(_CRITERIA):
        status, name = _CRITERIA[cid]
        terminalreporter.write_line(f"{status} criterion {cid:>2}: {name}")

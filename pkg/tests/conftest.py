import functools
import re

import pytest
from hypothesis import settings

from hopfkit.constructions import preset
from hopfkit.integrals import analyze

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

BASE_PRESETS = (["sweedler"] + [f"taft:{n}" for n in range(2, 6)]
                + [f"group:C{n}" for n in range(2, 8)] + ["group:S3"])
ALL_PRESETS = ([w + b for b in BASE_PRESETS for w in ("", "dual:", "op:", "cop:")]
               + ["tensor:group:C2:group:C2"])
SMALL_PRESETS = ["sweedler", "taft:2", "taft:3", "group:C2", "group:C3", "group:S3",
                 "dual:taft:3", "op:sweedler", "cop:taft:3", "tensor:group:C2:group:C2"]


@functools.lru_cache(maxsize=None)
def load(name, field=None):
    return preset(name, field)


@functools.lru_cache(maxsize=None)
def analyzed(name, field=None):
    H = load(name, field)
    I, G = analyze(H)
    return H, I, G


@pytest.fixture(scope="session")
def sweedler():
    return load("sweedler")


# -- acceptance summary ----------------------------------------------------------

_CRITERIA = {}
_CRIT_RE = re.compile(r"test_criterion_(\d+)")


def pytest_runtest_logreport(report):
    m = _CRIT_RE.search(report.nodeid)
    if not m or "test_acceptance" not in report.nodeid:
        return
    if report.when == "call" or report.outcome == "failed":
        k = int(m.group(1))
        _CRITERIA[k] = _CRITERIA.get(k, True) and report.outcome == "passed"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_CRITERIA):
        terminalreporter.write_line(f"criterion {k:>2}: {'PASS' if _CRITERIA[k] else 'FAIL'}")

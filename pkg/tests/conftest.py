from __future__ import annotations

import pytest

from fanlemma.generators import octahedral
from fanlemma.labeling import from_representatives

ACCEPTANCE_KEY = pytest.StashKey[dict]()


def vid(n: int, signed: int) -> int:
    """Vertex id of ``sign(signed) * e_|signed|`` in ``octahedral(n)``."""
    i = abs(signed) - 1
    return i if signed > 0 else i + n + 1


def sx(n: int, *signed: int) -> tuple[int, ...]:
    """Simplex of ``octahedral(n)`` given by signed basis indices, e.g. ``sx(2, 1, -2, 3)``."""
    return tuple(sorted(vid(n, s) for s in signed))


@pytest.fixture
def s1():
    return octahedral(1)


@pytest.fixture
def s2():
    return octahedral(2)


@pytest.fixture
def s1_fan(s1):
    """Octahedral S^1 with labels(±e1) = ±1, labels(±e2) = ±2."""
    cx, fl = s1
    return cx, fl, from_representatives(cx, 2, {vid(1, 1): 1, vid(1, 2): 2})


@pytest.fixture
def s1_tucker(s1):
    """Octahedral S^1 with labels(±e1) = labels(±e2) = ±1."""
    cx, fl = s1
    return cx, fl, from_representatives(cx, 1, {vid(1, 1): 1, vid(1, 2): 1})


@pytest.fixture
def s2_canonical(s2):
    """Octahedral S^2 with labels(±e_i) = ±i."""
    cx, fl = s2
    return cx, fl, from_representatives(cx, 3, {vid(2, i): i for i in (1, 2, 3)})


@pytest.fixture
def acceptance(request):
    results = request.config.stash.setdefault(ACCEPTANCE_KEY, {})

    def record(name: str, ok: bool, detail: str = "") -> bool:
        results[name] = (ok, detail)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(ACCEPTANCE_KEY, None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(results, key=lambda k: int(k.split()[0])):
        ok, detail = results[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")

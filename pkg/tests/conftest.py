import numpy as np
import pytest

from banach_ortho import fixtures


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def first_c2():
    return fixtures.first_c2_operator()


@pytest.fixture
def direction_op():
    return fixtures.direction_example_operator()


@pytest.fixture
def non_bijective():
    return fixtures.non_bijective_operator()


@pytest.fixture
def lemma_op():
    return fixtures.lemma_counterexample_operator()


_ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def acceptance(request):
    """Record one PASS/FAIL line per acceptance criterion for the summary."""
    lines = request.config.stash.setdefault(_ACCEPTANCE, [])

    def record(number: int, ok: bool, detail: str):
        lines.append((number, f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"))
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)

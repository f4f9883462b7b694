import json

import pytest

from banach_ortho.serialize import dumps
from banach_ortho.suites import SUITES, run_suite


@pytest.mark.parametrize("name", ["basic", "symmetry", "direction", "preserver"])
def test_small_runs_pass(name):
    rep = run_suite(name, seed=3, trials=30)
    assert rep.passed, [p.to_dict() for p in rep.properties if p.failures]


def test_counterexample_iff_failures():
    rep = run_suite("symmetry", seed=1, trials=60)
    for p in rep.properties:
        assert (p.counterexample is not None) == (p.failures > 0)


def test_single_witness_note_is_not_a_theorem():
    rep = run_suite("symmetry", seed=42, trials=500)
    note = rep.get("note.single_witness_insufficient")
    assert not note.theorem and note.failures > 0
    assert rep.passed


def test_deterministic_json():
    a = dumps(run_suite("basic", seed=9, trials=20).to_dict())
    b = dumps(run_suite("basic", seed=9, trials=20).to_dict())
    assert a == b
    assert "wall_time" not in json.loads(a)


def test_seed_changes_instances():
    a = run_suite("basic", seed=1, trials=20).get("basic.i.direction_exists").max_violation
    b = run_suite("basic", seed=2, trials=20).get("basic.i.direction_exists").max_violation
    assert a != b


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope")


def test_registry():
    assert set(SUITES) == {"basic", "space", "symmetry", "direction", "preserver", "hilbert"}

import math

import pytest

from banach_ortho import fixtures


def test_all_reproduce():
    results = fixtures.run_all_fixtures()
    assert [r.name for r in results] == list(fixtures.FIXTURES)
    assert len(results) == 4
    for r in results:
        assert r.reproduced, r.to_dict()


@pytest.mark.parametrize("name", sorted(fixtures.FIXTURES))
def test_single(name):
    r = fixtures.run_fixture(name)
    assert r.name == name and r.checks


def test_lemma_grid_exact():
    r = fixtures.run_fixture("lemma-counterexample")
    grid = [c for c in r.checks if "5x5 grid" in c["claim"]]
    assert len(grid) == 2
    assert all(c["value"] <= 1e-12 for c in grid)


def test_prop_basic_values():
    r = fixtures.run_fixture("prop-basic-c2")
    assert r.checks[0]["value"] == 1 - 1j


def test_unknown():
    with pytest.raises(ValueError):
        fixtures.run_fixture("nope")

import json
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from banach_ortho import serialize
from banach_ortho.pairing import PairingOperator
from banach_ortho.space import PNormSpace


def test_space_round_trip():
    for sp in (PNormSpace(3, 2.5), PNormSpace(2, math.inf, "complex")):
        assert serialize.space_from_json(json.loads(json.dumps(serialize.space_to_json(sp)))) == sp


def test_space_inf_string():
    assert serialize.space_to_json(PNormSpace(2, math.inf))["p"] == "inf"


@pytest.mark.parametrize("obj", [{"n": 2}, {"n": 2, "p": "big"}, {"n": 2, "p": 2, "field": "quaternion"}, []])
def test_space_errors(obj):
    with pytest.raises(ValueError):
        serialize.space_from_json(obj)


@given(st.lists(st.complex_numbers(allow_nan=False, allow_infinity=False, max_magnitude=1e6), min_size=1, max_size=5))
def test_complex_vector_round_trip(zs):
    x = np.array(zs, dtype=complex)
    back = serialize.vector_from_json(json.loads(serialize.dumps(serialize.vector_to_json(x, "complex"))))
    np.testing.assert_array_equal(back, x)


def test_real_vector_rejects_complex():
    with pytest.raises(ValueError):
        serialize.vector_from_json({"field": "real", "entries": [[1, 2]]})


def test_operator_columns(first_c2):
    obj = serialize.operator_to_json(first_c2)
    assert obj["columns"][0] == [[0.0, 7.0], [1.0, 0.0]]
    assert np.array_equal(serialize.operator_from_json(obj).M, first_c2.M)


def test_operator_shape_error():
    with pytest.raises(ValueError):
        serialize.operator_from_json({"n": 2, "columns": [[1, 0]]})


def test_no_negative_zero():
    assert serialize.dumps({"a": -0.0, "b": complex(-0.0, -0.0)}) == '{"a": 0.0, "b": [0.0, 0.0]}'


def test_to_jsonable_types():
    out = serialize.to_jsonable({"a": np.float64(1.5), "b": np.bool_(True), "c": np.arange(2), "d": 1j})
    assert out == {"a": 1.5, "b": True, "c": [0, 1], "d": [0.0, 1.0]}
    with pytest.raises(TypeError):
        serialize.to_jsonable(object())


def test_dumps_sorted():
    assert serialize.dumps({"b": 1, "a": 2}) == '{"a": 2, "b": 1}'

"""JSON interchange.

Complex scalars are written as ``[re, im]`` pairs; an infinite exponent as
the string ``"inf"``.  Formats::

    space     {"n": 2, "p": 3 | "inf", "field": "real" | "complex"}
    vector    {"field": ..., "entries": [...]}
    operator  {"n": 2, "field": ..., "columns": [[...], ...]}   # T(e_j) per column
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any

import numpy as np

from .pairing import PairingOperator
from .preserve import FitReport
from .space import OrthResult, PNormSpace, ScalarField
from .symmetry import SymmetryVerdict

__all__ = [
    "scalar_to_json",
    "scalar_from_json",
    "space_to_json",
    "space_from_json",
    "vector_to_json",
    "vector_from_json",
    "operator_to_json",
    "operator_from_json",
    "orth_result_to_json",
    "symmetry_verdict_to_json",
    "fit_report_to_json",
    "to_jsonable",
    "load_json",
    "dumps",
]


def scalar_to_json(z, field=None):
    if isinstance(z, (complex, np.complexfloating)) or field == ScalarField.COMPLEX:
        z = complex(z)
        return [z.real + 0.0, z.imag + 0.0]
    return float(z) + 0.0


def scalar_from_json(value) -> complex | float:
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise ValueError(f"complex scalar must be [re, im], got {value!r}")
        return complex(float(value[0]), float(value[1]))
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValueError(f"not a scalar: {value!r}")
    return float(value)


def _field(obj: dict) -> ScalarField:
    try:
        return ScalarField(obj.get("field", "real"))
    except ValueError:
        raise ValueError(f"unknown field {obj.get('field')!r}") from None


def space_to_json(space: PNormSpace) -> dict:
    p: Any = "inf" if math.isinf(space.p) else space.p
    return {"n": space.n, "p": p, "field": space.field.value}


def space_from_json(obj: dict) -> PNormSpace:
    try:
        n, p = obj["n"], obj["p"]
    except (KeyError, TypeError):
        raise ValueError("space needs 'n' and 'p'") from None
    if isinstance(p, str):
        if p.lower() not in ("inf", "infinity"):
            raise ValueError(f"bad exponent {p!r}")
        p = math.inf
    return PNormSpace(n, p, _field(obj))


def _entries_to_json(a: np.ndarray, field: ScalarField) -> list:
    if field is ScalarField.COMPLEX:
        return [[float(z.real), float(z.imag)] for z in np.asarray(a, dtype=complex)]
    return [float(z) for z in np.asarray(a).real]


def _entries_from_json(values, field: ScalarField) -> np.ndarray:
    if not isinstance(values, list):
        raise ValueError("entries must be a list")
    parsed = [scalar_from_json(v) for v in values]
    if field is ScalarField.REAL:
        if any(isinstance(v, complex) for v in parsed):
            raise ValueError("complex entry in a real vector")
        return np.array(parsed, dtype=float)
    return np.array(parsed, dtype=complex)


def vector_to_json(x, field=ScalarField.REAL) -> dict:
    field = ScalarField(field)
    return {"field": field.value, "entries": _entries_to_json(x, field)}


def vector_from_json(obj: dict) -> np.ndarray:
    if not isinstance(obj, dict) or "entries" not in obj:
        raise ValueError("vector needs 'entries'")
    return _entries_from_json(obj["entries"], _field(obj))


def operator_to_json(T: PairingOperator) -> dict:
    return {
        "n": T.n,
        "field": T.field.value,
        "columns": [_entries_to_json(col, T.field) for col in T.columns],
    }


def operator_from_json(obj: dict) -> PairingOperator:
    if not isinstance(obj, dict) or "columns" not in obj:
        raise ValueError("operator needs 'columns'")
    field = _field(obj)
    cols = [_entries_from_json(c, field) for c in obj["columns"]]
    n = obj.get("n", len(cols))
    if len(cols) != n or any(len(c) != n for c in cols):
        raise ValueError(f"operator must have {n} columns of length {n}")
    return PairingOperator(np.array(cols).T, field)


def orth_result_to_json(r: OrthResult) -> dict:
    return {"verdict": bool(r.verdict), "gap": float(r.gap), "witness": to_jsonable(r.witness)}


def symmetry_verdict_to_json(v: SymmetryVerdict) -> dict:
    return {
        "left": bool(v.left),
        "right": bool(v.right),
        "lambda": None if v.scalar is None else scalar_to_json(complex(v.scalar)),
        "certificate": v.certificate,
    }


def fit_report_to_json(r: FitReport) -> dict:
    p: Any = "inf" if math.isinf(r.p) else r.p
    return {
        "p": p,
        "samples": r.samples,
        "seed": r.seed,
        "residual": r.residual,
        "reverse_gap": r.reverse_gap,
        "m_fit": operator_to_json(r.m_fit)["columns"],
    }


def to_jsonable(obj):
    """Recursively convert numpy values and complex numbers for ``json``."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(obj) + 0.0
    if isinstance(obj, (complex, np.complexfloating)):
        return [float(obj.real) + 0.0, float(obj.imag) + 0.0]
    if isinstance(obj, np.ndarray):
        return [to_jsonable(v) for v in obj.tolist()]
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if hasattr(obj, "value") and isinstance(obj.value, str):
        return obj.value
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def load_json(path) -> Any:
    with open(Path(path), encoding="utf-8") as fh:
        return json.load(fh)


def dumps(obj) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=True, allow_nan=True)

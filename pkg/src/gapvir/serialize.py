"""JSON wire formats.  Scalars travel as strings "a/b" (or "a")."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .algebra import AlgebraElement
from .cover import TensorVector
from .mois import FMatrix, IsoWitness, MoisSpec, WeightVector
from .scalars import InputError, format_scalar, to_scalar
from .verma import HighestWeight, VermaVector, is_monomial


def _get(obj: Any, key: str):
    if not isinstance(obj, dict):
        raise InputError(f"expected a JSON object, got {type(obj).__name__}")
    if key not in obj:
        raise InputError(f"missing field {key!r}")
    return obj[key]


def _int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise InputError(f"{what} must be an integer, got {x!r}")
    return x


def _list(x, what: str) -> list:
    if not isinstance(x, list):
        raise InputError(f"{what} must be a JSON array")
    return x


def element_to_json(x: AlgebraElement) -> dict:
    return {
        "p": x.p,
        "L": {str(m): format_scalar(a) for m, a in sorted(x.l_part.items())},
        "C": [format_scalar(c) for c in x.c_part],
    }


def element_from_json(obj) -> AlgebraElement:
    p = _int(_get(obj, "p"), "p")
    l_raw = obj.get("L", {})
    if not isinstance(l_raw, dict):
        raise InputError("field 'L' must be an object")
    try:
        l = {int(k): to_scalar(v) for k, v in l_raw.items()}
    except ValueError as e:
        raise InputError(f"bad L index: {e}") from None
    c = [to_scalar(v) for v in _list(obj.get("C", ["0"] * p), "C")]
    return AlgebraElement(p, l, c)


def spec_to_json(spec: MoisSpec) -> dict:
    return {
        "p": spec.p,
        "alpha": format_scalar(spec.alpha),
        "beta": format_scalar(spec.beta),
        "F": [[format_scalar(x) for x in row] for row in spec.F.rows],
    }


def fmatrix_from_json(p: int, rows) -> FMatrix:
    rows = _list(rows, "F")
    return FMatrix(p, tuple(tuple(to_scalar(x) for x in _list(r, "F row")) for r in rows))


def spec_from_json(obj, strict: bool = True) -> MoisSpec:
    p = _int(_get(obj, "p"), "p")
    F = fmatrix_from_json(p, _get(obj, "F"))
    return MoisSpec(p, to_scalar(_get(obj, "alpha")), to_scalar(_get(obj, "beta")), F, strict=strict)


def weight_to_json(w: HighestWeight) -> dict:
    return {"p": w.p, "h": format_scalar(w.h), "C": [format_scalar(c) for c in w.c]}


def weight_from_json(obj) -> HighestWeight:
    p = _int(_get(obj, "p"), "p")
    return HighestWeight(p, to_scalar(_get(obj, "h")), tuple(to_scalar(c) for c in _list(_get(obj, "C"), "C")))


def tensor_to_json(T: TensorVector) -> dict:
    return {
        "spec": spec_to_json(T.parent),
        "terms": [{"s": s, "w": w, "coeff": format_scalar(T.coords[s, w])} for s, w in T.support()],
    }


def tensor_from_json(obj) -> TensorVector:
    spec = spec_from_json(_get(obj, "spec"))
    terms = []
    for t in _list(_get(obj, "terms"), "terms"):
        terms.append(((_int(_get(t, "s"), "s"), _int(_get(t, "w"), "w")), to_scalar(_get(t, "coeff"))))
    return TensorVector(spec, terms)


def weight_vector_to_json(v: WeightVector) -> dict:
    out = {"coords": {str(w): format_scalar(v.coords[w]) for w in v.support()}}
    if isinstance(v.parent, MoisSpec):
        out["spec"] = spec_to_json(v.parent)
    return out


def weight_vector_from_json(obj) -> WeightVector:
    spec = spec_from_json(_get(obj, "spec"))
    coords = _get(obj, "coords")
    if not isinstance(coords, dict):
        raise InputError("field 'coords' must be an object")
    v = WeightVector(spec, {int(k): to_scalar(c) for k, c in coords.items()})
    for w in v.coords:
        if not spec.in_basis(w):
            raise InputError(f"v_{w} is not a basis vector of the module")
    return v


def verma_vector_to_json(v: VermaVector) -> list[dict]:
    return v.records()


def verma_vector_from_json(weight: HighestWeight, records) -> VermaVector:
    coords = []
    for r in _list(records, "records"):
        mono = tuple(_list(_get(r, "monomial"), "monomial"))
        if not is_monomial(mono):
            raise InputError(f"{list(mono)} is not a non-increasing list of positive integers")
        coords.append((mono, to_scalar(_get(r, "coeff"))))
    return VermaVector(weight, coords)


def witness_to_json(w: IsoWitness) -> dict:
    return w.to_dict()


def witness_from_json(obj) -> IsoWitness:
    return IsoWitness(_int(_get(obj, "k"), "k"), tuple(to_scalar(x) for x in _list(_get(obj, "d"), "d")))


def load_json(path) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: malformed JSON ({e.msg} at line {e.lineno})") from None


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)

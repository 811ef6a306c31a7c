"""JSON interchange formats.

Table JSON      {"order": n, "table": [[int]], "identity": int|null, "labels": [str]|null}
Generators JSON {"degree": d, "generators": [[int]]}
Act JSON        {"carrier": n, "semigroup": <table JSON>, "action": [[int]]}
Extension JSON  {"S": <table JSON>|null, "T": <table JSON>,
                 "I": {"size": int, "left_action": [[int]]},
                 "J": {"size": int, "right_action": [[int]]}, "P": [[int]]}
"""
from __future__ import annotations

import json
from typing import Any

from .acts import FiniteRightAct, make_act
from .constructions import ExtensionSpec, make_spec
from .core import DEFAULT_ORDER_CAP, FiniteSemigroup, closure_from_transformations, validate
from .errors import ParseError, RangeError


def parse_json(text: str, source: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        err = ParseError(f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}")
        err.line, err.column = exc.lineno, exc.colno
        raise err from None


def read_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_json(text, path)


def _require(obj, key, where):
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError(f"{where}: missing key {key!r}")
    return obj[key]


def semigroup_to_json(S: FiniteSemigroup) -> dict:
    return {
        "order": S.order,
        "table": S.table.tolist(),
        "identity": S.identity,
        "labels": None if S.labels is None else list(S.labels),
    }


def semigroup_from_json(obj, cap: int = DEFAULT_ORDER_CAP) -> FiniteSemigroup:
    """Accept either table JSON or generators JSON."""
    if isinstance(obj, dict) and "generators" in obj:
        gens = obj["generators"]
        degree = obj.get("degree")
        if not isinstance(gens, list) or not gens:
            raise ParseError("generators: expected a non-empty list")
        if degree is not None and any(len(g) != degree for g in gens):
            raise RangeError(f"a generator does not have degree {degree}")
        S, _ = closure_from_transformations(gens, cap=cap)
        return S
    table = _require(obj, "table", "table JSON")
    order = obj.get("order")
    if order is not None and order != len(table):
        raise RangeError(f"order {order} but the table has {len(table)} rows")
    return validate(table, obj.get("identity"), obj.get("labels"))


def load_semigroup(path: str, cap: int = DEFAULT_ORDER_CAP) -> FiniteSemigroup:
    return semigroup_from_json(read_json(path), cap)


def act_to_json(A: FiniteRightAct) -> dict:
    return {"carrier": A.carrier_size, "semigroup": semigroup_to_json(A.semigroup), "action": A.action.tolist()}


def act_from_json(obj) -> FiniteRightAct:
    S = semigroup_from_json(_require(obj, "semigroup", "act JSON"))
    action = _require(obj, "action", "act JSON")
    if len(action) != _require(obj, "carrier", "act JSON"):
        raise RangeError("carrier size does not match the action table")
    return make_act(S, action)


def spec_to_json(spec: ExtensionSpec) -> dict:
    return {
        "S": None if spec.S is None else semigroup_to_json(spec.S),
        "T": semigroup_to_json(spec.T),
        "I": {"size": spec.I_size, "left_action": spec.left_action.tolist()},
        "J": {"size": spec.J_size, "right_action": spec.right_action.tolist()},
        "P": spec.P.tolist(),
    }


def spec_from_json(obj) -> ExtensionSpec:
    S_obj = _require(obj, "S", "extension JSON")
    S = None if S_obj is None else semigroup_from_json(S_obj)
    T = semigroup_from_json(_require(obj, "T", "extension JSON"))
    I = _require(obj, "I", "extension JSON")
    J = _require(obj, "J", "extension JSON")
    return make_spec(
        S, T,
        _require(I, "size", "I"), _require(J, "size", "J"),
        _require(obj, "P", "extension JSON"),
        I.get("left_action"), J.get("right_action"),
    )


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)

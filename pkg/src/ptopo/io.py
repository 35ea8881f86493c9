"""JSON space documents.

A document names the carrier's points and gives exactly one of

* ``structure``: point -> list of maximal convergent generators,
* ``opens``: the open sets of a topology,
* ``pretop``: point -> its single neighborhood generator.

Serialization always emits the canonical ``structure`` form: points in carrier
order, generators listed in carrier order, antichains sorted by mask.
"""

from __future__ import annotations

import json
from typing import Any, Mapping

from .convergence import ConvergenceStructure
from .errors import AxiomViolation, InvalidArgument, MalformedDocument
from .kernel import Carrier, Filter, SpaceMap

_BODY_KEYS = ("structure", "opens", "pretop")


def _names(value: Any, what: str) -> list[str]:
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise MalformedDocument(f"{what} must be an array of point names")
    return value


def load_document(doc: Mapping) -> ConvergenceStructure:
    if not isinstance(doc, Mapping):
        raise MalformedDocument("a space document must be a JSON object")
    if "points" not in doc:
        raise MalformedDocument("a space document needs 'points'")
    present = [k for k in _BODY_KEYS if k in doc]
    if len(present) != 1:
        raise MalformedDocument(f"a space document needs exactly one of {list(_BODY_KEYS)}, got {present}")
    try:
        carrier = Carrier(tuple(_names(doc["points"], "points")))
        body = doc[present[0]]
        if present[0] == "opens":
            if not isinstance(body, list):
                raise MalformedDocument("'opens' must be an array of point arrays")
            return ConvergenceStructure.from_opens(carrier, [_names(o, "an open set") for o in body])
        if not isinstance(body, Mapping):
            raise MalformedDocument(f"'{present[0]}' must map points to generators")
        if present[0] == "pretop":
            return ConvergenceStructure.pretopology(carrier, {p: _names(g, "a generator") for p, g in body.items()})
        families = {}
        for p, gens in body.items():
            if not isinstance(gens, list):
                raise MalformedDocument(f"generators of {p!r} must be an array")
            families[p] = [_names(g, "a generator") for g in gens]
        return ConvergenceStructure.from_max_conv(carrier, families)
    except (AxiomViolation, MalformedDocument):
        raise
    except (InvalidArgument, KeyError) as exc:
        raise MalformedDocument(str(exc)) from exc


def parse_space(text: str) -> ConvergenceStructure:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedDocument(f"not valid JSON: {exc}") from exc
    return load_document(doc)


def document(q: ConvergenceStructure) -> dict:
    c = q.carrier
    return {
        "points": list(c.points),
        "structure": {c.points[x]: [c.names(m) for m in family] for x, family in enumerate(q.maxes)},
    }


def serialize(q: ConvergenceStructure, indent: int | None = None) -> str:
    if indent is None:
        return json.dumps(document(q), separators=(",", ":"))
    return json.dumps(document(q), indent=indent)


def filter_document(f: Filter) -> dict:
    return f.to_json()


def map_document(f: SpaceMap) -> dict:
    return {"domain": list(f.domain.points), "codomain": list(f.codomain.points), "assignment": f.as_dict()}


def describe(q: ConvergenceStructure) -> str:
    """One-line human-readable form used by ``--format text``."""
    c = q.carrier
    parts = []
    for x, family in enumerate(q.maxes):
        gens = " ".join("{" + ",".join(c.names(m)) + "}" for m in family)
        parts.append(f"{c.points[x]} <- {gens}")
    return "; ".join(parts)

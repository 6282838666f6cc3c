"""JSON schemas for universes, distributions, partitions, relations and joints.

=============  ==========================================================
universe       ``{"size": n, "labels": [...], "probs": [...]}``
distribution   ``{"probs": [...]}``
partition      ``{"blocks": [[...], ...]}`` with optional ``"universe"``
relation       ``{"pairs": [[j, k], ...]}`` with ``"universe"`` or ``"size"``
joint          ``{"axes": [2, 2], "labels": [[...], ...],
                 "table": [{"cell": [0, 1], "p": 0.25}, ...]}``
=============  ==========================================================

Omitted joint cells have probability zero. A bare partition without a
universe gets the uniform universe on its indices.
"""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from . import partitions as pc
from .errors import InputIOError, InvariantViolation, SchemaError
from .joint import JointDist
from .measures import Dist


def _require(obj, key, kind, where):
    if key not in obj:
        raise SchemaError(f"{where}: missing field {key!r}")
    value = obj[key]
    if not isinstance(value, kind):
        raise SchemaError(f"{where}.{key}: expected {getattr(kind, '__name__', kind)}")
    return value


def universe_from_json(obj) -> pc.Universe:
    if not isinstance(obj, dict):
        raise SchemaError("universe: expected an object")
    size = obj.get("size")
    probs = obj.get("probs")
    labels = obj.get("labels")
    if size is None:
        if probs is None and labels is None:
            raise SchemaError("universe: needs 'size', 'probs' or 'labels'")
        size = len(probs if probs is not None else labels)
    if not isinstance(size, int) or isinstance(size, bool):
        raise SchemaError("universe.size: expected an integer")
    if probs is not None and not isinstance(probs, list):
        raise SchemaError("universe.probs: expected a list")
    return pc.Universe(size, tuple(probs) if probs is not None else None, labels)


def universe_to_json(u: pc.Universe) -> dict:
    out = {"size": u.size}
    if u.labels is not None:
        out["labels"] = list(u.labels)
    out["probs"] = list(u.probs)
    return out


def dist_from_json(obj) -> Dist:
    probs = _require(obj, "probs", list, "dist")
    return Dist(probs)


def partition_from_json(obj, universe=None) -> pc.Partition:
    blocks = _require(obj, "blocks", list, "partition")
    if any(not isinstance(b, list) for b in blocks):
        raise SchemaError("partition.blocks: every block must be a list of indices")
    if universe is None and "universe" in obj:
        universe = universe_from_json(obj["universe"])
    if universe is None:
        universe = max((max(b) for b in blocks if b), default=-1) + 1
        if universe < 1:
            raise SchemaError("partition.blocks: no indices")
    return pc.make_partition(universe, blocks)


def partition_to_json(p: pc.Partition) -> dict:
    return {"blocks": [list(b) for b in p.blocks]}


def relation_from_json(obj, universe=None) -> pc.BinRel:
    pairs = _require(obj, "pairs", list, "relation")
    if universe is None:
        if "universe" in obj:
            universe = universe_from_json(obj["universe"])
        elif "size" in obj:
            universe = obj["size"]
        else:
            raise SchemaError("relation: needs 'universe' or 'size'")
    return pc.BinRel.from_pairs(universe, [tuple(p) for p in pairs])


def relation_to_json(r: pc.BinRel) -> dict:
    return {"pairs": [list(p) for p in r.sorted_pairs()]}


def joint_from_json(obj) -> JointDist:
    axes = _require(obj, "axes", list, "joint")
    if not axes or any(not isinstance(a, int) or a < 1 for a in axes):
        raise SchemaError("joint.axes: expected a list of positive integers")
    entries = _require(obj, "table", list, "joint")
    t = np.zeros(axes)
    for k, entry in enumerate(entries):
        where = f"joint.table[{k}]"
        if not isinstance(entry, dict):
            raise SchemaError(f"{where}: expected an object")
        cell = _require(entry, "cell", list, where)
        p = entry.get("p")
        if not isinstance(p, (int, float)) or isinstance(p, bool):
            raise SchemaError(f"{where}.p: expected a number")
        if len(cell) != len(axes) or any(
            not isinstance(c, int) or not 0 <= c < a for c, a in zip(cell, axes)
        ):
            raise SchemaError(f"{where}.cell: {cell} is not a cell of axes {axes}")
        if p < 0:
            raise InvariantViolation(f"{where}.p: probabilities must be non-negative")
        if t[tuple(cell)] != 0:
            raise SchemaError(f"{where}.cell: {cell} listed twice")
        t[tuple(cell)] = p
    return JointDist(t, obj.get("labels"), obj.get("names"))


def joint_to_json(j: JointDist) -> dict:
    out = {"axes": list(j.axes)}
    if j.labels is not None:
        out["labels"] = j.labels
    out["names"] = j.names
    out["table"] = [
        {"cell": list(c), "p": float(j.table[c])}
        for c in np.ndindex(*j.axes)
        if j.table[c] != 0
    ]
    return out


def read_json(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputIOError(f"{path}: {exc.strerror or exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def from_json_value(obj):
    """Dispatch on the keys present to the matching domain type."""
    if not isinstance(obj, dict):
        raise SchemaError("top-level value must be an object")
    if "table" in obj or "axes" in obj:
        return joint_from_json(obj)
    if "blocks" in obj:
        return partition_from_json(obj)
    if "pairs" in obj:
        return relation_from_json(obj)
    if "size" in obj or "labels" in obj:
        return universe_from_json(obj)
    if "probs" in obj:
        return dist_from_json(obj)
    raise SchemaError("unrecognised document: expected probs, blocks, pairs or table")


def load_inputs(path):
    """Read a JSON file and return a Universe, Dist, JointDist, Partition or BinRel."""
    return from_json_value(read_json(path))

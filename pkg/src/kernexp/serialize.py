"""JSON encodings for labels, webs, kernels, point vectors and objects.

Label grammar on the wire::

    "a"                      base atom (the unit atom is "*")
    ["pair", l, r]           product atom
    ["tag", i, l]            disjoint-union atom
    ["root"]                 the root of a rooted web
    ["mset", [l, ...]]       multiset, atoms in canonical order
    ["graded", k, [l, ...]]  point of a truncated bang web

Scalars are ``"p/q"`` strings or ``"inf"``.
"""
from __future__ import annotations

import json
from typing import Any

from .kernel import Kernel
from .numeric import parse, render
from .ortho import OrthObject, PointVec
from .space import ROOT, Graded, Multiset, Pair, Tagged, Web


class FormatError(ValueError):
    """Malformed JSON payload."""


def label_to_json(label) -> Any:
    if isinstance(label, str):
        return label
    if isinstance(label, Pair):
        return ["pair", label_to_json(label.left), label_to_json(label.right)]
    if isinstance(label, Tagged):
        return ["tag", label.index, label_to_json(label.label)]
    if label == ROOT:
        return ["root"]
    if isinstance(label, Multiset):
        return ["mset", [label_to_json(a) for a in label.atoms]]
    if isinstance(label, Graded):
        return ["graded", label.grade, [label_to_json(a) for a in label.mset.atoms]]
    raise FormatError(f"label {label!r} has no JSON form")


def label_from_json(data) -> Any:
    if isinstance(data, str):
        return data
    if not isinstance(data, list) or not data:
        raise FormatError(f"bad label {data!r}")
    head = data[0]
    try:
        if head == "pair" and len(data) == 3:
            return Pair(label_from_json(data[1]), label_from_json(data[2]))
        if head == "tag" and len(data) == 3 and isinstance(data[1], int):
            return Tagged(data[1], label_from_json(data[2]))
        if head == "root" and len(data) == 1:
            return ROOT
        if head == "mset" and len(data) == 2:
            return Multiset(tuple(label_from_json(a) for a in data[1]))
        if head == "graded" and len(data) == 3 and isinstance(data[1], int):
            m = Multiset(tuple(label_from_json(a) for a in data[2]))
            if m.size != data[1]:
                raise FormatError(f"graded label {data!r} has the wrong size")
            return Graded(data[1], m)
    except TypeError as exc:
        raise FormatError(f"bad label {data!r}") from exc
    raise FormatError(f"bad label {data!r}")


def web_to_json(w: Web) -> dict:
    return {"atoms": [label_to_json(a) for a in w]}


def web_from_json(data) -> Web:
    if not isinstance(data, dict) or not isinstance(data.get("atoms"), list):
        raise FormatError("a web is an object with an 'atoms' list")
    try:
        return Web(tuple(label_from_json(a) for a in data["atoms"]))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def kernel_to_json(k: Kernel) -> dict:
    return {
        "dom": web_to_json(k.dom),
        "cod": web_to_json(k.cod),
        "entries": [[label_to_json(x), label_to_json(y), render(v)] for (x, y), v in k.items()],
    }


def kernel_from_json(data) -> Kernel:
    if not isinstance(data, dict):
        raise FormatError("a kernel is a JSON object")
    for key in ("dom", "cod", "entries"):
        if key not in data:
            raise FormatError(f"kernel is missing {key!r}")
    dom, cod = web_from_json(data["dom"]), web_from_json(data["cod"])
    seen = set()
    entries = []
    for e in data["entries"]:
        if not isinstance(e, list) or len(e) != 3:
            raise FormatError(f"bad kernel entry {e!r}")
        x, y = label_from_json(e[0]), label_from_json(e[1])
        if (x, y) in seen:
            raise FormatError(f"duplicate kernel entry for {e[0]!r}, {e[1]!r}")
        seen.add((x, y))
        try:
            entries.append(((x, y), parse(e[2])))
        except ValueError as exc:
            raise FormatError(str(exc)) from exc
    try:
        return Kernel(dom, cod, entries)
    except (KeyError, ValueError) as exc:
        raise FormatError(str(exc)) from exc


def vector_to_json(v: PointVec) -> dict:
    return {"web": web_to_json(v.web), "values": [render(x) for x in v.values]}


def _values(raw, w: Web) -> PointVec:
    if not isinstance(raw, list):
        raise FormatError("vector values must be a list")
    try:
        return PointVec(w, tuple(parse(s) for s in raw))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def vector_from_json(data) -> PointVec:
    if not isinstance(data, dict) or "web" not in data or "values" not in data:
        raise FormatError("a vector is an object with 'web' and 'values'")
    return _values(data["values"], web_from_json(data["web"]))


def object_to_json(obj: OrthObject) -> dict:
    out = {
        "web": web_to_json(obj.web),
        "generators": [[render(x) for x in g.values] for g in obj.generators],
    }
    if obj.pcoh_valid is not None:
        out["pcoh_valid"] = obj.pcoh_valid
    return out


def object_from_json(data) -> OrthObject:
    if not isinstance(data, dict) or "web" not in data or "generators" not in data:
        raise FormatError("an object has 'web' and 'generators'")
    w = web_from_json(data["web"])
    gens = tuple(_values(g, w) for g in data["generators"])
    flag = data.get("pcoh_valid")
    if flag is not None and not isinstance(flag, bool):
        raise FormatError("'pcoh_valid' must be a boolean")
    return OrthObject(w, gens, flag)


def dumps(data) -> str:
    """JSON text with one top-level field, and one list item, per line."""
    if not isinstance(data, dict):
        return json.dumps(data)
    fields = []
    for key, value in data.items():
        if isinstance(value, list) and value and all(isinstance(v, (list, dict)) for v in value):
            items = ",\n".join("    " + json.dumps(v) for v in value)
            fields.append(f"  {json.dumps(key)}: [\n{items}\n  ]")
        else:
            fields.append(f"  {json.dumps(key)}: {json.dumps(value)}")
    return "{\n" + ",\n".join(fields) + "\n}"

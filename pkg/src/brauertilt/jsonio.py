"""JSON schemas and DOT export for trees, coverings, modules and complexes."""

from __future__ import annotations

import json

from .algebra import BrauerTreeAlgebra
from .complexes import ProjComplex, direct_sum, stalk_complex
from .coverings import Covering, CyclicInterval
from .modules import (
    Representation,
    UniserialSpec,
    min_proj_presentation,
    string_rep,
    uniserial_rep,
)
from .trees import BrauerTree


class SchemaError(ValueError):
    """Raised on malformed input documents; carries a field path."""

    def __init__(self, path, message):
        self.path = path
        super().__init__(f"{path}: {message}")


def _need(obj, key, path):
    if not isinstance(obj, dict) or key not in obj:
        raise SchemaError(path, f"missing field '{key}'")
    return obj[key]


def tree_from_json(doc) -> BrauerTree:
    """Parse the tree schema; the star shorthand {"star": {"n":., "k":.}}
    is accepted."""
    if isinstance(doc, str):
        doc = json.loads(doc)
    if not isinstance(doc, dict):
        raise SchemaError("$", "expected an object")
    if "star" in doc:
        star = doc["star"]
        n = _need(star, "n", "$.star")
        k = _need(star, "k", "$.star")
        if not isinstance(n, int) or not isinstance(k, int) or n < 1 or k < 1:
            raise SchemaError("$.star", "n and k must be positive integers")
        return BrauerTree.star(n, k)
    vertices = _need(doc, "vertices", "$")
    edges_doc = _need(doc, "edges", "$")
    cyclic_doc = _need(doc, "cyclic_order", "$")
    exceptional = _need(doc, "exceptional", "$")
    multiplicity = _need(doc, "multiplicity", "$")
    if not isinstance(vertices, list):
        raise SchemaError("$.vertices", "expected a list")
    edges = {}
    for i, e in enumerate(edges_doc):
        eid = _need(e, "id", f"$.edges[{i}]")
        ends = _need(e, "ends", f"$.edges[{i}]")
        if not isinstance(ends, list) or len(ends) != 2:
            raise SchemaError(f"$.edges[{i}].ends", "expected a pair of vertices")
        edges[eid] = tuple(ends)
    cyclic = {}
    for key, order in cyclic_doc.items():
        v = int(key) if isinstance(key, str) and key.lstrip("-").isdigit() else key
        if not isinstance(order, list):
            raise SchemaError(f"$.cyclic_order[{key}]", "expected a list of edges")
        cyclic[v] = tuple(order)
    try:
        return BrauerTree(vertices, edges, cyclic, exceptional, multiplicity)
    except ValueError as exc:
        raise SchemaError("$", str(exc))


def tree_to_json(tree: BrauerTree, edge_labels=None) -> dict:
    vmap = {v: i for i, v in enumerate(sorted(tree.vertices, key=repr))}
    doc = {
        "vertices": [vmap[v] for v in sorted(tree.vertices, key=repr)],
        "edges": [
            {"id": e, "ends": [vmap[a], vmap[b]]}
            for e, (a, b) in sorted(tree.edges.items())
        ],
        "cyclic_order": {
            str(vmap[v]): list(order) for v, order in tree.cyclic_order.items()
        },
        "exceptional": vmap[tree.exceptional],
        "multiplicity": tree.multiplicity,
    }
    if edge_labels:
        doc["edge_labels"] = {str(e): str(edge_labels[e]) for e in sorted(tree.edges)}
    return doc


def covering_from_json(doc, n=None) -> Covering:
    if isinstance(doc, str):
        doc = json.loads(doc)
    outer_doc = _need(doc, "outer", "$")
    mode = _need(doc, "mode", "$")
    outer = []
    for i, iv in enumerate(outer_doc):
        outer.append(
            CyclicInterval(_need(iv, "start", f"$.outer[{i}]"), _need(iv, "size", f"$.outer[{i}]"))
        )
    if n is None:
        n = sum(iv.size for iv in outer)
    inner_doc = doc.get("inner", {})
    inner = []
    for idx in range(len(outer)):
        fam = inner_doc.get(str(idx), inner_doc.get(idx, []))
        inner.append(
            tuple(
                CyclicInterval(
                    _need(iv, "start", f"$.inner[{idx}][{j}]"),
                    _need(iv, "size", f"$.inner[{idx}][{j}]"),
                )
                for j, iv in enumerate(fam)
            )
        )
    try:
        return Covering(n, tuple(outer), tuple(inner), mode)
    except ValueError as exc:
        raise SchemaError("$", str(exc))


def covering_to_json(cov: Covering) -> dict:
    return {
        "outer": [{"start": o.start, "size": o.size} for o in cov.outer],
        "inner": {
            str(i): [{"start": iv.start, "size": iv.size} for iv in fam]
            for i, fam in enumerate(cov.inner)
            if fam
        },
        "mode": cov.mode,
    }


def module_from_json(A: BrauerTreeAlgebra, doc) -> Representation:
    if isinstance(doc, str):
        doc = json.loads(doc)
    if "uniserial" in doc:
        u = doc["uniserial"]
        return uniserial_rep(A, UniserialSpec(_need(u, "top", "$.uniserial"), _need(u, "len", "$.uniserial")))
    if "string" in doc:
        s = doc["string"]
        walk = s.get("walk", [])
        letters = []
        for w in walk:
            if not isinstance(w, int) or w == 0 or abs(w) > len(A.arrows):
                raise SchemaError("$.string.walk", f"bad signed arrow id {w}")
            letters.append((A.arrows[abs(w) - 1], 1 if w > 0 else -1))
        if letters:
            return string_rep(A, letters)
        return string_rep(A, [], edge=_need(s, "edge", "$.string"))
    raise SchemaError("$", "expected 'uniserial' or 'string'")


def complex_from_json(A: BrauerTreeAlgebra, doc) -> ProjComplex:
    if isinstance(doc, str):
        doc = json.loads(doc)
    summands = _need(doc, "summands", "$")
    parts = []
    for i, s in enumerate(summands):
        if "stalk" in s:
            st = s["stalk"]
            parts.append(
                stalk_complex(A, _need(st, "edge", f"$.summands[{i}].stalk"), st.get("degree", 0))
            )
        elif "pres" in s:
            M = module_from_json(A, s["pres"])
            p = s["pres"]
            if "uniserial" in p:
                label = ("uniserial", p["uniserial"]["top"], p["uniserial"]["len"])
            else:
                label = ("module", i)
            key = ("pres", label)
            cached = A.summand_cache.get(key)
            parts.append(cached if cached is not None else min_proj_presentation(M, label=label))
        else:
            raise SchemaError(f"$.summands[{i}]", "expected 'stalk' or 'pres'")
    return direct_sum(parts)


def complex_to_json(T: ProjComplex) -> dict:
    doc = {
        "components": {str(d): list(T.slots(d)) for d in T.degrees()},
        "summands": [l.display() for l in T.labels] if T.labels else None,
    }
    diffs = {}
    for d, mat in T.diffs.items():
        diffs[str(d)] = [
            [{repr(pc): int(c) for pc, c in entry.items()} for entry in row]
            for row in mat
        ]
    doc["differentials"] = diffs
    return doc


def tree_to_dot(tree: BrauerTree, edge_labels=None) -> str:
    """Graphviz source: circles for vertices, the exceptional one doubled,
    edges labeled by their summand (or their id)."""
    vmap = {v: i for i, v in enumerate(sorted(tree.vertices, key=repr))}
    lines = ["graph brauer_tree {", "  node [shape=circle, label=\"\"];"]
    for v in sorted(tree.vertices, key=repr):
        shape = "doublecircle" if v == tree.exceptional else "circle"
        lines.append(f"  v{vmap[v]} [shape={shape}];")
    for e in sorted(tree.edges, key=repr):
        a, b = tree.edges[e]
        label = str(edge_labels[e]) if edge_labels and e in edge_labels else str(e)
        lines.append(f'  v{vmap[a]} -- v{vmap[b]} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"

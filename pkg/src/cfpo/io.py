"""JSON reading and writing for orders, trees, decorations and groups."""

from __future__ import annotations

import json
from pathlib import Path

from .decoration import DecoratedPoset, Provenance
from .groups import Perm, PermGroup
from .order import ChainedTree, OrderError, Poset, build_poset


def poset_to_json(P: Poset, kind: str = "covers") -> dict:
    pairs = P.covers if kind == "covers" else P.lt
    return {
        "name": P.name,
        "elements": list(P.elements),
        "relation": {"kind": kind, "pairs": sorted([a, b] for a, b in pairs)},
    }


def tree_to_json(T: ChainedTree) -> dict:
    d = poset_to_json(T.base)
    d["root"] = T.root
    if T.chain is not None:
        d["chain"] = sorted(T.chain)
    return d


def decorated_to_json(D: DecoratedPoset) -> dict:
    d = poset_to_json(D.base)
    d["provenance"] = {e: D.provenance[e].as_dict() for e in D.elements}
    return d


def to_json(obj) -> dict:
    if isinstance(obj, DecoratedPoset):
        return decorated_to_json(obj)
    if isinstance(obj, ChainedTree):
        return tree_to_json(obj)
    if isinstance(obj, Poset):
        return poset_to_json(obj)
    if isinstance(obj, PermGroup):
        return group_to_json(obj)
    raise TypeError(f"no JSON form for {type(obj).__name__}")


def poset_from_json(d: dict) -> Poset:
    try:
        rel = d.get("relation", {"kind": "covers", "pairs": []})
        return build_poset(d["elements"], [tuple(p) for p in rel.get("pairs", [])],
                           kind=rel.get("kind", "covers"), name=d.get("name", ""))
    except (KeyError, TypeError) as exc:
        raise OrderError(f"malformed order JSON: {exc}") from exc


def from_json(d: dict):
    """A Poset, ChainedTree or DecoratedPoset, depending on which keys are present."""
    if not isinstance(d, dict):
        raise OrderError("order JSON must be an object")
    P = poset_from_json(d)
    if "provenance" in d:
        prov = {e: Provenance.from_dict(v) for e, v in d["provenance"].items()}
        if set(prov) != set(P.elements):
            raise OrderError("provenance does not cover exactly the elements")
        return DecoratedPoset(P, prov)
    if "root" in d:
        chain = frozenset(d["chain"]) if d.get("chain") is not None else None
        return ChainedTree(P, d["root"], chain)
    return P


def as_tree(obj, chained: bool) -> ChainedTree:
    """Accept a bare poset with a unique minimum as a tree."""
    if isinstance(obj, ChainedTree):
        if chained and obj.chain is None:
            raise OrderError("the between tree needs a 'chain'")
        return obj
    P = obj.base if isinstance(obj, DecoratedPoset) else obj
    if len(P) == 0:
        return ChainedTree(P, "", frozenset() if chained else None)
    mins = P.minimal()
    if len(mins) != 1:
        raise OrderError("a tree needs a single root")
    chain = None
    if chained:
        if len(P) != 1:
            raise OrderError("the between tree needs a 'chain'")
        chain = frozenset(P.elements)
    return ChainedTree(P, mins[0], chain)


def as_poset(obj) -> Poset:
    if isinstance(obj, DecoratedPoset):
        return obj.base
    if isinstance(obj, ChainedTree):
        return obj.base
    return obj


def group_to_json(G: PermGroup) -> dict:
    return {
        "domain": list(G.domain),
        "order": G.order,
        "generators": [g.as_dict(moved_only=True) for g in G.generators],
    }


def group_from_json(d: dict) -> PermGroup:
    domain = tuple(d["domain"])
    index = {x: i for i, x in enumerate(domain)}
    gens = [Perm.from_dict(domain, g, index) for g in d.get("generators", [])]
    G = PermGroup(domain, gens)
    if "order" in d and d["order"] != G.order:
        raise ValueError(f"declared order {d['order']} but generators give {G.order}")
    return G


def dumps(d) -> str:
    return json.dumps(d, indent=2, sort_keys=False) + "\n"


def read(path):
    with open(path) as fh:
        return from_json(json.load(fh))


def read_raw(path):
    with open(path) as fh:
        return json.load(fh)


def write(obj, path):
    text = dumps(to_json(obj) if not isinstance(obj, dict) else obj)
    Path(path).write_text(text)
    return text

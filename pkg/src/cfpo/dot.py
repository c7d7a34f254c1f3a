"""Graphviz DOT rendering of Hasse diagrams (deterministic output)."""

from __future__ import annotations

from .decoration import SKELETON, DecoratedPoset
from .order import ChainedTree, Poset


def _q(s):
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(obj, name: str = "") -> str:
    """Hasse diagram, bottom to top, one rank per height.

    Skeleton points are boxes, chain points diamonds, everything else ellipses.
    """
    shapes = {}
    if isinstance(obj, DecoratedPoset):
        P = obj.base
        for e in P.elements:
            p = obj.provenance[e]
            shapes[e] = "box" if p.kind == SKELETON else ("diamond" if p.on_chain else "ellipse")
    elif isinstance(obj, ChainedTree):
        P = obj.base
        chain = obj.chain or frozenset()
        for e in P.elements:
            shapes[e] = "diamond" if e in chain else "ellipse"
    elif isinstance(obj, Poset):
        P = obj
        shapes = {e: "ellipse" for e in P.elements}
    else:
        raise TypeError(f"cannot render {type(obj).__name__}")
    title = name or P.name or "poset"
    lines = [f"digraph {_q(title)} {{", "  rankdir=BT;"]
    ranks = {}
    for e in P.elements:
        ranks.setdefault(P.height(e), []).append(e)
    for h in sorted(ranks):
        members = " ".join(_q(e) + ";" for e in sorted(ranks[h]))
        lines.append(f"  {{ rank=same; {members} }}")
    for e in P.elements:
        lines.append(f"  {_q(e)} [shape={shapes[e]}];")
    for a, b in sorted(P.covers):
        lines.append(f"  {_q(a)} -> {_q(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"

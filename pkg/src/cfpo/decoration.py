"""Decorating a cycle-free skeleton with trees above and between its points."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .order import (
    ChainedTree,
    OrderError,
    Poset,
    build_poset,
    empty_poset,
    is_cfpo,
    validate_tree,
)

SKELETON = "skeleton"
ABOVE = "above"
BETWEEN = "between"


@dataclass(frozen=True)
class Provenance:
    """Where an element of a decorated poset came from.

    ``anchor`` is the skeleton point (the lower anchor for between-copies),
    ``anchor2`` the upper anchor, ``source`` the node of S or T copied.
    """

    kind: str
    anchor: str
    anchor2: Optional[str] = None
    source: Optional[str] = None
    on_chain: bool = False

    def as_dict(self):
        return {
            "kind": self.kind,
            "anchor": self.anchor,
            "anchor2": self.anchor2,
            "source": self.source,
            "onChain": self.on_chain,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(d["kind"], d["anchor"], d.get("anchor2"), d.get("source"), bool(d.get("onChain", False)))


def above_name(x, s):
    return f"{x}/{s}"


def between_name(x, y, t):
    return f"{x}..{y}/{t}"


@dataclass(frozen=True)
class DecoratedPoset:
    base: Poset
    provenance: dict

    @property
    def elements(self):
        return self.base.elements

    def __len__(self):
        return len(self.base)

    def of_kind(self, kind) -> tuple:
        return tuple(e for e in self.base.elements if self.provenance[e].kind == kind)

    @property
    def skeleton(self) -> tuple:
        return self.of_kind(SKELETON)

    def above_copy(self, x) -> tuple:
        return tuple(e for e in self.base.elements
                     if self.provenance[e].kind == ABOVE and self.provenance[e].anchor == x)

    def between_copy(self, x, y) -> tuple:
        return tuple(e for e in self.base.elements
                     if self.provenance[e].kind == BETWEEN
                     and (self.provenance[e].anchor, self.provenance[e].anchor2) == (x, y))

    def bundle(self, x) -> frozenset:
        """The copies hung at ``x``: S_x plus every T copy with ``x`` as an anchor."""
        out = set()
        for e in self.base.elements:
            p = self.provenance[e]
            if p.kind == ABOVE and p.anchor == x:
                out.add(e)
            elif p.kind == BETWEEN and x in (p.anchor, p.anchor2):
                out.add(e)
        return frozenset(out)


def _check_tree(t, label, need_chain):
    if t is None or len(t) == 0:
        return None
    ok, report = validate_tree(t)
    if not ok:
        raise OrderError(f"{label} is not a valid tree: {report}")
    if need_chain and t.chain is None:
        raise OrderError(f"{label} needs a distinguished chain")
    return t


def decorate(X: Poset, S: Optional[ChainedTree] = None, TL: Optional[ChainedTree] = None) -> DecoratedPoset:
    """Attach a copy of ``S`` above every point of ``X`` and glue a copy of
    ``TL`` between every adjacent pair of ``X`` along its chain.

    Either tree may be ``None`` (or empty), in which case nothing is attached.
    """
    ok, cycle = is_cfpo(X)
    if not ok:
        raise OrderError("skeleton is not cycle-free", witness=cycle)
    S = _check_tree(S, "S", need_chain=False)
    TL = _check_tree(TL, "(T, L)", need_chain=True)
    for x in X.elements:
        if "/" in x or ".." in x:
            raise OrderError(f"skeleton element {x!r} may not contain '/' or '..'")

    prov = {x: Provenance(SKELETON, x) for x in X.elements}
    pairs = list(X.covers)
    for x in X.elements:
        if S is None:
            break
        for s in S.elements:
            prov[above_name(x, s)] = Provenance(ABOVE, x, source=s)
        for a, b in S.base.covers:
            pairs.append((above_name(x, a), above_name(x, b)))
        pairs.append((x, above_name(x, S.root)))
    if TL is not None:
        for x, y in sorted(X.covers):
            for t in TL.elements:
                prov[between_name(x, y, t)] = Provenance(BETWEEN, x, y, t, t in TL.chain)
            for a, b in TL.base.covers:
                pairs.append((between_name(x, y, a), between_name(x, y, b)))
            for t in TL.chain:
                pairs.append((x, between_name(x, y, t)))
                pairs.append((between_name(x, y, t), y))
    base = build_poset(prov.keys(), pairs, kind="covers")
    return DecoratedPoset(base, prov)


def plain(P: Poset) -> DecoratedPoset:
    """Treat an undecorated poset as its own skeleton."""
    return DecoratedPoset(P, {x: Provenance(SKELETON, x) for x in P.elements})


def skeleton_of(D: DecoratedPoset) -> Poset:
    return D.base.induced(D.skeleton)


def join(P: Poset, a, b):
    """Least upper bound of ``a`` and ``b`` in ``P``, or None."""
    ups = [u for u in P.elements if P.leq(a, u) and P.leq(b, u)]
    least = [u for u in ups if all(P.leq(u, v) for v in ups)]
    return least[0] if least else None


def is_join_rich(X: Poset):
    """Return ``(ok, non_joins)``: is every element a join of two incomparable elements?"""
    joins = set()
    elems = X.elements
    for i, a in enumerate(elems):
        for b in elems[i + 1:]:
            if not X.comparable(a, b):
                j = join(X, a, b)
                if j is not None:
                    joins.add(j)
    non_joins = [x for x in elems if x not in joins]
    return (len(elems) > 0 and not non_joins), non_joins


def empty_decorated() -> DecoratedPoset:
    return DecoratedPoset(empty_poset(), {})

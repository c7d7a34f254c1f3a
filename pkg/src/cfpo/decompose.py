"""Splitting a cycle-free order into skeleton, above-trees and between-trees.

Given a candidate skeleton ``A`` inside ``M``, every class of ``M \\ A`` (points
joined by paths avoiding ``A``) is either hung on a single point of ``A`` or
sits between an adjacent pair of ``A``.  When the bundles look the same at
every point and every pair, ``M`` is rebuilt as a decoration of ``M|A``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .decoration import ABOVE, BETWEEN, DecoratedPoset, decorate
from .groups import (
    MAX_GROUP_ORDER,
    MAX_SUBGROUP_ORDER,
    GroupTooLarge,
    automorphism_group,
    find_isomorphism,
    group_isomorphic,
    orbits,
    orbits_report,
)
from .order import (
    ChainedTree,
    OrderError,
    Poset,
    _path,
    _require_cfpo,
    boundary,
    components,
    components_mod,
    validate_tree,
)

ATTACHED = "attached"
BETWEEN_PAIR = "between"
VIOLATION = "violation"


class DecompositionError(ValueError):
    pass


@dataclass(frozen=True)
class Verdict:
    C: frozenset
    kind: str
    anchors: tuple = ()
    reason: str = ""

    def as_dict(self):
        return {"C": sorted(self.C), "verdict": self.kind, "anchors": list(self.anchors), "reason": self.reason}


def _residual_gates(M: Poset, C: frozenset, comp: frozenset):
    """Classes of comp \\ C cut by C, each with the point touching C."""
    rest = components_mod(M.induced(comp), C)
    out = []
    for R in rest:
        touch = sorted({w for c in C for w in M.neighbors(c) if w in R})
        out.append((R, touch))
    return out


def classify_components(M: Poset, A) -> list:
    """One verdict per class of ``M \\ A``."""
    _require_cfpo(M)
    A = frozenset(A)
    if not A:
        raise ValueError("A must be nonempty")
    if not A <= set(M.elements):
        raise OrderError(f"unknown elements in A: {sorted(A - set(M.elements))}")
    X = M.induced(A)
    comps = components(M)
    out = []
    for C in sorted(components_mod(M, A), key=lambda s: sorted(s)):
        gate = boundary(M, C)
        if gate:
            (a,) = sorted(gate)[:1]
            if len(gate) == 1 and a in A:
                out.append(Verdict(C, ATTACHED, (a,)))
            else:
                out.append(Verdict(C, VIOLATION, tuple(sorted(gate)), "gate not in A"))
            continue
        comp = next(k for k in comps if C <= k)
        res = _residual_gates(M, C, comp)
        if len(res) != 2:
            out.append(Verdict(C, VIOLATION, (), f"{len(res)} residual classes"))
            continue
        points = [t[0] if len(t) == 1 else None for _, t in res]
        if None in points or not all(p in A for p in points):
            out.append(Verdict(C, VIOLATION, (), "gate not in A"))
            continue
        a, b = points
        if X.less(b, a):
            a, b = b, a
        if (a, b) not in X.covers:
            out.append(Verdict(C, VIOLATION, (a, b), "gates not adjacent"))
            continue
        out.append(Verdict(C, BETWEEN_PAIR, (a, b)))
    return out


@dataclass
class Decomposition:
    X: Poset
    S: Optional[ChainedTree]
    TL: Optional[ChainedTree]
    verdicts: list
    witness: dict
    rebuilt: DecoratedPoset
    aut_order_M: Optional[int] = None
    aut_order_dec: Optional[int] = None
    abstract_iso: Optional[bool] = None
    equivariant: Optional[bool] = None
    transitive_on_A: Optional[bool] = None
    transitive_on_A_ap: Optional[bool] = None
    notes: list = field(default_factory=list)

    def report(self) -> dict:
        return {
            "verdicts": [v.as_dict() for v in self.verdicts],
            "skeleton": sorted(self.X.elements),
            "S": None if self.S is None else sorted(self.S.elements),
            "T": None if self.TL is None else sorted(self.TL.elements),
            "L": None if self.TL is None else sorted(self.TL.chain),
            "autOrderM": self.aut_order_M,
            "autOrderDec": self.aut_order_dec,
            "abstractIso": self.abstract_iso,
            "equivariant": self.equivariant,
            "transitiveOnA": self.transitive_on_A,
            "transitiveOnAap": self.transitive_on_A_ap,
            "notes": list(self.notes),
        }


def _rooted_above(M: Poset, C, a) -> bool:
    mins = [c for c in C if not any(M.less(d, c) for d in C)]
    return len(mins) == 1 and all(M.less(a, c) for c in C)


def _same_shape(ref: ChainedTree, other: ChainedTree):
    preds_r = {"L": ref.chain} if ref.chain is not None else None
    preds_o = {"L": other.chain} if other.chain is not None else None
    return find_isomorphism(ref.base, other.base, predicates_p=preds_r, predicates_q=preds_o)


def decompose(M: Poset, A, check_groups: bool = True, max_order: int = MAX_GROUP_ORDER) -> Decomposition:
    """Rebuild ``M`` as Dec(M|A, S, (T, L)); raises DecompositionError when it is not one."""
    A = frozenset(A)
    verdicts = classify_components(M, A)
    bad = [v for v in verdicts if v.kind == VIOLATION]
    if bad:
        raise DecompositionError("; ".join(f"{sorted(v.C)}: {v.reason}" for v in bad))
    X = M.induced(sorted(A), name=M.name)

    attached = {}
    for v in verdicts:
        if v.kind == ATTACHED:
            attached.setdefault(v.anchors[0], []).append(v.C)
    between = {}
    for v in verdicts:
        if v.kind == BETWEEN_PAIR:
            if v.anchors in between:
                raise DecompositionError(f"two between classes for the pair {v.anchors}")
            between[v.anchors] = v.C

    # above bundles: one rooted tree over every skeleton point, or none anywhere
    S = None
    trees = {}
    if attached:
        for a in X.elements:
            cls = attached.get(a, [])
            if len(cls) != 1:
                raise DecompositionError(f"A not homogeneous: {len(cls)} attached classes at {a!r}")
            C = cls[0]
            if not _rooted_above(M, C, a):
                raise DecompositionError(f"attached class at {a!r} is not a rooted tree above it")
            base = M.induced(sorted(C))
            trees[a] = ChainedTree(base, base.minimal()[0])
            ok, why = validate_tree(trees[a])
            if not ok:
                raise DecompositionError(f"attached class at {a!r}: {why}")
        ref = X.elements[0]
        S = trees[ref]
    isos = {}
    for a, t in trees.items():
        iso = _same_shape(S, t)
        if iso is None:
            raise DecompositionError(f"A not homogeneous: bundles at {ref!r} and {a!r} differ")
        isos[a] = iso

    TL = None
    ttrees = {}
    if between:
        pairs = sorted(X.covers)
        for pair in pairs:
            if pair not in between:
                raise DecompositionError(f"A not homogeneous: no between class at {pair}")
            C = between[pair]
            chain = frozenset(_path(M, pair[0], pair[1]).nodes[1:-1])
            if not chain <= C:
                raise DecompositionError(f"path between {pair} leaves its between class")
            base = M.induced(sorted(C))
            mins = base.minimal()
            if len(mins) != 1:
                raise DecompositionError(f"between class at {pair} has no root")
            ttrees[pair] = ChainedTree(base, mins[0], chain)
            ok, why = validate_tree(ttrees[pair])
            if not ok:
                raise DecompositionError(f"between class at {pair}: {why}")
        ref_pair = pairs[0]
        TL = ttrees[ref_pair]
    tisos = {}
    for pair, t in ttrees.items():
        iso = _same_shape(TL, t)
        if iso is None:
            raise DecompositionError(f"A not homogeneous: bundles at {ref_pair} and {pair} differ")
        tisos[pair] = iso

    D = decorate(X, S, TL)
    witness = {}
    for e in D.elements:
        p = D.provenance[e]
        if p.kind == ABOVE:
            witness[e] = isos[p.anchor][p.source]
        elif p.kind == BETWEEN:
            witness[e] = tisos[(p.anchor, p.anchor2)][p.source]
        else:
            witness[e] = e
    if sorted(witness.values()) != sorted(M.elements):
        raise DecompositionError("rebuilt decoration does not cover M")
    for u in D.elements:
        for v in D.elements:
            if D.base.less(u, v) != M.less(witness[u], witness[v]):
                raise DecompositionError(f"rebuilt order disagrees with M at ({u}, {v})")

    out = Decomposition(X, S, TL, verdicts, witness, D)
    if check_groups:
        _compare_groups(out, M, A, max_order)
    return out


def _compare_groups(out: Decomposition, M: Poset, A, max_order):
    try:
        GM = automorphism_group(M, max_order=max_order)
        GD = automorphism_group(out.rebuilt.base, max_order=max_order)
    except GroupTooLarge as exc:
        out.notes.append(f"group comparison skipped: {exc}")
        return
    out.aut_order_M, out.aut_order_dec = GM.order, GD.order
    if GM.order <= MAX_SUBGROUP_ORDER:
        out.abstract_iso = group_isomorphic(GD, GM) is not None
    else:
        out.abstract_iso = None
        out.notes.append("abstract isomorphism not checked (order above subgroup bound)")
    # transport Aut(Dec) along the witness and compare with Aut(M) as permutation groups
    f = out.witness
    finv = {v: k for k, v in f.items()}
    moved = set()
    for g in GD.elements:
        moved.add(tuple(GM.index[f[g(finv[x])]] for x in GM.domain))
    out.equivariant = moved == set(GM.element_tuples)
    rep = orbits_report(GM, A, poset=M)
    out.transitive_on_A = rep.transitive_on_A
    out.transitive_on_A_ap = rep.transitive_on_A_ap
    if not rep.transitive_on_A:
        out.notes.append("A is not a single Aut(M)-orbit (advisory)")


def suggest_candidates(M: Poset, max_orbits: int = 12) -> list:
    """Unions of Aut(M)-orbits that decompose cleanly, smallest first."""
    orbs = orbits(automorphism_group(M))
    if len(orbs) > max_orbits:
        orbs = orbs[:max_orbits]
    found = []
    for mask in range(1, 1 << len(orbs)):
        A = frozenset().union(*(o for i, o in enumerate(orbs) if (mask >> i) & 1))
        try:
            decompose(M, A, check_groups=False)
        except (DecompositionError, OrderError):
            continue
        found.append(A)
    return sorted(found, key=lambda s: (len(s), sorted(s)))

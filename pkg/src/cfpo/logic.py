"""Brute-force model checking of group formulas over Aut(Dec) acting on Dec.

Tuples of group elements only ever enter the primitive predicates through
their supports, so tuple variables that never occur in an equation are
quantified over one representative per support.  The primitives are
semantic oracles:

* the gate of a support is the union of cover-graph paths between its
  points, minus the support, when that is a single point;
* Indec: nonempty support with a gate;
* Disj / Sqsubset: disjoint / strictly included supports;
* SamePD: equal gates, or one gate in the skeleton and the other in its bundle;
* rep-pairs: disjoint tuples with the same gate, that gate in the skeleton.

Everything else (MeetsX, RepPointDec, FunctionPart, the witnesses and the
second order definitions) is evaluated from its formula.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from .decoration import DecoratedPoset, skeleton_of
from .formula import (
    ELEM,
    SUBGROUP,
    TUPLE,
    And,
    Atom,
    Eq,
    Implies,
    Not,
    Or,
    Quant,
    Truth,
    Var,
    free_vars,
    in_equation,
    named,
    simplify,
)
from .groups import (
    MAX_SUBGROUP_ORDER,
    GroupTooLarge,
    Perm,
    PermGroup,
    _table,
    automorphism_group,
    find_isomorphism,
    group_isomorphic,
    stabilizer,
    subgroup_masks,
)
from .order import Poset, _path

DEFAULT_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    def __init__(self, var, size, budget):
        super().__init__(f"quantifier over {var!r} needs {size} assignments (budget {budget})")
        self.var = var
        self.size = size
        self.budget = budget


class FormulaError(ValueError):
    pass


def _bits(mask):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _popcount(m):
    return bin(m).count("1")


@dataclass(frozen=True)
class Supp:
    """A tuple known only through its support (enough for support-only contexts)."""
    mask: int


@dataclass(frozen=True)
class PermTuple:
    perms: tuple

    @property
    def supp(self) -> frozenset:
        out = set()
        for p in self.perms:
            out |= p.support()
        return frozenset(out)

    def __len__(self):
        return len(self.perms)


class ActionStructure:
    """A group of automorphisms acting on a decorated order.

    The skeleton is held for the semantic oracles and for verification.
    """

    def __init__(self, D: DecoratedPoset, G: Optional[PermGroup] = None, arity: int = 2,
                 budget: int = DEFAULT_BUDGET, max_subgroup_order: int = MAX_SUBGROUP_ORDER):
        self.D = D
        self.G = G if G is not None else automorphism_group(D.base)
        if tuple(self.G.domain) != tuple(D.elements):
            raise ValueError("group domain differs from the decorated poset")
        self.arity = arity
        self.budget = budget
        self.max_subgroup_order = max_subgroup_order
        self.n = len(D)
        self.names = D.elements
        self.eidx = {x: i for i, x in enumerate(self.names)}
        self.els = self.G.element_tuples
        self.pos = {e: k for k, e in enumerate(self.els)}
        self.identity = self.pos[tuple(range(self.n))]
        self.supp_el = [sum(1 << i for i, j in enumerate(e) if i != j) for e in self.els]
        self.nbrs = [sum(1 << self.eidx[y] for y in D.base.neighbors(x)) for x in self.names]
        self.X_mask = sum(1 << self.eidx[x] for x in D.skeleton)
        self.bundle = {}
        for x in D.skeleton:
            self.bundle[self.eidx[x]] = sum(1 << self.eidx[e] for e in D.bundle(x))
        self._gate = {}
        self._img = {}
        self._conj = {}
        self._reps = None
        self._subs = None
        self._fp_mask = None
        self.memo = {}
        self._macros = {}

    # --- group plumbing --------------------------------------------------------
    def index_of(self, p) -> int:
        imgs = p.images if isinstance(p, Perm) else tuple(p)
        if imgs not in self.pos:
            raise ValueError("permutation is not in the group")
        return self.pos[imgs]

    def perm(self, k) -> Perm:
        return self.G._perm(self.els[k])

    def conj(self, phi: int, k: int) -> int:
        """Index of ``phi k phi^-1``."""
        key = (phi, k)
        out = self._conj.get(key)
        if out is None:
            p, g = self.els[phi], self.els[k]
            inv = [0] * self.n
            for i, j in enumerate(p):
                inv[j] = i
            out = self.pos[tuple(p[g[inv[i]]] for i in range(self.n))]
            self._conj[key] = out
        return out

    def apply_mask(self, phi: int, mask: int) -> int:
        key = (phi, mask)
        out = self._img.get(key)
        if out is None:
            p = self.els[phi]
            out = 0
            for i in _bits(mask):
                out |= 1 << p[i]
            self._img[key] = out
        return out

    def tmask(self, val) -> int:
        if isinstance(val, Supp):
            return val.mask
        m = 0
        for k in val:
            m |= self.supp_el[k]
        return m

    def as_indices(self, t) -> tuple:
        if isinstance(t, PermTuple):
            t = t.perms
        return tuple(self.index_of(p) for p in t)

    def support_reps(self) -> dict:
        """``{support mask: a tuple of arity <= self.arity with that support}``."""
        if self._reps is None:
            single = {}
            for k, m in enumerate(self.supp_el):
                single.setdefault(m, k)
            reps = {m: (k,) for m, k in single.items()}
            for _ in range(self.arity - 1):
                new = dict(reps)
                for m, t in reps.items():
                    for m1, k in single.items():
                        new.setdefault(m | m1, t + (k,))
                reps = new
            self._reps = dict(sorted(reps.items(), key=lambda kv: (_popcount(kv[0]), kv[0])))
        return self._reps

    def subgroups(self) -> list:
        """Nontrivial subgroups of G as bitmasks over the element indices."""
        if self._subs is None:
            try:
                masks = subgroup_masks(self.G, self.max_subgroup_order)
            except GroupTooLarge as exc:
                raise BudgetExceeded("subgroup", self.G.order, self.max_subgroup_order) from exc
            self._subs = [m for m in masks if m != 1 << self.identity]
        return self._subs

    def conj_sub(self, phi: int, mask: int) -> int:
        out = 0
        for k in _bits(mask):
            out |= 1 << self.conj(phi, k)
        return out

    def group_of(self, mask: int) -> PermGroup:
        return PermGroup(self.G.domain, elements=[self.els[k] for k in _bits(mask)], max_order=self.G.max_order)

    # --- semantic oracles ---------------------------------------------------------
    def steiner(self, mask: int) -> int:
        """Union of cover-graph paths between points of ``mask``."""
        if mask == 0:
            return 0
        comp = mask
        frontier = mask
        while frontier:
            grow = 0
            for i in _bits(frontier):
                grow |= self.nbrs[i]
            frontier = grow & ~comp
            comp |= grow
        alive = comp
        while True:
            drop = 0
            for i in _bits(alive & ~mask):
                if _popcount(self.nbrs[i] & alive) <= 1:
                    drop |= 1 << i
            if not drop:
                return alive
            alive &= ~drop

    def gate(self, mask: int) -> Optional[int]:
        if mask in self._gate:
            return self._gate[mask]
        out = None
        if mask:
            rest = self.steiner(mask) & ~mask
            if rest and rest & (rest - 1) == 0:
                out = rest.bit_length() - 1
        self._gate[mask] = out
        return out

    def indec(self, m) -> bool:
        return m != 0 and self.gate(m) is not None

    def same_pd(self, m1, m2) -> bool:
        g1, g2 = self.gate(m1), self.gate(m2)
        if m1 == 0 or m2 == 0 or g1 is None or g2 is None:
            return False
        if g1 == g2:
            return True
        if g1 in self.bundle and (self.bundle[g1] >> g2) & 1:
            return True
        return g2 in self.bundle and bool((self.bundle[g2] >> g1) & 1)

    def rep_gate(self, m0, m1) -> Optional[int]:
        """Skeleton point represented by a rep-pair, else None."""
        if m0 & m1 or not m0 or not m1:
            return None
        g0, g1 = self.gate(m0), self.gate(m1)
        if g0 is None or g0 != g1 or not (self.X_mask >> g0) & 1:
            return None
        return g0

    def equiv_rep(self, f0, f1, g0, g1) -> bool:
        a = self.rep_gate(f0, f1)
        return a is not None and a == self.rep_gate(g0, g1)

    def related(self, f0, f1, g0, g1) -> bool:
        a, b = self.rep_gate(f0, f1), self.rep_gate(g0, g1)
        if a is None or b is None or a == b:
            return False
        return self.D.base.comparable(self.names[a], self.names[b])

    def path_between(self, h0, h1, f0, f1, g0, g1) -> bool:
        h, a, b = self.rep_gate(h0, h1), self.rep_gate(f0, f1), self.rep_gate(g0, g1)
        if None in (h, a, b):
            return False
        p = _path(self.D.base, self.names[a], self.names[b])
        return p is not None and self.names[h] in p.nodes[1:-1]

    def fixed_skeleton(self, k) -> int:
        e = self.els[k]
        return sum(1 << i for i in _bits(self.X_mask) if e[i] == i)

    # --- evaluation ----------------------------------------------------------------
    def macro(self, name):
        if name not in self._macros:
            params, body = named(name)
            body = simplify(body)
            quot = frozenset(p for p, s in params if s == TUPLE and not in_equation(body, p))
            self._macros[name] = (params, body, quot)
        return self._macros[name]

    def fp_mask(self) -> int:
        if self._fp_mask is None:
            m = 0
            for k in range(len(self.els)):
                if self.evaluate(Atom("FunctionPart", (Var("phi"),)), {"phi": k}):
                    m |= 1 << k
            self._fp_mask = m
        return self._fp_mask

    def evaluate(self, F, env=None) -> bool:
        F = simplify(F)
        env = dict(env or {})
        missing = free_vars(F) - set(env)
        if missing:
            raise FormulaError(f"free variables without values: {sorted(missing)}")
        return _Evaluator(self).ev(F, env)


_ORACLES = {
    "Indec": (1, lambda A, m: A.indec(m[0])),
    "Disj": (2, lambda A, m: m[0] & m[1] == 0),
    "Sqsubset": (2, lambda A, m: m[0] != m[1] and m[0] & ~m[1] == 0),
    "SamePD": (2, lambda A, m: A.same_pd(m[0], m[1])),
    "EquivRepPointDec": (4, lambda A, m: A.equiv_rep(*m)),
    "RelatedDec": (4, lambda A, m: A.related(*m)),
    "PathBetweenDec": (6, lambda A, m: A.path_between(*m)),
}

# atoms whose arguments are (elem, tuple, tuple[, tuple, tuple])
_MIXED = {"FixesExactly": 3, "FixesExactlyPair": 5}

_SECOND_ORDER = {"SubEq": 2, "SubLeq": 2, "SubLt": 2, "Prod": 3, "Normalizes": 2,
                 "ConjLeq": 3, "Mem": 2, "ProperFP": 1}


class _Evaluator:
    def __init__(self, A: ActionStructure):
        self.A = A

    def term(self, t, env):
        if isinstance(t, Var):
            return env[t.name]
        val = self.term(t.term, env)
        phi = env[t.by.name]
        if isinstance(val, Supp):
            return Supp(self.A.apply_mask(phi, val.mask))
        if isinstance(val, tuple):
            return tuple(self.A.conj(phi, k) for k in val)
        return self.A.conj(phi, val)

    def mask(self, t, env):
        if isinstance(t, Var):
            return self.A.tmask(env[t.name])
        return self.A.apply_mask(env[t.by.name], self.mask(t.term, env))

    def ev(self, F, env) -> bool:
        if isinstance(F, Truth):
            return F.value
        if isinstance(F, Atom):
            return self.atom(F, env)
        if isinstance(F, Eq):
            a, b = self.term(F.left, env), self.term(F.right, env)
            if isinstance(a, Supp) or isinstance(b, Supp):
                raise FormulaError("equation on a tuple known only by its support")
            return a == b
        if isinstance(F, Not):
            return not self.ev(F.body, env)
        if isinstance(F, And):
            return all(self.ev(p, env) for p in F.parts)
        if isinstance(F, Or):
            return any(self.ev(p, env) for p in F.parts)
        if isinstance(F, Implies):
            return (not self.ev(F.left, env)) or self.ev(F.right, env)
        if isinstance(F, Quant):
            return self.block(F, env)
        raise FormulaError(f"not a formula: {F!r}")

    def atom(self, F: Atom, env) -> bool:
        A = self.A
        name, args = F.name, F.args
        if name in _ORACLES:
            n, fn = _ORACLES[name]
            if len(args) != n:
                raise FormulaError(f"{name} takes {n} arguments")
            return fn(A, [self.mask(a, env) for a in args])
        if name in _MIXED:
            if len(args) != _MIXED[name]:
                raise FormulaError(f"{name} takes {_MIXED[name]} arguments")
            phi = self.term(args[0], env)
            ms = [self.mask(a, env) for a in args[1:]]
            fixed = A.fixed_skeleton(phi)
            want = 0
            for i in range(0, len(ms), 2):
                g = A.rep_gate(ms[i], ms[i + 1])
                if g is None:
                    return False
                want |= 1 << g
            return fixed == want
        if name in _SECOND_ORDER:
            if len(args) != _SECOND_ORDER[name]:
                raise FormulaError(f"{name} takes {_SECOND_ORDER[name]} arguments")
            vals = [self.term(a, env) for a in args]
            return self.second_order(name, vals)
        return self.call_macro(name, args, env)

    def second_order(self, name, vals) -> bool:
        A = self.A
        if name == "SubEq":
            return vals[0] == vals[1]
        if name == "SubLeq":
            return vals[0] & ~vals[1] == 0
        if name == "SubLt":
            return vals[0] != vals[1] and vals[0] & ~vals[1] == 0
        if name == "Prod":
            b, c, a = vals
            if b & ~a or c & ~a:
                return False
            return _popcount(b) * _popcount(c) == _popcount(a) * _popcount(b & c)
        if name == "Normalizes":
            return A.conj_sub(vals[0], vals[1]) == vals[1]
        if name == "ConjLeq":
            return A.conj_sub(vals[0], vals[1]) & ~vals[2] == 0
        if name == "Mem":
            return bool((vals[1] >> vals[0]) & 1)
        if name == "ProperFP":
            fp = A.fp_mask()
            return vals[0] != fp and vals[0] & ~fp == 0
        raise FormulaError(name)

    def call_macro(self, name, args, env) -> bool:
        A = self.A
        try:
            params, body, quot = A.macro(name)
        except KeyError:
            raise FormulaError(f"unknown predicate {name!r}") from None
        if len(args) != len(params):
            raise FormulaError(f"{name} takes {len(params)} arguments")
        inner = {}
        key = [name]
        for (p, sort), a in zip(params, args):
            if sort == TUPLE and p in quot:
                m = self.mask(a, env)
                inner[p] = Supp(m)
                key.append(("s", m))
            else:
                val = self.term(a, env)
                inner[p] = val
                key.append(val)
        key = tuple(key)
        if key not in A.memo:
            A.memo[key] = self.ev(body, inner)
        return A.memo[key]

    def domain(self, name, sort, body):
        A = self.A
        if sort == TUPLE:
            if not in_equation(body, name):
                return [Supp(m) for m in A.support_reps()], len(A.support_reps())
            size = len(A.els) ** A.arity
            return itertools.product(range(len(A.els)), repeat=A.arity), size
        if sort == ELEM:
            order = [A.identity] + [k for k in range(len(A.els)) if k != A.identity]
            return order, len(order)
        if sort == SUBGROUP:
            subs = A.subgroups()
            return subs, len(subs)
        raise FormulaError(f"unknown sort {sort!r}")

    def block(self, F: Quant, env) -> bool:
        A = self.A
        names = [n for n, _ in F.vars]
        doms = []
        total = 1
        for n, s in F.vars:
            dom, size = self.domain(n, s, F.body)
            total *= size
            if total > A.budget:
                raise BudgetExceeded(n, total, A.budget)
            doms.append(list(dom))
        forall = F.kind == "forall"
        body = F.body
        if forall and isinstance(body, Implies):
            guards, goal = _parts(body.left), body.right
        elif forall:
            guards, goal = [], body
        else:
            guards, goal = _parts(body), None
        pos = {n: i for i, n in enumerate(names)}
        sched = [[] for _ in names]
        early = []
        for g in guards:
            mine = [pos[v] for v in free_vars(g) if v in pos]
            (sched[max(mine)] if mine else early).append(g)
        env = dict(env)
        if not all(self.ev(g, env) for g in early):
            return forall
        m = len(names)

        def rec(i):
            if i == m:
                return self.ev(goal, env) if forall else True
            for val in doms[i]:
                env[names[i]] = val
                if all(self.ev(g, env) for g in sched[i]):
                    r = rec(i + 1)
                    if forall and not r:
                        return False
                    if not forall and r:
                        return True
            return forall

        return rec(0)


def _parts(F):
    return list(F.parts) if isinstance(F, And) else [F]


# --- public operations -------------------------------------------------------------

def _masks(AS, *tuples):
    return [AS.tmask(AS.as_indices(t)) for t in tuples]


def indec_pd(AS: ActionStructure, t) -> Optional[str]:
    (m,) = _masks(AS, t)
    g = AS.gate(m) if m else None
    return None if g is None else AS.names[g]


def primitive_preds(AS: ActionStructure, t0, t1) -> dict:
    m0, m1 = _masks(AS, t0, t1)
    return {
        "disj": m0 & m1 == 0,
        "sqsubset": m0 != m1 and m0 & ~m1 == 0,
        "same_pd": AS.same_pd(m0, m1),
    }


def eval_formula(AS: ActionStructure, F, env=None) -> bool:
    """Truth value of ``F``; tuple values in ``env`` may be Perm sequences."""
    conv = {}
    for k, val in (env or {}).items():
        if isinstance(val, Perm):
            conv[k] = AS.index_of(val)
        elif isinstance(val, (PermTuple, list)) or (isinstance(val, tuple) and val and isinstance(val[0], Perm)):
            conv[k] = AS.as_indices(val)
        else:
            conv[k] = val
    return AS.evaluate(F, conv)


def _call(AS, name, *vals):
    names = [f"_a{i}" for i in range(len(vals))]
    env = dict(zip(names, vals))
    return AS.evaluate(Atom(name, tuple(Var(n) for n in names)), env)


def meets_x(AS: ActionStructure, t) -> bool:
    return _call(AS, "MeetsX", AS.as_indices(t))


def rep_point(AS: ActionStructure, t0, t1) -> Optional[str]:
    a, b = AS.as_indices(t0), AS.as_indices(t1)
    if not _call(AS, "RepPointDec", a, b):
        return None
    g = AS.gate(AS.tmask(a))
    return AS.names[g]


def rep_pairs(AS: ActionStructure) -> list:
    """Pairs of support classes satisfying RepPointDec (from the formula)."""
    reps = list(AS.support_reps())
    out = []
    for m0 in reps:
        for m1 in reps:
            if _call(AS, "RepPointDec", Supp(m0), Supp(m1)):
                out.append((m0, m1))
    return out


@dataclass
class ExtractedSkeleton:
    points: tuple
    poset: Poset
    betweenness: frozenset
    rep_pairs: dict
    n_rep_pairs: int
    isomorphic: bool
    betweenness_matches: bool
    skeleton_size: int

    def as_dict(self):
        return {
            "points": list(self.points),
            "covers": sorted(list(p) for p in self.poset.covers),
            "betweenness": sorted(list(t) for t in self.betweenness),
            "repPairs": self.n_rep_pairs,
            "isomorphicToSkeleton": self.isomorphic,
            "betweennessMatches": self.betweenness_matches,
            "skeletonSize": self.skeleton_size,
        }


def path_betweenness(P: Poset, points) -> frozenset:
    """Triples (y, x, z) of ``points`` with y on the path from x to z."""
    out = set()
    for x in points:
        for z in points:
            p = _path(P, x, z)
            if p is None:
                continue
            for y in points:
                if y in p.nodes:
                    out.add((y, x, z))
    return frozenset(out)


def extract_skeleton(AS: ActionStructure) -> ExtractedSkeleton:
    """Points = rep-pairs up to EquivRepPointDec; betweenness from paths."""
    pairs = rep_pairs(AS)
    if not pairs:
        raise ValueError("no rep-pairs: the group does not represent any point")
    classes = {}
    for m0, m1 in pairs:
        rep = next((k for k in classes if AS.equiv_rep(m0, m1, *classes[k])), None)
        if rep is None:
            classes[AS.names[AS.rep_gate(m0, m1)]] = (m0, m1)
    points = tuple(sorted(classes))
    P = AS.D.base.induced(points, name="extracted")
    B = path_betweenness(AS.D.base, points)
    X = skeleton_of(AS.D)
    iso = find_isomorphism(P, X)
    match = False
    if iso is not None:
        moved = {(iso[y], iso[x], iso[z]) for y, x, z in B}
        match = moved == path_betweenness(X, X.elements)
    return ExtractedSkeleton(points, P, B, classes, len(pairs), iso is not None, match, len(X))


def function_part(AS: ActionStructure) -> PermGroup:
    """Elements satisfying the FunctionPart formula."""
    return AS.group_of(AS.fp_mask())


def pointwise_skeleton_stabilizer(AS: ActionStructure) -> PermGroup:
    return stabilizer(AS.G, AS.D.skeleton, mode="pointwise")


def _witness_indices(AS: ActionStructure, f, g=None) -> list:
    X = skeleton_of(AS.D)
    if f not in X:
        raise ValueError(f"{f!r} is not a skeleton point")
    want = 1 << AS.eidx[f]
    if g is not None:
        if g not in X:
            raise ValueError(f"{g!r} is not a skeleton point")
        if (f, g) not in X.covers and (g, f) not in X.covers:
            raise ValueError(f"({f}, {g}) is not an adjacent pair")
        want |= 1 << AS.eidx[g]
    return [k for k in range(len(AS.els)) if AS.fixed_skeleton(k) == want]


def witnesses(AS: ActionStructure, f, g=None) -> list:
    """Elements whose fixed points in the skeleton are exactly {f} (or {f, g})."""
    return [AS.perm(k) for k in _witness_indices(AS, f, g)]


@dataclass
class SubgroupClassification:
    mode: str
    anchors: tuple
    groups: list
    function_part_order: int
    n_subgroups: int
    n_witnesses: int
    counts: dict = field(default_factory=dict)
    diagnostic: str = ""

    def as_dict(self):
        return {
            "mode": self.mode,
            "anchors": list(self.anchors),
            "orders": [G.order for G in self.groups],
            "functionPartOrder": self.function_part_order,
            "subgroups": self.n_subgroups,
            "witnesses": self.n_witnesses,
            "counts": dict(self.counts),
            "diagnostic": self.diagnostic,
        }


class _Classifier:
    """The second order definitions evaluated directly on subgroup bitmasks."""

    def __init__(self, AS: ActionStructure):
        self.AS = AS
        self.fp = AS.fp_mask()
        if self.fp == (1 << len(AS.els)) - 1:
            self.subs = list(AS.subgroups())
        else:
            self.subs = self._local_subgroups()
        self.size = {m: _popcount(m) for m in self.subs}
        self._conj_class = {}
        self._between = {}

    def _local_subgroups(self):
        AS = self.AS
        fp_group = AS.group_of(self.fp)
        try:
            local = subgroup_masks(fp_group, AS.max_subgroup_order)
        except GroupTooLarge as exc:
            raise BudgetExceeded("subgroup", fp_group.order, AS.max_subgroup_order) from exc
        ft = _table(fp_group)
        to_g = [AS.pos[e] for e in ft.els]
        out = []
        for m in local:
            gm = 0
            for i in _bits(m):
                gm |= 1 << to_g[i]
            if gm != 1 << AS.identity:
                out.append(gm)
        return out

    def conj_class(self, m):
        out = self._conj_class.get(m)
        if out is None:
            out = frozenset(self.AS.conj_sub(phi, m) for phi in range(len(self.AS.els)))
            self._conj_class[m] = out
        return out

    def temp1(self, wit):
        subs = [m for m in self.subs if m != self.fp]
        return [m for m in subs if all(self.AS.conj_sub(phi, m) == m for phi in wit)]

    def temp2(self, t1):
        out = []
        for a in t1:
            inside = [b for b in t1 if b != a and b & ~a == 0]
            na = self.size[a]
            split = False
            for i, b in enumerate(inside):
                for c in inside[i:]:
                    if self.size[b] * self.size[c] == na * _popcount(b & c):
                        split = True
                        break
                if split:
                    break
            if not split:
                out.append(a)
        return out

    def temp3(self, t2):
        out = []
        for a in t2:
            ok = True
            for b in t2:
                if b != a and any(c & ~a == 0 for c in self.conj_class(b)):
                    ok = False
                    break
            if ok:
                out.append(a)
        return out

    def between(self, f, g):
        key = (f, g)
        if key not in self._between:
            wit = _witness_indices(self.AS, f, g)
            if not wit:
                self._between[key] = (wit, {}, [])
            else:
                t1 = self.temp1(wit)
                t2 = self.temp2(t1)
                t3 = self.temp3(t2)
                self._between[key] = (wit, {"temp1": len(t1), "temp2": len(t2), "between": len(t3)}, t3)
        return self._between[key]


def classify_report(AS: ActionStructure, mode: str, f, g=None) -> SubgroupClassification:
    C = _Classifier(AS)
    fp_order = _popcount(C.fp)
    if mode == "between":
        if g is None:
            raise ValueError("between mode needs two points")
        wit, counts, found = C.between(f, g)
        res = SubgroupClassification(mode, (f, g), [AS.group_of(m) for m in found], fp_order,
                                     len(C.subs), len(wit), counts)
        if not wit:
            res.diagnostic = f"no element fixes exactly {{{f}, {g}}} in the skeleton; nothing to classify"
        return res
    if mode != "above":
        raise ValueError(f"unknown mode {mode!r}")
    wit = _witness_indices(AS, f)
    res = SubgroupClassification(mode, (f,), [], fp_order, len(C.subs), len(wit))
    if not wit:
        res.diagnostic = f"no element fixes exactly {{{f}}} in the skeleton; nothing to classify"
        return res
    t1 = C.temp1(wit)
    t2 = C.temp2(t1)
    t3 = C.temp3(t2)
    X = skeleton_of(AS.D)
    blocked = []
    for h in sorted(set(X.upper_covers(f)) | set(X.lower_covers(f))):
        blocked.extend(C.between(f, h)[2])
    final = [a for a in t3 if not any(a != b and a & ~b == 0 for b in blocked)]
    res.groups = [AS.group_of(m) for m in final]
    res.counts = {"temp1": len(t1), "temp2": len(t2), "temp3": len(t3), "above": len(final),
                  "betweenBlockers": len(blocked)}
    return res


def classify_subgroups(AS: ActionStructure, mode: str, f, g=None) -> list:
    return classify_report(AS, mode, f, g).groups


def check_reconstruction(groups, target: PermGroup) -> bool:
    """Every returned subgroup is abstractly isomorphic to ``target``."""
    return all(group_isomorphic(G, target) is not None for G in groups)


"""Permutation groups at desk scale.

Groups are handled by brute force: automorphisms are found by backtracking
over a refined partition of the points and every group is fully
materialised.  Nothing here tries to be polynomial.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .order import Poset, adjacent_pairs

MAX_POSET_SIZE = 40
MAX_GROUP_ORDER = 10**5
MAX_SUBGROUP_ORDER = 256


class GroupTooLarge(RuntimeError):
    """A size bound (poset size, group order) was exceeded."""


class Perm:
    """A bijection of a finite sorted domain, stored as a tuple of image indices.

    ``(p * q)(x) == p(q(x))``.
    """

    __slots__ = ("domain", "images", "_index")

    def __init__(self, domain: tuple, images: tuple, index: Optional[dict] = None):
        self.domain = domain
        self.images = images
        self._index = index if index is not None else {x: i for i, x in enumerate(domain)}

    @classmethod
    def identity(cls, domain, index=None):
        return cls(tuple(domain), tuple(range(len(domain))), index)

    @classmethod
    def from_dict(cls, domain, mapping, index=None):
        domain = tuple(domain)
        index = index if index is not None else {x: i for i, x in enumerate(domain)}
        images = tuple(index[mapping.get(x, x)] for x in domain)
        if sorted(images) != list(range(len(domain))):
            raise ValueError("mapping is not a bijection of the domain")
        return cls(domain, images, index)

    def __call__(self, x):
        return self.domain[self.images[self._index[x]]]

    def __mul__(self, other: "Perm") -> "Perm":
        mine = self.images
        return Perm(self.domain, tuple(mine[i] for i in other.images), self._index)

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(self.domain, tuple(inv), self._index)

    def conjugate(self, by: "Perm") -> "Perm":
        """``by * self * by^-1``; moves ``by(x)`` wherever ``self`` moves ``x``."""
        return by * self * by.inverse()

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def support(self) -> frozenset:
        return frozenset(self.domain[i] for i, j in enumerate(self.images) if i != j)

    def as_dict(self, moved_only: bool = False) -> dict:
        return {self.domain[i]: self.domain[j] for i, j in enumerate(self.images)
                if not moved_only or i != j}

    def order(self) -> int:
        seen = [False] * len(self.images)
        n = 1
        for i in range(len(self.images)):
            if seen[i]:
                continue
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = self.images[j]
                length += 1
            n = n * length // _gcd(n, length)
        return n

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images and self.domain == other.domain

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other):
        return self.images < other.images

    def __repr__(self):
        cycles = []
        seen = set()
        for i in range(len(self.images)):
            if i in seen or self.images[i] == i:
                continue
            cyc = [i]
            j = self.images[i]
            while j != i:
                cyc.append(j)
                j = self.images[j]
            seen.update(cyc)
            cycles.append("(" + " ".join(self.domain[k] for k in cyc) + ")")
        return "Perm" + ("".join(cycles) or "()")


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _compose(p, q):
    return tuple(p[i] for i in q)


def _invert(p):
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


class PermGroup:
    """A finite permutation group given by generators, with all elements materialised on demand."""

    def __init__(self, domain: Iterable, generators: Iterable = (), elements: Optional[Iterable] = None,
                 max_order: int = MAX_GROUP_ORDER):
        self.domain = tuple(domain)
        self.index = {x: i for i, x in enumerate(self.domain)}
        self.max_order = max_order
        gens = []
        for g in generators:
            imgs = g.images if isinstance(g, Perm) else tuple(g)
            if imgs != tuple(range(len(self.domain))):
                gens.append(imgs)
        self._gen_cache = tuple(sorted(set(gens)))
        self._elements = None
        if elements is not None:
            self._elements = tuple(sorted({e.images if isinstance(e, Perm) else tuple(e) for e in elements}))
            if not self._gen_cache:
                self._gen_cache = None

    @property
    def _gens(self):
        if self._gen_cache is None:
            self._gen_cache = _small_generating_set(self._elements, len(self.domain))
        return self._gen_cache

    def _perm(self, images):
        return Perm(self.domain, images, self.index)

    @property
    def generators(self) -> tuple:
        return tuple(self._perm(g) for g in self._gens)

    @property
    def element_tuples(self) -> tuple:
        if self._elements is None:
            self._elements = tuple(sorted(_closure(self._gens, len(self.domain), self.max_order)))
        return self._elements

    @property
    def elements(self) -> tuple:
        return tuple(self._perm(e) for e in self.element_tuples)

    @property
    def order(self) -> int:
        return len(self.element_tuples)

    def identity(self) -> Perm:
        return Perm.identity(self.domain, self.index)

    def __contains__(self, g) -> bool:
        imgs = g.images if isinstance(g, Perm) else tuple(g)
        return imgs in self._element_set()

    def _element_set(self):
        cached = getattr(self, "_eset", None)
        if cached is None:
            cached = frozenset(self.element_tuples)
            self._eset = cached
        return cached

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(self.elements)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self._element_set() <= other._element_set()

    def same_elements(self, other: "PermGroup") -> bool:
        return self.domain == other.domain and self._element_set() == other._element_set()

    def __repr__(self):
        return f"PermGroup(order={self.order}, degree={len(self.domain)})"


def _closure(gens, n, max_order):
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for e in frontier:
            for g in gens:
                h = _compose(g, e)
                if h not in seen:
                    seen.add(h)
                    new.append(h)
        if len(seen) > max_order:
            raise GroupTooLarge(f"group order exceeds {max_order}")
        frontier = new
    return seen


def _small_generating_set(elements, n):
    gens = []
    have = {tuple(range(n))}
    for e in elements:
        if e in have:
            continue
        gens.append(e)
        have = _closure(gens, n, len(elements) + 1)
    return tuple(gens)


def trivial_group(domain=()) -> PermGroup:
    return PermGroup(domain, ())


def symmetric_group(domain) -> PermGroup:
    domain = tuple(sorted(domain))
    n = len(domain)
    return PermGroup(domain, elements=itertools.permutations(range(n)))


# --- structure search -------------------------------------------------------

class _Struct:
    def __init__(self, P: Poset, colors=None, predicates=None):
        self.names = P.elements
        idx = {x: i for i, x in enumerate(self.names)}
        n = len(self.names)
        self.n = n
        self.up = [0] * n
        self.down = [0] * n
        for a, b in P.lt:
            self.up[idx[a]] |= 1 << idx[b]
            self.down[idx[b]] |= 1 << idx[a]
        self.ucov = [[idx[y] for y in P.upper_covers(x)] for x in self.names]
        self.dcov = [[idx[y] for y in P.lower_covers(x)] for x in self.names]
        colors = colors or {}
        predicates = predicates or {}
        self.label0 = [
            (
                str(colors.get(x, "")),
                tuple(sorted(k for k, v in predicates.items() if x in v)),
                bin(self.up[i]).count("1"),
                bin(self.down[i]).count("1"),
                P.height(x),
                P.depth(x),
            )
            for i, x in enumerate(self.names)
        ]


def _refine(structs):
    """Jointly refine point labels of several structures (1-dim WL on covers)."""
    labels = [list(s.label0) for s in structs]
    n_classes = -1
    while True:
        sigs = []
        for s, lab in zip(structs, labels):
            sigs.append([
                (lab[i], tuple(sorted(lab[j] for j in s.ucov[i])), tuple(sorted(lab[j] for j in s.dcov[i])))
                for i in range(s.n)
            ])
        table = {sig: k for k, sig in enumerate(sorted({x for ss in sigs for x in ss}, key=repr))}
        labels = [[table[x] for x in ss] for ss in sigs]
        if len(table) == n_classes:
            return labels
        n_classes = len(table)


def _search(A: _Struct, B: _Struct, la, lb, limit=None):
    """Yield every structure isomorphism A -> B as a list of images."""
    n = A.n
    if n != B.n or Counter(la) != Counter(lb):
        return
    by_label = {}
    for j, lab in enumerate(lb):
        by_label.setdefault(lab, []).append(j)
    size = Counter(la)
    # visit order: smallest cell first, then grow along cover edges
    order = []
    placed = set()
    anchor = {}
    for start in sorted(range(n), key=lambda i: (size[la[i]], i)):
        if start in placed:
            continue
        placed.add(start)
        order.append(start)
        queue = [start]
        while queue:
            u = queue.pop(0)
            for v in sorted(A.ucov[u] + A.dcov[u], key=lambda i: (size[la[i]], i)):
                if v not in placed:
                    placed.add(v)
                    anchor[v] = (u, v in A.ucov[u])
                    order.append(v)
                    queue.append(v)
    img = [-1] * n
    used = [False] * n
    mapped = []
    count = 0

    def consistent(u, c):
        for a in mapped:
            b = img[a]
            if ((A.up[u] >> a) & 1) != ((B.up[c] >> b) & 1):
                return False
            if ((A.down[u] >> a) & 1) != ((B.down[c] >> b) & 1):
                return False
        return True

    def rec(k):
        nonlocal count
        if k == n:
            count += 1
            if limit is not None and count > limit:
                raise GroupTooLarge(f"more than {limit} automorphisms")
            yield list(img)
            return
        u = order[k]
        if u in anchor:
            w, is_up = anchor[u]
            pool = B.ucov[img[w]] if is_up else B.dcov[img[w]]
            cands = [c for c in pool if lb[c] == la[u]]
        else:
            cands = by_label[la[u]]
        for c in cands:
            if used[c] or not consistent(u, c):
                continue
            img[u] = c
            used[c] = True
            mapped.append(u)
            yield from rec(k + 1)
            mapped.pop()
            used[c] = False
            img[u] = -1

    yield from rec(0)


def automorphism_group(P: Poset, colors: Optional[dict] = None, predicates: Optional[dict] = None,
                       max_size: int = MAX_POSET_SIZE, max_order: int = MAX_GROUP_ORDER) -> PermGroup:
    """All order-preserving bijections of ``P`` that also preserve ``colors``
    (element -> label) and each named set in ``predicates``."""
    if len(P) > max_size:
        raise GroupTooLarge(f"poset has {len(P)} elements (bound {max_size})")
    s = _Struct(P, colors, predicates)
    (lab,) = _refine([s])
    found = [tuple(m) for m in _search(s, s, lab, lab, limit=max_order)]
    return PermGroup(P.elements, elements=found, max_order=max_order)


def find_isomorphism(P: Poset, Q: Poset, colors_p=None, colors_q=None,
                     predicates_p=None, predicates_q=None) -> Optional[dict]:
    """An order isomorphism P -> Q respecting colours/predicates, or None."""
    if len(P) != len(Q) or len(P.lt) != len(Q.lt):
        return None
    a = _Struct(P, colors_p, predicates_p)
    b = _Struct(Q, colors_q, predicates_q)
    la, lb = _refine([a, b])
    for m in _search(a, b, la, lb):
        return {P.elements[i]: Q.elements[j] for i, j in enumerate(m)}
    return None


def naive_automorphisms(P: Poset) -> set:
    """Every order automorphism of ``P`` by checking all n! bijections (oracle)."""
    n = len(P)
    idx = {x: i for i, x in enumerate(P.elements)}
    M = np.zeros((n, n), dtype=bool)
    for a, b in P.lt:
        M[idx[a], idx[b]] = True
    if n == 0:
        return {()}
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.intp)
    moved = M[perms[:, :, None], perms[:, None, :]]
    ok = (moved == M[None, :, :]).all(axis=(1, 2))
    return {tuple(int(v) for v in p) for p in perms[ok]}


# --- orbits and stabilisers ---------------------------------------------------

@dataclass
class OrbitReport:
    orbits: list
    transitive_on_A: bool
    transitive_on_A_ap: Optional[bool]


def orbits(G: PermGroup) -> list:
    n = len(G.domain)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for g in G._gens:
        for i, j in enumerate(g):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(G.domain[i])
    return sorted((frozenset(v) for v in groups.values()), key=lambda s: sorted(s))


def orbits_report(G: PermGroup, A, poset: Optional[Poset] = None) -> OrbitReport:
    """Orbits of ``G`` met by ``A``; pair transitivity is on the cover pairs inside ``A``."""
    A = set(A)
    if not A <= set(G.domain):
        raise ValueError("A is not inside the group's domain")
    cut = [o & A for o in orbits(G) if o & A]
    cut = sorted((frozenset(o) for o in cut), key=lambda s: sorted(s))
    trans = len(cut) <= 1
    trans_ap = None
    if poset is not None:
        pairs = sorted(adjacent_pairs(poset.induced(A)))
        if not pairs:
            trans_ap = True
        else:
            first = pairs[0]
            reach = {(g(first[0]), g(first[1])) for g in G.elements}
            trans_ap = all(p in reach for p in pairs)
    return OrbitReport(cut, trans, trans_ap)


def stabilizer(G: PermGroup, A, mode: str = "setwise") -> PermGroup:
    idx = [G.index[x] for x in A]
    keep = set(idx)
    if mode == "pointwise":
        els = [e for e in G.element_tuples if all(e[i] == i for i in idx)]
    elif mode == "setwise":
        els = [e for e in G.element_tuples if all(e[i] in keep for i in idx)]
    else:
        raise ValueError(f"unknown stabilizer mode {mode!r}")
    return PermGroup(G.domain, elements=els, max_order=G.max_order)


# --- abstract structure: multiplication tables, subgroups, isomorphism ----------

class _Table:
    """Multiplication table of a materialised group; element k is ``els[k]``."""

    def __init__(self, G: PermGroup):
        self.els = G.element_tuples
        self.n = len(self.els)
        pos = {e: k for k, e in enumerate(self.els)}
        self.pos = pos
        self.mul = [[pos[_compose(a, b)] for b in self.els] for a in self.els]
        self.identity = pos[tuple(range(len(G.domain)))]
        self.inv = [row.index(self.identity) for row in self.mul]
        self.orders = [self._order(k) for k in range(self.n)]

    def _order(self, k):
        m, x = 1, k
        while x != self.identity:
            x = self.mul[x][k]
            m += 1
        return m

    def cyclic(self, k) -> int:
        mask, x = 1 << self.identity, k
        while x != self.identity:
            mask |= 1 << x
            x = self.mul[x][k]
        return mask

    def close(self, start_mask, gens) -> int:
        members = [i for i in range(self.n) if (start_mask >> i) & 1] or [self.identity]
        mask = 0
        for i in members:
            mask |= 1 << i
        frontier = members
        while frontier:
            new = []
            for e in frontier:
                row = self.mul[e]
                for g in gens:
                    h = row[g]
                    if not (mask >> h) & 1:
                        mask |= 1 << h
                        new.append(h)
            frontier = new
        return mask

    def extend(self, H, gens, k, members=None) -> int:
        """<H, k> where ``H`` is a subgroup generated by ``gens``.

        Words leave H first through k, so the search starts from the coset H k.
        """
        mask = H
        frontier = []
        for i in members if members is not None else self.members(H):
            h = self.mul[i][k]
            if not (mask >> h) & 1:
                mask |= 1 << h
                frontier.append(h)
        gens = gens + (k,)
        while frontier:
            new = []
            for e in frontier:
                row = self.mul[e]
                for g in gens:
                    h = row[g]
                    if not (mask >> h) & 1:
                        mask |= 1 << h
                        new.append(h)
            frontier = new
        return mask

    def members(self, mask):
        return [i for i in range(self.n) if (mask >> i) & 1]


def _table(G: PermGroup) -> _Table:
    t = getattr(G, "_table", None)
    if t is None:
        t = _Table(G)
        G._table = t
    return t


def subgroup_masks(G: PermGroup, max_order: int = MAX_SUBGROUP_ORDER) -> list:
    """All subgroups of ``G`` as bitmasks over ``G.element_tuples`` (cyclic extension)."""
    if G.order > max_order:
        raise GroupTooLarge(f"group order {G.order} exceeds subgroup bound {max_order}")
    T = _table(G)
    cyc = {}
    for k in range(T.n):
        cyc.setdefault(T.cyclic(k), k)
    cyclic = sorted(cyc.items())
    trivial = 1 << T.identity
    subs = {trivial: ()}
    queue = []
    for mask, k in cyclic:
        if mask not in subs:
            subs[mask] = (k,)
            queue.append(mask)
    while queue:
        H = queue.pop()
        gens = subs[H]
        hs = T.members(H)
        seen = H
        for mask, k in cyclic:
            # <H, k> = <H, hk>, so one representative per coset Hk is enough
            if mask & ~H == 0 or (seen >> k) & 1:
                continue
            for i in hs:
                seen |= 1 << T.mul[i][k]
            K = T.extend(H, gens, k, hs)
            if K not in subs:
                subs[K] = gens + (k,)
                queue.append(K)
    return sorted(subs, key=lambda m: (bin(m).count("1"), m))


def subgroup_enumerate(G: PermGroup, within: Optional[PermGroup] = None,
                       max_order: int = MAX_SUBGROUP_ORDER) -> list:
    """Every subgroup of ``within`` (default ``G``), each as a :class:`PermGroup`."""
    H = within if within is not None else G
    if within is not None and not within.is_subgroup_of(G):
        raise ValueError("'within' is not a subgroup of G")
    T = _table(H)
    return [PermGroup(H.domain, elements=[T.els[i] for i in T.members(m)], max_order=H.max_order)
            for m in subgroup_masks(H, max_order)]


def group_isomorphic(G: PermGroup, H: PermGroup, max_order: int = MAX_SUBGROUP_ORDER) -> Optional[dict]:
    """An abstract isomorphism G -> H as ``{Perm: Perm}``, or None."""
    if G.order != H.order:
        return None
    if G.order > max_order:
        raise GroupTooLarge(f"group order {G.order} exceeds bound {max_order}")
    A, B = _table(G), _table(H)
    if sorted(A.orders) != sorted(B.orders):
        return None
    gens = []
    span = 1 << A.identity
    for k in sorted(range(A.n), key=lambda k: -A.orders[k]):
        if not (span >> k) & 1:
            gens.append(k)
            span = A.close(span, gens)
    by_order = {}
    for k in range(B.n):
        by_order.setdefault(B.orders[k], []).append(k)

    def extend(images):
        # define phi on <gens[:len(images)]> by walking the Cayley graph
        phi = {A.identity: B.identity}
        frontier = [A.identity]
        while frontier:
            new = []
            for e in frontier:
                for g, h in zip(gens, images):
                    x, y = A.mul[e][g], B.mul[phi[e]][h]
                    if x in phi:
                        if phi[x] != y:
                            return None
                    else:
                        phi[x] = y
                        new.append(x)
            frontier = new
        if len(set(phi.values())) != len(phi):
            return None
        return phi

    def rec(images):
        if len(images) == len(gens):
            return extend(images)
        for h in by_order[A.orders[gens[len(images)]]]:
            trial = images + [h]
            if extend(trial) is not None:
                res = rec(trial)
                if res is not None:
                    return res
        return None

    phi = rec([])
    if phi is None or len(phi) != A.n:
        return None
    return {G._perm(A.els[a]): H._perm(B.els[b]) for a, b in phi.items()}


def element_order_profile(G: PermGroup) -> Counter:
    return Counter(_table(G).orders)

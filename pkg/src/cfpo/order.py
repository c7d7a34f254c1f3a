"""Finite partial orders, cover graphs and the cycle-free predicates.

Posets are immutable.  Elements are strings and every iteration over a set
of elements happens in sorted order so results are reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional


class OrderError(ValueError):
    """Raised for malformed order input (reflexive pairs, cycles, bad ids)."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class Poset:
    """A finite strict partial order.

    ``lt`` holds every strict pair; ``covers`` is derived (the Hasse
    diagram).  Build instances with :func:`build_poset`.
    """

    elements: tuple
    lt: frozenset
    covers: frozenset = field(compare=False)
    name: str = field(default="", compare=False)

    def __post_init__(self):
        up = {x: set() for x in self.elements}
        down = {x: set() for x in self.elements}
        for a, b in self.lt:
            up[a].add(b)
            down[b].add(a)
        ucov = {x: set() for x in self.elements}
        dcov = {x: set() for x in self.elements}
        for a, b in self.covers:
            ucov[a].add(b)
            dcov[b].add(a)
        object.__setattr__(self, "_up", {x: frozenset(v) for x, v in up.items()})
        object.__setattr__(self, "_down", {x: frozenset(v) for x, v in down.items()})
        object.__setattr__(self, "_ucov", {x: tuple(sorted(v)) for x, v in ucov.items()})
        object.__setattr__(self, "_dcov", {x: tuple(sorted(v)) for x, v in dcov.items()})

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self._up

    def less(self, a, b) -> bool:
        return (a, b) in self.lt

    def leq(self, a, b) -> bool:
        return a == b or (a, b) in self.lt

    def comparable(self, a, b) -> bool:
        return self.leq(a, b) or self.leq(b, a)

    def up(self, x) -> frozenset:
        """Strict up-set of ``x``."""
        return self._up[x]

    def down(self, x) -> frozenset:
        """Strict down-set of ``x``."""
        return self._down[x]

    def upper_covers(self, x) -> tuple:
        return self._ucov[x]

    def lower_covers(self, x) -> tuple:
        return self._dcov[x]

    def neighbors(self, x) -> tuple:
        """Cover-graph neighbours of ``x``, orientation ignored."""
        return tuple(sorted(self._ucov[x] + self._dcov[x]))

    def minimal(self) -> tuple:
        return tuple(x for x in self.elements if not self._down[x])

    def maximal(self) -> tuple:
        return tuple(x for x in self.elements if not self._up[x])

    def height(self, x) -> int:
        """Length of the longest chain ending at ``x``."""
        return self._heights()[x]

    def depth(self, x) -> int:
        """Length of the longest chain starting at ``x``."""
        return self._depths()[x]

    def _heights(self):
        cached = self.__dict__.get("_height_cache")
        if cached is None:
            cached = {}
            for x in self.linear_extension():
                cached[x] = max((cached[y] + 1 for y in self._dcov[x]), default=0)
            object.__setattr__(self, "_height_cache", cached)
        return cached

    def _depths(self):
        cached = self.__dict__.get("_depth_cache")
        if cached is None:
            cached = {}
            for x in reversed(self.linear_extension()):
                cached[x] = max((cached[y] + 1 for y in self._ucov[x]), default=0)
            object.__setattr__(self, "_depth_cache", cached)
        return cached

    def linear_extension(self) -> list:
        """Elements sorted so that every element precedes its up-set."""
        indeg = {x: len(self._dcov[x]) for x in self.elements}
        ready = sorted(x for x, d in indeg.items() if d == 0)
        out = []
        while ready:
            x = ready.pop(0)
            out.append(x)
            for y in self._ucov[x]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    ready.append(y)
            ready.sort()
        return out

    def induced(self, subset: Iterable, name: str = "") -> "Poset":
        """The suborder on ``subset`` (order inherited, covers recomputed)."""
        keep = set(subset)
        missing = keep - set(self.elements)
        if missing:
            raise OrderError(f"unknown elements: {sorted(missing)}")
        pairs = [(a, b) for a, b in self.lt if a in keep and b in keep]
        return build_poset(keep, pairs, kind="lt", name=name)

    def relabel(self, mapping: dict, name: str = "") -> "Poset":
        pairs = [(mapping[a], mapping[b]) for a, b in self.lt]
        return build_poset([mapping[x] for x in self.elements], pairs, kind="lt", name=name)


@dataclass(frozen=True)
class ChainedTree:
    """A rooted tree with a distinguished maximal chain.

    ``chain`` is ``None`` when the tree is used without a chain predicate
    (the trees hung above skeleton points).
    """

    base: Poset
    root: str
    chain: Optional[frozenset] = None

    @property
    def elements(self):
        return self.base.elements

    def __len__(self):
        return len(self.base)


@dataclass(frozen=True)
class PathResult:
    nodes: tuple

    def __len__(self):
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    def __contains__(self, x):
        return x in self.nodes


def _closure(elements, pairs):
    succ = {x: set() for x in elements}
    for a, b in pairs:
        succ[a].add(b)
    reach = {}
    for x in elements:
        seen = set()
        stack = list(succ[x])
        while stack:
            y = stack.pop()
            if y in seen:
                continue
            seen.add(y)
            stack.extend(succ[y])
        reach[x] = seen
    return reach


def _find_cycle(elements, pairs):
    succ = {x: sorted({b for a, b in pairs if a == x}) for x in elements}
    color = {x: 0 for x in elements}
    parent = {}
    for start in sorted(elements):
        if color[start]:
            continue
        stack = [(start, iter(succ[start]))]
        color[start] = 1
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                color[node] = 2
                stack.pop()
                continue
            if color[nxt] == 0:
                color[nxt] = 1
                parent[nxt] = node
                stack.append((nxt, iter(succ[nxt])))
            elif color[nxt] == 1:
                cycle = [node]
                while cycle[-1] != nxt:
                    cycle.append(parent[cycle[-1]])
                cycle.reverse()
                return tuple(cycle) + (nxt,)
    return None


def build_poset(elements, pairs, kind: str = "covers", name: str = "") -> Poset:
    """Validate ``pairs`` and return the strict partial order they generate.

    With ``kind="covers"`` the pairs are closed transitively; with
    ``kind="lt"`` they must already be transitive.
    """
    elems = tuple(sorted(set(elements)))
    known = set(elems)
    pairs = [tuple(p) for p in pairs]
    for a, b in pairs:
        if a not in known or b not in known:
            raise OrderError(f"pair ({a}, {b}) uses an unknown element")
        if a == b:
            raise OrderError(f"reflexive pair ({a}, {a})", witness=(a, a))
    if kind not in ("covers", "lt"):
        raise OrderError(f"unknown relation kind {kind!r}")
    cycle = _find_cycle(elems, pairs)
    if cycle is not None:
        raise OrderError("order has a cycle: " + " < ".join(cycle), witness=cycle)
    reach = _closure(elems, pairs)
    lt = frozenset((a, b) for a in elems for b in reach[a])
    if kind == "lt" and lt != frozenset(pairs):
        raise OrderError("relation given as 'lt' is not transitive")
    covers = frozenset(
        (a, b) for (a, b) in lt
        if not any(b in reach[k] for k in reach[a] if k != b)
    )
    return Poset(elems, lt, covers, name)


def adjacent_pairs(P: Poset) -> frozenset:
    """The cover pairs of ``P``: i < j with nothing strictly between."""
    return P.covers


def is_cfpo(P: Poset):
    """Return ``(ok, cycle)``; ``cycle`` is an undirected cover cycle or None."""
    parent = {}
    for start in P.elements:
        if start in parent:
            continue
        parent[start] = None
        stack = [start]
        while stack:
            x = stack.pop()
            for y in P.neighbors(x):
                if y == parent[x]:
                    continue
                if y in parent:
                    return False, _tree_cycle(parent, x, y)
                parent[y] = x
                stack.append(y)
    return True, None


def _tree_cycle(parent, x, y):
    def chain(z):
        out = [z]
        while parent[out[-1]] is not None:
            out.append(parent[out[-1]])
        return out

    cx, cy = chain(x), chain(y)
    on_y = set(cy)
    cut = next(i for i, z in enumerate(cx) if z in on_y)
    lca = cx[cut]
    cycle = cx[: cut + 1] + cy[: cy.index(lca)][::-1]
    # canonical rotation: smallest element first, then its smaller neighbour
    i = cycle.index(min(cycle))
    cycle = cycle[i:] + cycle[:i]
    if len(cycle) > 2 and cycle[-1] < cycle[1]:
        cycle = [cycle[0]] + cycle[1:][::-1]
    return tuple(cycle)


def _require_cfpo(P: Poset):
    ok, cycle = is_cfpo(P)
    if not ok:
        raise OrderError("poset is not cycle-free", witness=cycle)


def path(P: Poset, x, y) -> Optional[PathResult]:
    """The unique cover-graph path from ``x`` to ``y`` (None if disconnected)."""
    _require_cfpo(P)
    return _path(P, x, y)


def _path(P, x, y):
    if x not in P or y not in P:
        raise OrderError(f"unknown element in path({x}, {y})")
    if x == y:
        return PathResult((x,))
    prev = {x: None}
    queue = deque([x])
    while queue:
        z = queue.popleft()
        for w in P.neighbors(z):
            if w not in prev:
                prev[w] = z
                if w == y:
                    out = [y]
                    while prev[out[-1]] is not None:
                        out.append(prev[out[-1]])
                    return PathResult(tuple(reversed(out)))
                queue.append(w)
    return None


def components(P: Poset) -> list:
    return components_mod(P, ())


def components_mod(P: Poset, B) -> list:
    """Classes of x ~ y  <=>  path(x, y) avoids ``B``, over elements not in B.

    Elements in different connected components are never related.
    """
    _require_cfpo(P)
    blocked = set(B)
    if blocked - set(P.elements):
        raise OrderError(f"unknown elements in B: {sorted(blocked - set(P.elements))}")
    seen = set()
    out = []
    for start in P.elements:
        if start in blocked or start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            z = stack.pop()
            for w in P.neighbors(z):
                if w not in blocked and w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        out.append(frozenset(comp))
    return out


def boundary(P: Poset, C) -> frozenset:
    """Elements outside ``C`` lying on every path from ``C`` to the rest of its component."""
    _require_cfpo(P)
    C = set(C)
    if not C:
        return frozenset()
    start = min(C)
    comp = next(k for k in components(P) if start in k)
    outside = sorted(comp - C)
    if not outside:
        return frozenset()
    gate = None
    for c in sorted(C):
        for m in outside:
            on = set(_path(P, c, m).nodes) - C
            gate = on if gate is None else gate & on
            if not gate:
                return frozenset()
    return frozenset(gate)


def validate_tree(t: ChainedTree):
    """Return ``(ok, report)``; report names the first violated condition."""
    P = t.base
    if t.root not in P:
        return False, f"root {t.root!r} is not an element"
    for x in P.elements:
        if x != t.root and not P.less(t.root, x):
            return False, f"root {t.root!r} is not below {x!r}"
    for x in P.elements:
        below = sorted(P.down(x))
        for i, a in enumerate(below):
            for b in below[i + 1:]:
                if not P.comparable(a, b):
                    return False, f"down-set of {x!r} is not a chain ({a!r} || {b!r})"
    if t.chain is not None:
        chain = set(t.chain)
        if not chain <= set(P.elements):
            return False, "chain has unknown elements"
        if t.root not in chain:
            return False, "chain does not contain the root"
        for a in chain:
            for b in chain:
                if not P.comparable(a, b):
                    return False, f"chain elements {a!r} and {b!r} are incomparable"
        for x in P.elements:
            if x not in chain and all(P.comparable(x, c) for c in chain):
                return False, f"chain is not maximal ({x!r} extends it)"
    return True, "ok"


def empty_poset(name: str = "") -> Poset:
    return build_poset((), (), name=name)


def chain_poset(n: int, prefix: str = "x", name: str = "") -> Poset:
    names = [f"{prefix}{i}" for i in range(n)]
    return build_poset(names, zip(names, names[1:]), name=name)


def antichain(n: int, prefix: str = "x", name: str = "") -> Poset:
    return build_poset([f"{prefix}{i}" for i in range(n)], (), name=name)

"""Brute-force reference implementations used only by the tests.

Each one is deliberately naive and shares no code with the package.
"""

import itertools

import numpy as np


def closure_pairs(elements, covers):
    idx = {x: i for i, x in enumerate(elements)}
    n = len(elements)
    R = np.zeros((n, n), dtype=bool)
    for a, b in covers:
        R[idx[a], idx[b]] = True
    for k in range(n):
        R = R | (R[:, [k]] & R[[k], :])
    return {(elements[i], elements[j]) for i in range(n) for j in range(n) if R[i, j]}


def covers_by_triples(elements, lt):
    return {(a, b) for a, b in lt if not any((a, k) in lt and (k, b) in lt for k in elements)}


def undirected_cycle_free(elements, covers):
    # a forest has exactly n - c edges
    parent = {x: x for x in elements}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for a, b in covers:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def all_automorphisms(elements, lt, labels=None):
    """Every order preserving bijection, by trying all n! of them."""
    elements = list(elements)
    out = []
    for img in itertools.permutations(elements):
        m = dict(zip(elements, img))
        if labels is not None and any(labels[x] != labels[m[x]] for x in elements):
            continue
        if all(((m[a], m[b]) in lt) == ((a, b) in lt) for a in elements for b in elements):
            out.append(m)
    return out


def compose(p, q):
    return tuple(p[i] for i in q)


def closure(gens, n):
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = compose(g, x)
                if y not in seen:
                    seen.add(y)
                    new.append(y)
        frontier = new
    return seen


def all_subgroups(elements):
    """Subgroups of a small group given as tuples, by closing every pair of elements."""
    elements = list(elements)
    n = len(elements[0])
    subs = set()
    for a in elements:
        for b in elements:
            subs.add(frozenset(closure([a, b], n)))
    # close under joins until stable
    changed = True
    while changed:
        changed = False
        for A in list(subs):
            for B in list(subs):
                J = frozenset(closure(list(A | B), n))
                if J not in subs:
                    subs.add(J)
                    changed = True
    return subs


def cover_path(covers, x, y):
    nbrs = {}
    for a, b in covers:
        nbrs.setdefault(a, set()).add(b)
        nbrs.setdefault(b, set()).add(a)
    prev = {x: None}
    queue = [x]
    while queue:
        z = queue.pop(0)
        if z == y:
            out = [y]
            while prev[out[-1]] is not None:
                out.append(prev[out[-1]])
            return out[::-1]
        for w in sorted(nbrs.get(z, ())):
            if w not in prev:
                prev[w] = z
                queue.append(w)
    return None


def gate(covers, supp):
    """The single point of (union of paths inside supp) minus supp, else None."""
    hull = set(supp)
    for a in supp:
        for b in supp:
            p = cover_path(covers, a, b)
            if p:
                hull.update(p)
    rest = hull - set(supp)
    return next(iter(rest)) if len(rest) == 1 else None


def backtrack_automorphisms(elements, lt):
    """All order automorphisms by plain backtracking: assign elements one at a
    time and check every relation against the ones already placed."""
    elements = list(elements)
    n = len(elements)
    up = {x: {b for a, b in lt if a == x} for x in elements}
    down = {x: {a for a, b in lt if b == x} for x in elements}
    sig = {x: (len(up[x]), len(down[x])) for x in elements}
    found = []
    m = {}
    used = set()

    def ok(x, y):
        if sig[x] != sig[y]:
            return False
        for u, w in m.items():
            if ((x, u) in lt) != ((y, w) in lt) or ((u, x) in lt) != ((w, y) in lt):
                return False
        return True

    def rec(i):
        if i == n:
            found.append(dict(m))
            return
        x = elements[i]
        for y in elements:
            if y not in used and ok(x, y):
                m[x] = y
                used.add(y)
                rec(i + 1)
                del m[x]
                used.discard(y)

    rec(0)
    return found

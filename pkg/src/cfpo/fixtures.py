"""Small named orders used across tests, demos and the CLI, plus random generators."""

from __future__ import annotations

import random

from .decoration import decorate
from .order import ChainedTree, build_poset


def poset_A():
    """Two minimal points under a centre with two maximal points above it."""
    return build_poset(
        ["a0", "a1", "c", "b0", "b1"],
        [("a0", "c"), ("a1", "c"), ("c", "b0"), ("c", "b1")],
        name="A",
    )


def poset_B():
    return build_poset(["p"], [], name="B")


def tree_B(with_chain=True):
    return ChainedTree(poset_B(), "p", frozenset({"p"}) if with_chain else None)


def tree_V():
    """Root with two incomparable children."""
    P = build_poset(["s0", "s1", "s2"], [("s0", "s1"), ("s0", "s2")], name="V")
    return ChainedTree(P, "s0")


def tree_T3():
    """Root t0; chain t0 < t1; leaves w1, w2 also covering t0."""
    P = build_poset(["t0", "t1", "w1", "w2"], [("t0", "t1"), ("t0", "w1"), ("t0", "w2")], name="T3")
    return ChainedTree(P, "t0", frozenset({"t0", "t1"}))


def point_tree():
    P = build_poset(["t"], [], name="point")
    return ChainedTree(P, "t", frozenset({"t"}))


def chain2():
    return build_poset(["x0", "x1"], [("x0", "x1")], name="2-chain")


def diamond():
    return build_poset(["a", "b", "c", "d"], [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")], name="diamond")


def crown():
    return build_poset(["a", "b", "c", "d"], [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")], name="crown")


def dec_ABB():
    return decorate(poset_A(), tree_B(False), tree_B())


def dec_E2():
    return decorate(chain2(), tree_V(), point_tree())


def dec_E3():
    return decorate(poset_A(), tree_B(False), tree_T3())


def dec_E4():
    return decorate(poset_A(), tree_V(), tree_B())


CURATED = {
    "Dec(A,B,B)": (poset_A, lambda: tree_B(False), tree_B),
    "E2": (chain2, tree_V, point_tree),
    "E3": (poset_A, lambda: tree_B(False), tree_T3),
    "E4": (poset_A, tree_V, tree_B),
}


def curated_inputs():
    """``{name: (X, S, TL)}`` for the curated decorations."""
    return {k: tuple(f() for f in v) for k, v in CURATED.items()}


# Hasse diagram of the drawn decoration of A by B and B, nodes named by their
# drawing coordinates; edges point upwards.
DRAWN_EDGES = [
    ("10,0", "10,10"), ("10,0", "15,7.5"), ("15,7.5", "20,15"),
    ("30,0", "30,10"), ("30,0", "25,7.5"), ("25,7.5", "20,15"),
    ("20,15", "20,25"),
    ("20,15", "15,22.5"), ("15,22.5", "10,30"), ("10,30", "10,40"),
    ("20,15", "25,22.5"), ("25,22.5", "30,30"), ("30,30", "30,40"),
]


def drawn_poset():
    nodes = sorted({x for e in DRAWN_EDGES for x in e})
    return build_poset(nodes, DRAWN_EDGES, name="drawn")


# --- random instances -----------------------------------------------------------

def random_cfpo(rng: random.Random, n: int, prefix: str = "x", connected: bool = False):
    """A random cycle-free order: a random forest with randomly oriented edges."""
    names = [f"{prefix}{i}" for i in range(n)]
    pairs = []
    for i in range(1, n):
        if not connected and rng.random() < 0.15:
            continue
        j = rng.randrange(i)
        pairs.append((names[i], names[j]) if rng.random() < 0.5 else (names[j], names[i]))
    return build_poset(names, pairs)


def random_poset(rng: random.Random, n: int, density: float = 0.35, prefix: str = "x"):
    """A random (not necessarily cycle-free) order from a random DAG on a shuffled ranking."""
    names = [f"{prefix}{i}" for i in range(n)]
    rank = names[:]
    rng.shuffle(rank)
    pairs = [(rank[i], rank[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    return build_poset(names, pairs)


def random_tree(rng: random.Random, n: int, prefix: str = "s", chained: bool = False):
    names = [f"{prefix}{i}" for i in range(n)]
    parent = {names[i]: names[rng.randrange(i)] for i in range(1, n)}
    P = build_poset(names, [(p, c) for c, p in parent.items()])
    chain = None
    if chained:
        node = names[0]
        chain = {node}
        while P.upper_covers(node):
            node = rng.choice(P.upper_covers(node))
            chain.add(node)
        chain = frozenset(chain)
    return ChainedTree(P, names[0], chain)

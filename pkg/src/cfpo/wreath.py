"""The double wreath product W(X, S, (T, L)) and its action on the decoration.

An element is a triple ``(phi, eta, zeta)``: an automorphism of the
skeleton, one automorphism of S per skeleton point, one automorphism of
(T, L) per adjacent pair.  It acts on Dec(X, S, (T, L)) by

    x            -> phi(x)
    (x, s) in S_x -> (phi(x), eta[x](s))
    (x, y, t)    -> (phi(x), phi(y), zeta[(x, y)](t))

Products follow ``(h0, eta0)(h1, eta1) = (h0 h1, eta0(h1 . x) eta1(x))``
with the index set acted on from the right, which is what makes
``mu(w0 w1, e) == mu(w0, mu(w1, e))``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Optional

from .decoration import ABOVE, SKELETON, above_name, between_name, decorate
from .groups import (
    MAX_GROUP_ORDER,
    MAX_POSET_SIZE,
    GroupTooLarge,
    Perm,
    automorphism_group,
    trivial_group,
)
from .order import ChainedTree, Poset


@dataclass(frozen=True)
class WreathElement:
    phi: Perm
    eta: tuple
    zeta: tuple


class WreathProduct:
    """W(X, S, (T, L)) kept as component tuples; elements are only listed on request."""

    def __init__(self, X: Poset, S: Optional[ChainedTree] = None, TL: Optional[ChainedTree] = None,
                 max_order: int = MAX_GROUP_ORDER):
        S = S if S is not None and len(S) else None
        TL = TL if TL is not None and len(TL) else None
        self.X, self.S, self.TL = X, S, TL
        self.max_order = max_order
        self.points = X.elements
        self.point_pos = {x: i for i, x in enumerate(self.points)}
        self.pairs = tuple(sorted(X.covers))
        self.pair_pos = {p: i for i, p in enumerate(self.pairs)}
        self.aut_X = automorphism_group(X, max_order=max_order)
        self.aut_S = automorphism_group(S.base, max_order=max_order) if S else trivial_group()
        if TL:
            self.aut_TL = automorphism_group(TL.base, predicates={"L": TL.chain}, max_order=max_order)
        else:
            self.aut_TL = trivial_group()
        self.decorated = decorate(X, S, TL)
        self._dindex = {e: i for i, e in enumerate(self.decorated.elements)}

    @property
    def order(self) -> int:
        n_ap = len(self.pairs) if self.TL else 0
        return self.aut_TL.order ** n_ap * self.aut_S.order ** len(self.points) * self.aut_X.order

    def identity(self) -> WreathElement:
        return WreathElement(
            self.aut_X.identity(),
            tuple(self.aut_S.identity() for _ in self.points),
            tuple(self.aut_TL.identity() for _ in self.pairs),
        )

    def compose(self, w0: WreathElement, w1: WreathElement) -> WreathElement:
        """The product ``w0 w1`` (act by ``w1`` first)."""
        phi1 = w1.phi
        eta = tuple(w0.eta[self.point_pos[phi1(x)]] * w1.eta[i] for i, x in enumerate(self.points))
        zeta = tuple(
            w0.zeta[self.pair_pos[(phi1(x), phi1(y))]] * w1.zeta[i]
            for i, (x, y) in enumerate(self.pairs)
        )
        return WreathElement(w0.phi * phi1, eta, zeta)

    def invert(self, w: WreathElement) -> WreathElement:
        inv = w.phi.inverse()
        eta = tuple(w.eta[self.point_pos[inv(x)]].inverse() for x in self.points)
        zeta = tuple(w.zeta[self.pair_pos[(inv(x), inv(y))]].inverse() for x, y in self.pairs)
        return WreathElement(inv, eta, zeta)

    def elements(self):
        """Iterate over all of W (raises if the order exceeds the bound)."""
        if self.order > self.max_order:
            raise GroupTooLarge(f"|W| = {self.order} exceeds {self.max_order}")
        X_els = self.aut_X.elements
        S_els = self.aut_S.elements
        T_els = self.aut_TL.elements
        for phi in X_els:
            for eta in itertools.product(S_els, repeat=len(self.points)):
                for zeta in itertools.product(T_els, repeat=len(self.pairs)):
                    yield WreathElement(phi, eta, zeta)

    def random_element(self, rng: random.Random) -> WreathElement:
        X_els = self.aut_X.elements
        S_els = self.aut_S.elements
        T_els = self.aut_TL.elements
        return WreathElement(
            rng.choice(X_els),
            tuple(rng.choice(S_els) for _ in self.points),
            tuple(rng.choice(T_els) for _ in self.pairs),
        )

    def mu_apply(self, w: WreathElement, e):
        """Image of the decorated element ``e`` under ``w``."""
        prov = self.decorated.provenance.get(e)
        if prov is None:
            raise KeyError(f"{e!r} is not an element of the decoration")
        if prov.kind == SKELETON:
            return w.phi(e)
        if prov.kind == ABOVE:
            x = prov.anchor
            return above_name(w.phi(x), w.eta[self.point_pos[x]](prov.source))
        x, y = prov.anchor, prov.anchor2
        t = w.zeta[self.pair_pos[(x, y)]](prov.source)
        return between_name(w.phi(x), w.phi(y), t)

    def to_aut(self, w: WreathElement) -> Perm:
        """``w`` as a permutation of the decorated poset."""
        D = self.decorated
        images = tuple(self._dindex[self.mu_apply(w, e)] for e in D.elements)
        return Perm(D.elements, images, self._dindex)

    def element_to_json(self, w: WreathElement) -> dict:
        return {
            "phi": w.phi.as_dict(),
            "eta": {x: w.eta[i].as_dict() for i, x in enumerate(self.points)},
            "zeta": {f"{x}..{y}": w.zeta[i].as_dict() for i, (x, y) in enumerate(self.pairs)},
        }

    def element_from_json(self, d: dict) -> WreathElement:
        phi = Perm.from_dict(self.aut_X.domain, d.get("phi", {}))
        eta = tuple(Perm.from_dict(self.aut_S.domain, d.get("eta", {}).get(x, {})) for x in self.points)
        zeta = tuple(Perm.from_dict(self.aut_TL.domain, d.get("zeta", {}).get(f"{x}..{y}", {}))
                     for x, y in self.pairs)
        w = WreathElement(phi, eta, zeta)
        if phi not in self.aut_X or any(g not in self.aut_S for g in eta) or any(g not in self.aut_TL for g in zeta):
            raise ValueError("components are not automorphisms of X, S and (T, L)")
        return w


def wreath_group(X, S=None, TL=None, max_order=MAX_GROUP_ORDER) -> WreathProduct:
    return WreathProduct(X, S, TL, max_order=max_order)


def mu_apply(W: WreathProduct, w: WreathElement, e):
    return W.mu_apply(w, e)


def wreath_to_aut(W: WreathProduct, w: WreathElement) -> Perm:
    p = W.to_aut(w)
    assert preserves_order(W.decorated.base, p), "wreath element does not act as an automorphism"
    return p


def preserves_order(P: Poset, p: Perm) -> bool:
    return all(P.less(p(a), p(b)) for a, b in P.covers) and len(set(p.images)) == len(p.images)


@dataclass
class WreathReport:
    homomorphism: bool
    injective: bool
    surjective: Optional[bool]
    order_w: int
    order_aut: Optional[int]
    pairs_checked: int
    exhaustive: bool
    automorphisms: bool = True

    def as_dict(self):
        return dict(self.__dict__)


def verify_wreath_iso(X, S=None, TL=None, samples: int = 10**4, seed: int = 0,
                      max_order: int = MAX_GROUP_ORDER, max_size: int = MAX_POSET_SIZE) -> WreathReport:
    """Check that w -> mu(w, .) is an injective homomorphism into Aut(Dec),
    and compare its image with a brute-force Aut(Dec) when that is feasible."""
    W = WreathProduct(X, S, TL, max_order=max_order)
    D = W.decorated
    rng = random.Random(seed)
    exhaustive = W.order <= max_order and W.order ** 2 <= 4 * samples
    cache = {}

    def image(w):
        key = id(w)
        if key not in cache:
            cache[key] = (w, W.to_aut(w))
        return cache[key][1]

    if exhaustive:
        pool = list(W.elements())
        pairs = itertools.product(pool, repeat=2)
    else:
        pool = [W.random_element(rng) for _ in range(min(samples, 2000))]
        pairs = ((rng.choice(pool), rng.choice(pool)) for _ in range(samples))

    hom = True
    checked = 0
    for w0, w1 in pairs:
        checked += 1
        if W.to_aut(W.compose(w0, w1)) != image(w0) * image(w1):
            hom = False
            break

    automorphisms = all(preserves_order(D.base, image(w)) for w in pool)
    if W.order <= max_order:
        listing = pool if exhaustive else list(W.elements())
        images = {W.to_aut(w).images for w in listing}
        injective = len(images) == W.order
    else:
        distinct = {(w.phi.images, tuple(g.images for g in w.eta), tuple(g.images for g in w.zeta)): image(w).images
                    for w in pool}
        injective = len(set(distinct.values())) == len(distinct)
        images = None

    surjective = None
    order_aut = None
    if images is not None and len(D) <= max_size:
        A = automorphism_group(D.base, max_size=max_size, max_order=max_order)
        order_aut = A.order
        surjective = set(A.element_tuples) == images
    return WreathReport(hom, injective, surjective, W.order, order_aut, checked, exhaustive, automorphisms)

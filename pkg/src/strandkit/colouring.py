"""Ordered colourings of curve sets and the parameters t, d, k, r.

An ordered t-colouring assigns colours {1..t} so that no two crossing curves
share a colour; the *order* of colours matters downstream (fragments are cut
at smaller-colour crossings).  The parameters:

  d  max, over curves gamma and fragments alpha of gamma, of the number of
     distinct higher-colour curves crossing alpha (fragment-local),
  k  max, over curves gamma, of the number of distinct smaller-colour curves
     crossing gamma,
  r  (2k + 1) * sum_{j=0}^{t-2} k^j, the walk weak-diameter bound.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arrangement import events_on_curve
from .errors import SceneError
from .scene import CrossingEvent, StringScene


@dataclass(frozen=True)
class OrderedColouring:
    phi: dict
    t: int

    def to_json(self) -> dict:
        return {cid: self.phi[cid] for cid in sorted(self.phi)}

    @staticmethod
    def from_json(data: dict) -> "OrderedColouring":
        phi = {str(cid): int(col) for cid, col in data.items()}
        for cid, col in phi.items():
            if col < 1:
                raise SceneError(f"colour of {cid!r} must be >= 1, got {col}")
        return OrderedColouring(phi, max(phi.values(), default=0))


@dataclass(frozen=True)
class ColouringParams:
    t: int
    d: int
    k: int
    r: int

    def to_json(self) -> dict:
        return {"t": self.t, "d": self.d, "k": self.k, "r": self.r}


def weak_diameter_bound(t: int, k: int) -> int:
    return (2 * k + 1) * sum(k ** j for j in range(t - 1))


def _adjacency(G) -> dict:
    adj = getattr(G, "adjacency", None)
    if adj is None:
        adj = G.adj
    return adj


def greedy_colouring(G, order) -> OrderedColouring:
    """First-fit colouring along the given vertex order; t <= max degree + 1."""
    adj = _adjacency(G)
    if sorted(order) != sorted(adj):
        raise SceneError("order is not a permutation of the vertices")
    phi: dict = {}
    for v in order:
        used = {phi[u] for u in adj[v] if u in phi}
        col = 1
        while col in used:
            col += 1
        phi[v] = col
    return OrderedColouring(phi, max(phi.values(), default=0))


def degeneracy_order(G) -> list:
    """Repeated minimum-degree removal; ties broken by smallest vertex id.

    The reverse order has back-degree at most the degeneracy of G.
    """
    adj = {v: set(ns) for v, ns in _adjacency(G).items()}
    order = []
    while adj:
        v = min(adj, key=lambda u: (len(adj[u]), u))
        order.append(v)
        for u in adj[v]:
            adj[u].discard(v)
        del adj[v]
    return order


def degeneracy(G) -> int:
    """Max back-degree along the reverse degeneracy order."""
    order = degeneracy_order(G)
    pos = {v: i for i, v in enumerate(order)}
    adj = _adjacency(G)
    return max((sum(1 for u in adj[v] if pos[u] > pos[v]) for v in order), default=0)


def check_ordered(colouring: OrderedColouring, events: list[CrossingEvent]) -> None:
    for e in events:
        if colouring.phi[e.curve_a] == colouring.phi[e.curve_b]:
            raise SceneError(
                f"curves {e.curve_a!r} and {e.curve_b!r} cross but share "
                f"colour {colouring.phi[e.curve_a]}")


def compute_params(scene: StringScene, events: list[CrossingEvent],
                   colouring: OrderedColouring) -> ColouringParams:
    """Exact d, k, r by enumeration over fragments and curves."""
    phi = colouring.phi
    check_ordered(colouring, events)
    d = 0
    k = 0
    for cid in scene.curve_ids():
        mine = events_on_curve(events, cid)
        my_colour = phi[cid]
        smaller = {e.other(cid) for e in mine if phi[e.other(cid)] < my_colour}
        k = max(k, len(smaller))
        # split the event sequence into fragments at smaller-colour crossings
        frag: set = set()
        for e in mine:
            other = e.other(cid)
            if phi[other] < my_colour:
                d = max(d, len(frag))
                frag = set()
            else:
                frag.add(other)
        d = max(d, len(frag))
    t = colouring.t
    return ColouringParams(t, d, k, weak_diameter_bound(t, k))


def verify_tdeg(G, colouring: OrderedColouring, d: int) -> dict:
    """Is the colouring (t, d)-degenerate on G?

    Every vertex must have at most d neighbours of strictly greater colour.
    """
    adj = _adjacency(G)
    phi = colouring.phi
    for v in sorted(adj):
        higher = sum(1 for u in adj[v] if phi[u] > phi[v])
        if higher > d:
            return {"valid": False, "counterexample": v, "higher_neighbours": higher}
    return {"valid": True, "counterexample": None}


def relabel(colouring: OrderedColouring, perm: dict) -> OrderedColouring:
    """Apply a colour permutation (old -> new); must be a bijection."""
    used = set(colouring.phi.values())
    if sorted(perm) != sorted(used) or len(set(perm.values())) != len(perm):
        raise SceneError("relabelling is not a bijection on the used colours")
    phi = {cid: perm[col] for cid, col in colouring.phi.items()}
    return OrderedColouring(phi, max(phi.values(), default=0))

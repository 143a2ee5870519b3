"""Minor models in strong products (C^phi - E_C) x K_{d+1}, with checkers.

The model sends each curve's vertex to the branch set
mu(v) = {(x, lambda_x(v)) : x in W_v \\ E_C} where lambda_x injectively
assigns copies to the curves whose walks visit x.  The checkers are
independent of the builder: verify_model re-derives all three model clauses
by direct graph search, and the distance checks measure BFS distances on the
coloured planarisation itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantError, SceneError
from .graph import Graph, bfs_distances
from .planarise import ColouredPlanarisation


@dataclass
class MinorModel:
    mu: dict              # target vertex -> frozenset of (host vertex, copy)
    host: Graph           # the host graph (first coordinate)
    copies: int           # size of the clique factor

    def product_adjacent(self, a, b) -> bool:
        """Adjacency in host x K_copies (strong product)."""
        (ha, ca), (hb, cb) = a, b
        if ha == hb:
            return ca != cb
        return self.host.has_edge(ha, hb)

    def projection(self, v) -> set:
        return {h for h, _ in self.mu[v]}

    def to_json(self) -> dict:
        return {v: sorted([h, c] for h, c in self.mu[v]) for v in sorted(self.mu)}


def product_graph(host: Graph, copies: int) -> Graph:
    """Materialised strong product host x K_copies."""
    g = Graph()
    for v in host.vertices():
        for i in range(1, copies + 1):
            g.add_vertex((v, i))
    for v in host.vertices():
        for i in range(1, copies + 1):
            for j in range(i + 1, copies + 1):
                g.add_edge((v, i), (v, j))
    for u, v in host.edges():
        for i in range(1, copies + 1):
            for j in range(1, copies + 1):
                g.add_edge((u, i), (v, j))
    return g


def host_without_endpoints(cp: ColouredPlanarisation) -> Graph:
    g = cp.graph()
    for v in sorted(cp.endpoints):
        g.remove_vertex(v)
    return g


def build_model(cp: ColouredPlanarisation, params) -> MinorModel:
    """Branch sets B_x with injective copy assignment in curve-id order."""
    d = params.d
    host = host_without_endpoints(cp)
    b: dict = {}
    for cid in sorted(cp.walks):
        for x in cp.walks[cid]:
            if x not in cp.endpoints:
                b.setdefault(x, set()).add(cid)
    lam: dict = {}
    for x in sorted(b):
        if len(b[x]) > d + 1:
            raise InvariantError(f"parameter d understated at vertex {x!r}: "
                                 f"{len(b[x])} curves > d+1 = {d + 1}")
        lam[x] = {cid: i + 1 for i, cid in enumerate(sorted(b[x]))}
    mu = {}
    for cid in sorted(cp.walks):
        mu[cid] = frozenset((x, lam[x][cid]) for x in cp.walks[cid]
                            if x not in cp.endpoints)
    model = MinorModel(mu, host, d + 1)
    for cid in sorted(mu):
        if model.projection(cid) != set(cp.walks[cid]) - cp.endpoints:
            raise InvariantError(f"projection of mu({cid!r}) is not W \\ E_C")
    return model


def verify_model(model: MinorModel, G) -> dict:
    """Check the three model clauses independently of the builder."""
    mu = model.mu
    verts = sorted(getattr(G, "adjacency", None) or G.adj)
    if sorted(mu) != verts:
        return {"valid": False, "violated_clause": "domain",
                "detail": "branch sets do not cover V(G) exactly"}
    for v in verts:
        if not mu[v]:
            return {"valid": False, "violated_clause": "non-empty", "detail": v}
    seen: dict = {}
    for v in verts:
        for pv in mu[v]:
            if pv in seen:
                return {"valid": False, "violated_clause": "disjoint",
                        "detail": f"{pv} in mu({seen[pv]!r}) and mu({v!r})"}
            seen[pv] = v
    for v in verts:
        if not _connected_in_product(model, mu[v]):
            return {"valid": False, "violated_clause": "connected", "detail": v}
    adj = getattr(G, "adjacency", None) or G.adj
    for v in verts:
        for w in sorted(adj[v]):
            if w <= v:
                continue
            if not any(model.product_adjacent(a, b) for a in mu[v] for b in mu[w]):
                return {"valid": False, "violated_clause": "edge-coverage",
                        "detail": f"{v}{w}"}
    return {"valid": True, "violated_clause": None, "detail": None}


def _connected_in_product(model: MinorModel, branch: frozenset) -> bool:
    branch = set(branch)
    start = min(branch)
    stack = [start]
    seen = {start}
    while stack:
        a = stack.pop()
        for b in branch - seen:
            if model.product_adjacent(a, b):
                seen.add(b)
                stack.append(b)
    return seen == branch


def walk_weak_diameter(cp: ColouredPlanarisation, params) -> dict:
    """Max pairwise distance inside each walk, measured in C^phi.

    Endpoint vertices have degree 1, so distances between non-endpoint
    vertices are the same whether or not E_C is present; the value is
    asserted against the bound r = (2k+1) sum k^j.
    """
    g = cp.graph()
    out = {}
    for cid in sorted(cp.walks):
        inner = sorted(set(cp.walks[cid]) - cp.endpoints)
        diam = 0
        for x in inner:
            dist = bfs_distances(g, [x])
            for y in inner:
                if y not in dist:
                    raise InvariantError(f"walk of {cid!r} disconnected in C^phi")
                diam = max(diam, dist[y])
        if diam > params.r:
            raise InvariantError(
                f"walk weak diameter of {cid!r} is {diam} > r = {params.r}")
        out[cid] = diam
    return out


def grounded_distance_check(cp: ColouredPlanarisation, Y) -> int:
    """Max over non-endpoint vertices of the distance to Y; asserted <= t-1.

    Y must contain at least one endpoint of every curve.
    """
    Y = set(Y)
    for cid in sorted(cp.walks):
        ends = {f"e:{cid}:0", f"e:{cid}:1"}
        if not ends & Y:
            raise SceneError(f"curve {cid!r} has no endpoint in Y")
    if not Y <= cp.endpoints:
        raise SceneError("Y contains non-endpoint vertices")
    g = cp.graph()
    dist = bfs_distances(g, Y)
    t = max(cp.phi.values())
    worst = 0
    for x in g.vertices():
        if x in cp.endpoints:
            continue
        if x not in dist:
            raise InvariantError(f"vertex {x!r} unreachable from Y")
        worst = max(worst, dist[x])
    if worst > t - 1:
        raise InvariantError(f"grounded distance {worst} exceeds t-1 = {t - 1}")
    return worst

"""Tree decompositions, layerings, and the outerstring width pipeline.

Constructions here are certified: every emitted decomposition is re-checked
by verify_td (independent of how it was built), and pipeline widths are
asserted against the closed-form bounds they are supposed to satisfy.  An
exact brute-force treewidth oracle (<= 16 vertices) backs the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .arrangement import compute_arrangement, intersection_graph
from .colouring import compute_params
from .errors import CheckFailure, InvariantError, SceneError
from .embedding import EmbeddedGraph
from .graph import Graph, bfs_distances, connected_components, eccentricity
from .planarise import ColouredPlanarisation, coloured_planarisation, euler_genus, planarise
from .product_model import MinorModel, build_model, product_graph


@dataclass
class TreeDecomposition:
    nodes: list                      # node ids
    edges: list                      # tree edges (pairs of node ids)
    bags: dict                       # node id -> frozenset of target vertices

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags.values()), default=0) - 1

    def to_json(self) -> dict:
        return {
            "nodes": list(self.nodes),
            "edges": [sorted(e) for e in self.edges],
            "bags": {str(n): sorted(str(v) for v in self.bags[n]) for n in self.nodes},
            "width": self.width,
        }


@dataclass
class Layering:
    layers: list                     # ordered list of vertex lists

    def index(self) -> dict:
        return {v: i for i, layer in enumerate(self.layers) for v in layer}

    def to_json(self) -> dict:
        return {"layers": [sorted(str(v) for v in layer) for layer in self.layers]}


def _vertices_and_edges(G):
    adj = getattr(G, "adjacency", None)
    if adj is None:
        adj = G.adj
    verts = sorted(adj)
    edges = [(u, v) for u in verts for v in sorted(adj[u]) if u < v]
    return verts, edges, adj


def verify_td(td: TreeDecomposition, G) -> dict:
    """Independent validity check of a tree decomposition of G."""
    verts, edges, _ = _vertices_and_edges(G)
    if sorted(td.bags) != sorted(td.nodes):
        return {"valid": False, "width": td.width, "reason": "bags/nodes mismatch"}
    tree = Graph(vertices=td.nodes, edges=td.edges)
    if len(td.nodes) != len(tree) or (td.nodes and len(connected_components(tree)) != 1):
        return {"valid": False, "width": td.width, "reason": "tree not connected"}
    if len(td.edges) != max(len(td.nodes) - 1, 0):
        return {"valid": False, "width": td.width, "reason": "tree has a cycle"}
    where: dict = {v: [] for v in verts}
    for n in td.nodes:
        for v in td.bags[n]:
            if v not in where:
                return {"valid": False, "width": td.width,
                        "reason": f"bag vertex {v!r} not in G"}
            where[v].append(n)
    for v in verts:
        if not where[v]:
            return {"valid": False, "width": td.width, "reason": f"vertex {v!r} uncovered"}
        sub = set(where[v])
        start = next(iter(sub))
        seen = {start}
        stack = [start]
        while stack:
            n = stack.pop()
            for m in tree.adj[n]:
                if m in sub and m not in seen:
                    seen.add(m)
                    stack.append(m)
        if seen != sub:
            return {"valid": False, "width": td.width,
                    "reason": f"bags of {v!r} not connected in tree"}
    bagsets = list(td.bags.values())
    for u, v in edges:
        if not any(u in b and v in b for b in bagsets):
            return {"valid": False, "width": td.width,
                    "reason": f"edge {u!r}{v!r} uncovered"}
    return {"valid": True, "width": td.width, "reason": None}


def verify_layering(layering: Layering, G) -> dict:
    verts, edges, _ = _vertices_and_edges(G)
    idx = layering.index()
    if sorted(idx) != verts:
        return {"valid": False, "reason": "layers are not a partition of V(G)"}
    for u, v in edges:
        if abs(idx[u] - idx[v]) > 1:
            return {"valid": False, "reason": f"edge {u!r}{v!r} spans layers "
                                              f"{idx[u]} and {idx[v]}"}
    return {"valid": True, "reason": None}


def bfs_layering(G, roots) -> Layering:
    verts, _, adj = _vertices_and_edges(G)
    g = Graph(vertices=verts)
    for u in verts:
        for v in adj[u]:
            g.add_edge(u, v)
    dist = bfs_distances(g, roots)
    missing = [v for v in verts if v not in dist]
    if missing:
        raise SceneError(f"vertex {missing[0]!r} unreachable from the roots")
    layers: list = [[] for _ in range(max(dist.values()) + 1)]
    for v in verts:
        layers[dist[v]].append(v)
    return Layering(layers)


# ------------------------------------------------------- exact treewidth oracle

def exact_treewidth(G) -> int:
    return exact_treewidth_decomposition(G)[0]


def exact_treewidth_decomposition(G) -> tuple:
    """Exact treewidth with a witness decomposition, |V| <= 16.

    Branch-and-bound over elimination orders, memoised on the eliminated
    set; the cost of eliminating v after S is the number of vertices outside
    S reachable from v through S.
    """
    verts, edges, adj = _vertices_and_edges(G)
    n = len(verts)
    if n > 16:
        raise SceneError(f"exact treewidth oracle limited to 16 vertices, got {n}")
    if n == 0:
        return 0, TreeDecomposition([1], [], {1: frozenset()})
    comps = connected_components(Graph(vertices=verts, edges=edges))
    if len(comps) > 1:
        width = 0
        parts = []
        for comp in comps:
            sub = Graph(vertices=comp)
            for u, v in edges:
                if u in comp:
                    sub.add_edge(u, v)
            w, td = exact_treewidth_decomposition(sub)
            width = max(width, w)
            parts.append(td)
        return width, _join_decompositions(parts)

    idx = {v: i for i, v in enumerate(verts)}
    nbr = [0] * n
    for u, v in edges:
        nbr[idx[u]] |= 1 << idx[v]
        nbr[idx[v]] |= 1 << idx[u]
    full = (1 << n) - 1

    def q_set(S: int, v: int) -> int:
        """Vertices outside S u {v} reachable from v through S."""
        reach = 0
        frontier = nbr[v]
        seen = 1 << v
        while frontier:
            bit = frontier & -frontier
            frontier ^= bit
            if seen & bit:
                continue
            seen |= bit
            if S & bit:
                frontier |= nbr[bit.bit_length() - 1] & ~seen
            else:
                reach |= bit
        return reach

    ub_order = _min_fill_order(n, nbr)
    best = _order_width(n, nbr, ub_order, q_set)
    best_order = list(ub_order)
    memo: dict = {}

    def search(S: int, maxq: int, order: list) -> None:
        nonlocal best, best_order
        if maxq >= best:
            return
        if S == full:
            best = maxq
            best_order = list(order)
            return
        prev = memo.get(S)
        if prev is not None and prev <= maxq:
            return
        memo[S] = maxq
        cand = []
        for v in range(n):
            if S & (1 << v):
                continue
            qs = q_set(S, v)
            qn = bin(qs).count("1")
            # a vertex whose q-set is a clique can always go first
            if _is_clique(qs, nbr):
                order.append(v)
                search(S | (1 << v), max(maxq, qn), order)
                order.pop()
                return
            cand.append((qn, v, qs))
        cand.sort()
        for qn, v, _ in cand:
            order.append(v)
            search(S | (1 << v), max(maxq, qn), order)
            order.pop()

    search(0, 0, [])
    td = _td_from_elimination(verts, idx, nbr, best_order)
    report = verify_td(td, G)
    if not report["valid"] or td.width != best:
        raise InvariantError(f"oracle witness broken: {report['reason']}")
    return best, td


def _is_clique(mask: int, nbr: list) -> bool:
    m = mask
    while m:
        bit = m & -m
        m ^= bit
        v = bit.bit_length() - 1
        if (mask & ~(1 << v)) & ~nbr[v]:
            return False
    return True


def _min_fill_order(n: int, nbr: list) -> list:
    adj = list(nbr)
    alive = (1 << n) - 1
    order = []
    for _ in range(n):
        best_v, best_fill = -1, None
        for v in range(n):
            if not alive & (1 << v):
                continue
            ns = adj[v] & alive
            fill = 0
            m = ns
            while m:
                bit = m & -m
                m ^= bit
                u = bit.bit_length() - 1
                fill += bin(ns & ~adj[u] & ~(1 << u)).count("1")
            if best_fill is None or fill < best_fill:
                best_v, best_fill = v, fill
        ns = adj[best_v] & alive
        m = ns
        while m:
            bit = m & -m
            m ^= bit
            adj[bit.bit_length() - 1] |= ns & ~bit
        alive &= ~(1 << best_v)
        order.append(best_v)
    return order


def _order_width(n: int, nbr: list, order: list, q_set) -> int:
    S = 0
    width = 0
    for v in order:
        width = max(width, bin(q_set(S, v)).count("1"))
        S |= 1 << v
    return width


def _td_from_elimination(verts: list, idx: dict, nbr: list, order: list) -> TreeDecomposition:
    n = len(verts)
    adj = list(nbr)
    alive = (1 << n) - 1
    elim_pos = {v: i for i, v in enumerate(order)}
    bags = {}
    cliques = {}
    for v in order:
        ns = adj[v] & alive & ~(1 << v)
        cliques[v] = ns
        bags[v] = ns | (1 << v)
        m = ns
        while m:
            bit = m & -m
            m ^= bit
            adj[bit.bit_length() - 1] |= ns & ~bit
        alive &= ~(1 << v)
    nodes = list(range(1, n + 1))
    edges = []
    for i, v in enumerate(order):
        ns = cliques[v]
        if ns:
            succ = min((elim_pos[u.bit_length() - 1] for u in _bits(ns)),
                       key=lambda p: p)
            edges.append((i + 1, succ + 1))
        elif i + 1 < n:
            edges.append((i + 1, i + 2))
    bag_map = {i + 1: frozenset(verts[b.bit_length() - 1] for b in _bits(bags[v]))
               for i, v in enumerate(order)}
    return TreeDecomposition(nodes, edges, bag_map)


def _bits(mask: int):
    while mask:
        bit = mask & -mask
        mask ^= bit
        yield bit


def _join_decompositions(parts: list) -> TreeDecomposition:
    nodes = []
    edges = []
    bags = {}
    offset = 0
    anchors = []
    for td in parts:
        remap = {n: n + offset for n in td.nodes}
        nodes.extend(remap[n] for n in td.nodes)
        edges.extend((remap[a], remap[b]) for a, b in td.edges)
        for n in td.nodes:
            bags[remap[n]] = td.bags[n]
        anchors.append(remap[td.nodes[0]])
        offset += max(td.nodes)
    for a, b in zip(anchors, anchors[1:]):
        edges.append((a, b))
    return TreeDecomposition(nodes, edges, bags)


# ---------------------------------------------------- planar radius -> treewidth

def radius_decomposition(G, root) -> TreeDecomposition:
    """Tree decomposition of a connected planar graph, width <= 3r + 1.

    r is the eccentricity of the root.  Construction: planar embedding,
    triangulate every face down to <= 3 distinct corners, BFS tree from the
    root, one bag per face (union of the corners' root paths), and the dual
    spanning tree induced by non-BFS-tree edges as the decomposition tree.
    """
    verts, edges, _ = _vertices_and_edges(G)
    if not verts:
        raise SceneError("empty graph")
    if len(verts) == 1:
        return TreeDecomposition([1], [], {1: frozenset(verts)})
    g = Graph(vertices=verts, edges=edges)
    if len(connected_components(g)) != 1:
        raise SceneError("radius decomposition needs a connected graph")
    r = eccentricity(g, root)

    emb = _planar_embedding(verts, edges)
    if emb.euler_genus() != 0:
        raise InvariantError("embedding is not plane")
    _triangulate(emb)

    parent = _bfs_parents(g, root)

    def root_path(v):
        path = []
        while v is not None:
            path.append(v)
            v = parent[v]
        return path

    faces = emb.trace_faces_oriented()
    bags = {}
    for fi, face in enumerate(faces):
        corners = sorted({emb.dart_tail(d) for d in face})
        bag = set()
        for c in corners:
            bag.update(root_path(c))
        bags[fi + 1] = frozenset(bag)

    # all-positive plane embedding: every dart lies on exactly one traced face
    face_of = {}
    for fi, face in enumerate(faces):
        for d in face:
            face_of[d] = fi + 1

    tree_pairs = {tuple(sorted((v, p))) for v, p in parent.items() if p is not None}
    chosen = {}
    for eid in sorted(emb.edge_ends, key=repr):
        pair = tuple(sorted(emb.edge_ends[eid]))
        if pair in tree_pairs and pair not in chosen:
            chosen[pair] = eid
    dual_edges = []
    for eid in sorted(emb.edge_ends, key=repr):
        pair = tuple(sorted(emb.edge_ends[eid]))
        if chosen.get(pair) == eid:
            continue
        f1 = face_of[(eid, 0)]
        f2 = face_of[(eid, 1)]
        if f1 == f2:
            raise InvariantError("non-tree edge with one face (bridge?)")
        dual_edges.append((f1, f2))
    if len(dual_edges) != len(faces) - 1:
        raise InvariantError("dual edge count is not faces - 1")

    td = TreeDecomposition(list(bags), dual_edges, bags)
    report = verify_td(td, G)
    if not report["valid"]:
        raise InvariantError(f"radius decomposition invalid: {report['reason']}")
    if td.width > 3 * r + 1:
        raise InvariantError(f"radius decomposition width {td.width} > 3r+1 = {3 * r + 1}")
    return td


def _bfs_parents(g: Graph, root) -> dict:
    from collections import deque
    parent = {root: None}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in sorted(g.adj[v]):
            if w not in parent:
                parent[w] = v
                queue.append(w)
    return parent


def _planar_embedding(verts, edges) -> EmbeddedGraph:
    import networkx as nx
    ng = nx.Graph()
    ng.add_nodes_from(verts)
    ng.add_edges_from(edges)
    ok, pe = nx.check_planarity(ng)
    if not ok:
        raise SceneError("graph is not planar")
    g = EmbeddedGraph()
    key = {}
    for u, v in edges:
        key[(u, v)] = key[(v, u)] = ("e", u, v)
    for u, v in edges:
        g.edge_ends[("e", u, v)] = (u, v)
        g.signature[("e", u, v)] = 1
    for v in verts:
        rot = []
        for w in pe.neighbors_cw_order(v):
            eid = key[(v, w)]
            side = 0 if g.edge_ends[eid][0] == v else 1
            rot.append((eid, side))
        g.rotation[v] = rot
    g.check()
    return g


def _triangulate(g: EmbeddedGraph) -> None:
    """Chord faces until every face has at most 3 distinct corners."""
    serial = 0
    while True:
        target = None
        for face in g.trace_faces_oriented():
            corners = [g.dart_tail(d) for d in face]
            if len(set(corners)) > 3:
                target = (face, corners)
                break
        if target is None:
            return
        face, corners = target
        L = len(face)
        found = None
        for i in range(L):
            for j in range(i + 2, L):
                if i == 0 and j == L - 1:
                    continue
                if corners[i] != corners[j]:
                    found = (i, j)
                    break
            if found:
                break
        if found is None:
            raise InvariantError("face with >3 distinct corners but no chord slot")
        serial += 1
        g.add_chord(face, found[0], found[1], ("chord", serial))


# ------------------------------------------------------------------------ lifts

def product_lift(td: TreeDecomposition, n: int) -> TreeDecomposition:
    """Lift a td of H to H x K_n by multiplying every bag by the n copies."""
    if n < 1:
        raise SceneError(f"clique factor must be >= 1, got {n}")
    bags = {node: frozenset((v, i) for v in td.bags[node] for i in range(1, n + 1))
            for node in td.nodes}
    return TreeDecomposition(list(td.nodes), list(td.edges), bags)


def project_back(td: TreeDecomposition) -> TreeDecomposition:
    """Drop the copy coordinate; inverse of product_lift up to bag equality."""
    bags = {node: frozenset(v for v, _ in td.bags[node]) for node in td.nodes}
    return TreeDecomposition(list(td.nodes), list(td.edges), bags)


def minor_lift(td: TreeDecomposition, model: MinorModel) -> TreeDecomposition:
    """Bag-lift a host decomposition through a minor model."""
    membership: dict = {}
    for v in sorted(model.mu):
        for pv in model.mu[v]:
            membership.setdefault(pv, set()).add(v)
    bags = {}
    for node in td.nodes:
        bag = set()
        for pv in td.bags[node]:
            bag |= membership.get(pv, set())
        bags[node] = frozenset(bag)
    return TreeDecomposition(list(td.nodes), list(td.edges), bags)


# --------------------------------------------------------- outerstring pipeline

def grounded_quotient(cp: ColouredPlanarisation, scene) -> tuple:
    """C^phi_0: per disk, identify the grounded endpoints into a center w_i
    and delete the remaining endpoint vertices.  Returns (graph, centers).
    """
    g = cp.graph()
    centers = {}
    for did in sorted(scene.disks):
        centers[did] = f"w:{did}"
    grounded_of: dict = {}
    for cid in scene.curve_ids():
        gr = scene.curves[cid].grounded
        if gr is None:
            raise SceneError(f"curve {cid!r} is not grounded")
        grounded_of[f"e:{cid}:{gr[1]}"] = centers[gr[0]]
    out = Graph()
    for w in centers.values():
        out.add_vertex(w)
    for v in g.vertices():
        if v not in cp.endpoints:
            out.add_vertex(v)
    for u, v in g.edges():
        uu = grounded_of.get(u, u)
        vv = grounded_of.get(v, v)
        if uu in cp.endpoints or vv in cp.endpoints:
            continue   # edge to a deleted (ungrounded) endpoint
        out.add_edge(uu, vv)
    return out, sorted(centers.values())


def outerstring_decomposition(scene, colouring) -> dict:
    """Constructed treewidth certificate for a grounded one-disk scene.

    Pipeline: coloured planarisation -> quotient C^phi_0 (radius <= t-1 from
    the disk center) -> radius decomposition -> clique-product lift by d+1 ->
    bag lift through the minor model.  Width asserted <= (3t-1)(d+1)-1.
    """
    if len(scene.disks) != 1:
        raise SceneError(f"outerstring pipeline needs exactly 1 disk, "
                         f"got {len(scene.disks)}")
    events = compute_arrangement(scene)
    G = intersection_graph(scene, events)
    plan = planarise(scene, events)
    cp = coloured_planarisation(plan, colouring)
    genus = euler_genus(cp)
    if genus != 0:
        raise SceneError(f"outerstring pipeline needs genus 0, got {genus}")
    params = compute_params(scene, events, colouring)
    t, d = params.t, params.d

    quotient, centers = grounded_quotient(cp, scene)
    w = centers[0]
    ecc = eccentricity(quotient, w)
    if ecc > t - 1:
        raise InvariantError(f"quotient radius {ecc} exceeds t-1 = {t - 1}")

    td0 = radius_decomposition(quotient, w)
    tdp = product_lift(td0, d + 1)
    model = build_model(cp, params)
    td = minor_lift(tdp, model)
    report = verify_td(td, G)
    if not report["valid"]:
        raise InvariantError(f"outerstring td invalid: {report['reason']}")
    bound = bounds("planar-outerstring", {"t": t, "d": d})
    if td.width > bound:
        raise InvariantError(f"outerstring width {td.width} > bound {bound}")
    return {"td": td, "width": td.width, "bound": bound, "valid": True,
            "t": t, "d": d, "genus": genus, "quotient_radius": ecc}


def gc_outerstring_report(scene, colouring) -> dict:
    """Bound + certificate for grounded scenes with c disks on genus-g data.

    Always verifies the c-center cover at radius t-1 and computes the genus;
    a constructed decomposition is attached only in the plane single-disk
    case, otherwise the closed-form bound stands alone.
    """
    events = compute_arrangement(scene)
    plan = planarise(scene, events)
    cp = coloured_planarisation(plan, colouring)
    params = compute_params(scene, events, colouring)
    t, d = params.t, params.d
    c = len(scene.disks)
    genus = euler_genus(cp)

    quotient, centers = grounded_quotient(cp, scene)
    dist = bfs_distances(quotient, centers)
    cover_radius = 0
    for v in quotient.vertices():
        if v in centers:
            continue
        if v not in dist:
            raise InvariantError(f"vertex {v!r} unreachable from the disk centers")
        cover_radius = max(cover_radius, dist[v])
    if cover_radius > t - 1:
        raise InvariantError(f"center cover radius {cover_radius} > t-1 = {t - 1}")

    bound = bounds("genus-outerstring", {"t": t, "d": d, "c": c, "g": genus})
    report = {"bound": bound, "t": t, "d": d, "c": c, "genus": genus,
              "cover_radius": cover_radius, "constructed": False}
    if genus == 0 and c == 1:
        inner = outerstring_decomposition(scene, colouring)
        report["constructed"] = True
        report["td"] = inner["td"]
        report["width"] = inner["width"]
        report["planar_bound"] = inner["bound"]
    return report


def merge_layers(td: TreeDecomposition, layering: Layering) -> dict:
    """Layered width of a decomposition and the implied treewidth bound."""
    idx = layering.index()
    lw = 0
    for node in td.nodes:
        per: dict = {}
        for v in td.bags[node]:
            per[idx[v]] = per.get(idx[v], 0) + 1
        lw = max(lw, max(per.values(), default=0))
    s = len(layering.layers)
    return {"layered_width": lw, "layers": s, "width_bound": s * lw - 1}


def ltw_lift(host_td: TreeDecomposition, host_layering: Layering,
             model: MinorModel, r: int, genus: int = 0) -> dict:
    """Lift (td, layering) of the product host through a weak r-shallow model.

    The G-layer of a vertex is its branch-set center's host layer divided
    into blocks of 2r+1; shallowness makes consecutive centers differ by at
    most one block.  At genus 0 the layered width is asserted against
    3(4r+1)(d+1).
    """
    prod = product_graph(model.host, model.copies)
    centers = {}
    for v in sorted(model.mu):
        branch = sorted(model.mu[v])
        best = None
        for c in branch:
            dist = bfs_distances(prod, [c])
            worst = max((dist.get(b, r + 1) for b in branch), default=0)
            if worst <= r and (best is None or c < best[1]):
                best = (worst, c)
                break
        if best is None:
            raise CheckFailure(f"branch set of {v!r} is not weakly {r}-shallow")
        centers[v] = best[1]

    td = minor_lift(host_td, model)
    host_idx = host_layering.index()
    block = {v: host_idx[centers[v]] // (2 * r + 1) for v in centers}
    n_blocks = max(block.values(), default=0) + 1
    layers: list = [[] for _ in range(n_blocks)]
    for v in sorted(block):
        layers[block[v]].append(v)
    layering = Layering(layers)

    lw = merge_layers(td, layering)["layered_width"]
    if genus == 0:
        cap = 3 * (4 * r + 1) * model.copies
        if lw > cap:
            raise InvariantError(f"lifted layered width {lw} > 3(4r+1)(d+1) = {cap}")
    return {"td": td, "layering": layering, "layered_width": lw}


def ltw_pipeline(scene, colouring) -> dict:
    """End-to-end layered-width certificate for a genus-0 scene.

    Builds the model in (C^phi - E_C) x K_{d+1}, decomposes the host by
    radius from its smallest vertex, lifts td and layering through the model,
    and returns the lifted pair with its layered width.
    """
    events = compute_arrangement(scene)
    G = intersection_graph(scene, events)
    plan = planarise(scene, events)
    cp = coloured_planarisation(plan, colouring)
    genus = euler_genus(cp)
    params = compute_params(scene, events, colouring)
    model = build_model(cp, params)

    host = model.host
    if len(connected_components(host)) != 1:
        raise SceneError("ltw pipeline needs a connected crossing structure")
    root = min(host.vertices())
    host_td = radius_decomposition(host, root) if genus == 0 else None
    if host_td is None:
        raise SceneError(f"ltw pipeline needs genus 0, got {genus}")
    host_lay = bfs_layering(host, [root])
    prod_td = product_lift(host_td, model.copies)
    prod_layers = [[(v, i) for v in layer for i in range(1, model.copies + 1)]
                   for layer in host_lay.layers]
    lifted = ltw_lift(prod_td, Layering(prod_layers), model, params.r, genus)
    report = verify_td(lifted["td"], G)
    if not report["valid"]:
        raise InvariantError(f"lifted td invalid: {report['reason']}")
    lrep = verify_layering(lifted["layering"], G)
    if not lrep["valid"]:
        raise InvariantError(f"lifted layering invalid: {lrep['reason']}")
    lifted["params"] = params
    lifted["genus"] = genus
    lifted["bound"] = bounds("ltw-shallow", {"r": params.r, "d": params.d, "g": genus})
    return lifted


# ------------------------------------------------------------- bound arithmetic

def _delta_string(big_delta: int) -> int:
    # localisation: a degree-D vertex's curve needs at most 2^D (D-1) + 1 crossings
    return 2 ** big_delta * (big_delta - 1) + 1


_BOUNDS = {
    "planar-outerstring":
        lambda p: (3 * p["t"] - 1) * (p["d"] + 1) - 1,
    "genus-outerstring":
        lambda p: (2 * p["t"] - 1) * p["c"] * (2 * p["g"] + 3) * (p["d"] + 1) - 1,
    "outerstring-maxdegree":
        lambda p: (2 * p["delta"] + 1) * (p["delta"] + 1) * p["c"] * (2 * p["g"] + 3) - 1,
    "localised":
        lambda p: _delta_string(p["delta"]),
    "ss-crossing":
        lambda p: 2 ** p["m"] * p["m"] ** 2,
    "string-rtw":
        lambda p: 2 * max(2 * p["g"], 3) * (_delta_string(p["delta"]) + 1) ** 2
        * math.comb(2 * (_delta_string(p["delta"]) // 2) + 4, 3) - 1,
    "ps-maxdegree":
        lambda p: 6 * (_delta_string(p["delta"]) + 1) ** 2
        * math.comb(2 * (_delta_string(p["delta"]) // 2) + 4, 3) - 1,
    "rtw-main":
        lambda p: (4 * p["r"] + 1) * p["c"] * (
            (2 * (8 * p["r"] + 1) * p["c"] + 3)
            * (2 * p["g"] + 7) ** ((6 * p["r"] + 2) * (2 * p["g"] + 5) - 4) - 1) - 1,
    "ltw-shallow":
        lambda p: (4 * p["r"] + 1) * (p["d"] + 1) * (2 * p["g"] + 3),
    "tw-from-ltw":
        lambda p: (2 * p["r"] + 1) * p["c"] * p["ltw"] - 1,
    "product-tw":
        lambda p: (p["tw"] + 1) * p["n"] - 1,
    "planar-radius-tw":
        lambda p: 3 * p["r"] + 1,
    "weak-diameter":
        lambda p: (2 * p["k"] + 1) * sum(p["k"] ** j for j in range(p["t"] - 1)),
}


def bounds(theorem: str, params: dict) -> int:
    """Exact integer evaluation of a named closed-form bound."""
    if theorem not in _BOUNDS:
        raise SceneError(f"unknown theorem id {theorem!r}; known: "
                         f"{', '.join(sorted(_BOUNDS))}")
    try:
        return _BOUNDS[theorem]({k: int(v) for k, v in params.items()})
    except KeyError as exc:
        raise SceneError(f"theorem {theorem!r} missing parameter {exc}") from exc


# -------------------------------------------------------------------- emitters

def td_to_pace(td: TreeDecomposition, G) -> str:
    """PACE-style text: header, bag lines, tree edge lines; bit-exact."""
    verts, _, _ = _vertices_and_edges(G)
    vid = {v: i + 1 for i, v in enumerate(sorted(verts, key=str))}
    nid = {n: i + 1 for i, n in enumerate(sorted(td.nodes, key=str))}
    lines = [f"s td {len(td.nodes)} {td.width + 1} {len(verts)}"]
    for n in sorted(td.nodes, key=str):
        ids = sorted(vid[v] for v in td.bags[n])
        lines.append("b " + " ".join(str(x) for x in [nid[n]] + ids))
    for a, b in sorted((min(nid[a], nid[b]), max(nid[a], nid[b]))
                       for a, b in td.edges):
        lines.append(f"{a} {b}")
    return "\n".join(lines) + "\n"

"""Minimal simple-graph utilities shared across modules.

Vertices are arbitrary hashable, sortable ids.  All iteration orders are
sorted so downstream constructions are deterministic.
"""

from __future__ import annotations

from collections import deque
from typing import Hashable, Iterable


class Graph:
    """Undirected simple graph as dict-of-sets."""

    def __init__(self, vertices: Iterable = (), edges: Iterable = ()):
        self.adj: dict = {}
        for v in vertices:
            self.add_vertex(v)
        for u, v in edges:
            self.add_edge(u, v)

    def add_vertex(self, v) -> None:
        self.adj.setdefault(v, set())

    def add_edge(self, u, v) -> None:
        if u == v:
            return
        self.add_vertex(u)
        self.add_vertex(v)
        self.adj[u].add(v)
        self.adj[v].add(u)

    def remove_vertex(self, v) -> None:
        for u in self.adj.pop(v, set()):
            self.adj[u].discard(v)

    def vertices(self) -> list:
        return sorted(self.adj)

    def edges(self) -> list[tuple]:
        out = []
        for u in sorted(self.adj):
            for v in sorted(self.adj[u]):
                if u < v:
                    out.append((u, v))
        return out

    def has_edge(self, u, v) -> bool:
        return v in self.adj.get(u, ())

    def degree(self, v) -> int:
        return len(self.adj[v])

    def neighbours(self, v) -> list:
        return sorted(self.adj[v])

    def __len__(self) -> int:
        return len(self.adj)

    def copy(self) -> "Graph":
        g = Graph()
        g.adj = {v: set(ns) for v, ns in self.adj.items()}
        return g

    def subgraph(self, keep: Iterable) -> "Graph":
        keep = set(keep)
        g = Graph(vertices=sorted(keep))
        for u, v in self.edges():
            if u in keep and v in keep:
                g.add_edge(u, v)
        return g

    def max_degree(self) -> int:
        return max((len(ns) for ns in self.adj.values()), default=0)


def bfs_distances(g: Graph, sources: Iterable) -> dict:
    """Multi-source BFS distance map; unreachable vertices are absent."""
    dist = {}
    queue = deque()
    for s in sorted(set(sources)):
        dist[s] = 0
        queue.append(s)
    while queue:
        v = queue.popleft()
        for w in sorted(g.adj[v]):
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def connected_components(g: Graph) -> list[list]:
    seen: set = set()
    comps = []
    for v in g.vertices():
        if v in seen:
            continue
        comp = sorted(bfs_distances(g, [v]))
        seen.update(comp)
        comps.append(comp)
    return comps


def is_connected_subset(g: Graph, subset: Iterable) -> bool:
    subset = set(subset)
    if not subset:
        return False
    start = min(subset)
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in g.adj[v]:
            if w in subset and w not in seen:
                seen.add(w)
                queue.append(w)
    return seen == subset


def eccentricity(g: Graph, v) -> int:
    dist = bfs_distances(g, [v])
    if len(dist) != len(g):
        raise ValueError(f"graph not connected from {v!r}")
    return max(dist.values(), default=0)


def graph_radius(g: Graph) -> int:
    return min(eccentricity(g, v) for v in g.vertices())

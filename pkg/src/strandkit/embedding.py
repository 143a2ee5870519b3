"""Combinatorial embeddings: rotation systems with edge signatures.

A multigraph embedding is stored as darts.  Edge e = (u, v) has two darts:
(e, 0) pointing u -> v listed in the rotation at u, and (e, 1) pointing
v -> u listed at v.  Loops contribute both darts to the same rotation.
Signatures of -1 mark orientation-reversing edges, so non-orientable
embeddings (odd Euler genus) are representable.

Faces are traced as orbits of oriented darts; the Euler genus follows from
Euler's formula per connected component.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvariantError

Dart = tuple  # (edge_id, side)


def reverse(dart: Dart) -> Dart:
    return (dart[0], 1 - dart[1])


@dataclass
class EmbeddedGraph:
    # edge id -> (u, v); orientation of the pair fixes which dart is side 0
    edge_ends: dict = field(default_factory=dict)
    signature: dict = field(default_factory=dict)
    rotation: dict = field(default_factory=dict)   # vertex -> list of out-darts
    edge_label: dict = field(default_factory=dict)  # edge id -> owning curve(s) etc.

    # ------------------------------------------------------------- structure

    def add_vertex(self, v) -> None:
        self.rotation.setdefault(v, [])

    def add_edge(self, eid, u, v, sig: int = 1, label=None) -> None:
        """Append an edge; darts are appended at the end of both rotations."""
        if eid in self.edge_ends:
            raise InvariantError(f"duplicate edge id {eid!r}")
        self.add_vertex(u)
        self.add_vertex(v)
        self.edge_ends[eid] = (u, v)
        self.signature[eid] = sig
        if label is not None:
            self.edge_label[eid] = label
        self.rotation[u].append((eid, 0))
        self.rotation[v].append((eid, 1))

    def vertices(self) -> list:
        return sorted(self.rotation)

    def edge_count(self) -> int:
        return len(self.edge_ends)

    def dart_tail(self, dart: Dart):
        u, v = self.edge_ends[dart[0]]
        return u if dart[1] == 0 else v

    def dart_head(self, dart: Dart):
        u, v = self.edge_ends[dart[0]]
        return v if dart[1] == 0 else u

    def degree(self, v) -> int:
        return len(self.rotation[v])

    def neighbours(self, v) -> set:
        return {self.dart_head(d) for d in self.rotation[v]}

    def simple_graph(self):
        from .graph import Graph
        g = Graph(vertices=self.vertices())
        for eid, (u, v) in self.edge_ends.items():
            if u != v:
                g.add_edge(u, v)
        return g

    def check(self) -> None:
        darts = [d for v in self.rotation for d in self.rotation[v]]
        if len(darts) != len(set(darts)) or len(darts) != 2 * len(self.edge_ends):
            raise InvariantError("rotation system does not list each dart exactly once")
        for v, rot in self.rotation.items():
            for d in rot:
                if self.dart_tail(d) != v:
                    raise InvariantError(f"dart {d} listed at wrong vertex {v!r}")

    # ------------------------------------------------------------ traversal

    def _succ(self, v, dart: Dart, step: int) -> Dart:
        rot = self.rotation[v]
        i = rot.index(dart)
        return rot[(i + step) % len(rot)]

    def _next_state(self, state):
        dart, orient = state
        v = self.dart_head(dart)
        orient = orient * self.signature[dart[0]]
        step = 1 if orient == 1 else -1
        return (self._succ(v, reverse(dart), step), orient)

    def _mirror(self, state):
        dart, orient = state
        return (reverse(dart), -orient * self.signature[dart[0]])

    def trace_faces(self) -> list[list[Dart]]:
        """Face boundary walks, one representative per face.

        Each face appears once; for orientation-preserving faces the mirror
        traversal is suppressed.  Works for loops, parallel edges, and
        signature -1 edges.
        """
        states = set()
        for v in self.rotation:
            for d in self.rotation[v]:
                states.add((d, 1))
                states.add((d, -1))
        faces = []
        seen = set()
        for start in sorted(states, key=lambda s: (repr(s[0]), s[1])):
            if start in seen:
                continue
            orbit = []
            s = start
            while True:
                orbit.append(s)
                seen.add(s)
                s = self._next_state(s)
                if s == start:
                    break
            # suppress the mirror traversal of the same face
            for st in orbit:
                seen.add(self._mirror(st))
            faces.append([d for d, _ in orbit])
        return faces

    def trace_faces_oriented(self) -> list[list[Dart]]:
        """Face walks of an all-positive-signature embedding.

        Orbits of darts at fixed orientation +1: every dart appears in
        exactly one face, so (e, 0) and (e, 1) name the two sides of e.
        """
        if any(s != 1 for s in self.signature.values()):
            raise InvariantError("oriented tracing needs all signatures +1")
        faces = []
        seen = set()
        for v in self.rotation:
            for d0 in self.rotation[v]:
                if d0 in seen:
                    continue
                face = []
                d = d0
                while True:
                    face.append(d)
                    seen.add(d)
                    d = self._succ(self.dart_head(d), reverse(d), 1)
                    if d == d0:
                        break
                faces.append(face)
        return faces

    def euler_genus(self) -> int:
        """Sum over components of 2 - V + E - F."""
        from .graph import Graph, connected_components
        g = Graph(vertices=self.vertices())
        for eid, (u, v) in self.edge_ends.items():
            g.add_edge(u, v)
        comp_of = {}
        comps = connected_components(g)
        for i, comp in enumerate(comps):
            for v in comp:
                comp_of[v] = i
        v_count = [0] * len(comps)
        e_count = [0] * len(comps)
        f_count = [0] * len(comps)
        for v in self.rotation:
            v_count[comp_of[v]] += 1
        for eid, (u, _) in self.edge_ends.items():
            e_count[comp_of[u]] += 1
        for face in self.trace_faces():
            f_count[comp_of[self.dart_tail(face[0])]] += 1
        # an isolated vertex is a sphere with one face
        for i, comp in enumerate(comps):
            if e_count[i] == 0:
                f_count[i] = 1
        total = 0
        for i in range(len(comps)):
            genus = 2 - v_count[i] + e_count[i] - f_count[i]
            if genus < 0:
                raise InvariantError(f"inconsistent face trace in component {i}")
            total += genus
        return total

    # ----------------------------------------------------------- operations

    def flip_vertex(self, v) -> None:
        """Local orientation flip: reverses rotation, toggles incident signatures."""
        self.rotation[v] = list(reversed(self.rotation[v]))
        for eid, (a, b) in self.edge_ends.items():
            if a == v or b == v:
                if a == v and b == v:
                    continue  # loop: both flips cancel
                self.signature[eid] = -self.signature[eid]

    def contract_edge(self, eid) -> None:
        """Contract a non-loop edge, keeping the embedding on the same surface.

        The surviving vertex is the tail endpoint; parallel edges become loops.
        """
        u, v = self.edge_ends[eid]
        if u == v:
            raise InvariantError(f"cannot contract loop {eid!r}")
        if self.signature[eid] == -1:
            self.flip_vertex(v)
        assert self.signature[eid] == 1
        rot_u = self.rotation[u]
        rot_v = self.rotation[v]
        du, dv = (eid, 0), (eid, 1)
        iu = rot_u.index(du)
        iv = rot_v.index(dv)
        spliced = rot_v[iv + 1:] + rot_v[:iv]
        self.rotation[u] = rot_u[:iu] + spliced + rot_u[iu + 1:]
        del self.rotation[v]
        del self.edge_ends[eid]
        del self.signature[eid]
        self.edge_label.pop(eid, None)
        for other, (a, b) in list(self.edge_ends.items()):
            if a == v or b == v:
                self.edge_ends[other] = (u if a == v else a, u if b == v else b)

    def delete_vertex(self, v) -> None:
        for d in list(self.rotation[v]):
            self.delete_edge(d[0])
        del self.rotation[v]

    def delete_edge(self, eid) -> None:
        u, v = self.edge_ends.pop(eid)
        del self.signature[eid]
        self.edge_label.pop(eid, None)
        for w in {u, v}:
            self.rotation[w] = [d for d in self.rotation[w] if d[0] != eid]

    def add_chord(self, face: list[Dart], i: int, j: int, eid) -> None:
        """Split a face by a chord between face walk corners i and j.

        Corner i is the vertex entered via face[i - 1] (i.e. the tail of
        face[i]).  Requires an orientable region (all signatures on the face
        +1); used only on genus-0 embeddings.
        """
        vi = self.dart_tail(face[i])
        vj = self.dart_tail(face[j])
        if vi == vj:
            raise InvariantError("chord endpoints coincide")
        # insert dart vi -> vj right before face[i] at vi, and the reverse
        # dart right after reverse(face[j - 1]) at vj
        self.edge_ends[eid] = (vi, vj)
        self.signature[eid] = 1
        rot_i = self.rotation[vi]
        rot_i.insert(rot_i.index(face[i]), (eid, 0))
        prev_j = face[(j - 1) % len(face)]
        rot_j = self.rotation[vj]
        rot_j.insert(rot_j.index(reverse(prev_j)) + 1, (eid, 1))

    def copy(self) -> "EmbeddedGraph":
        g = EmbeddedGraph()
        g.edge_ends = dict(self.edge_ends)
        g.signature = dict(self.signature)
        g.rotation = {v: list(r) for v, r in self.rotation.items()}
        g.edge_label = dict(self.edge_label)
        return g

"""Spanning trees of AQ_n: validation, unique paths, eccentricity, diameter, center.

Trees are stored unrooted as canonical edge arrays plus a CSR adjacency;
paths are recovered by BFS from the query source.  The diameter comes from
the two-pass farthest-vertex search, which is exact on trees; the exhaustive
all-sources scan is kept for tests via :meth:`SpanningTree.eccentricities`.
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

from . import kernels, topology
from .errors import TreeStructureError

Edge = tuple[int, int]


def canonical_edges(edges) -> tuple[Edge, ...]:
    """Sort endpoints within each edge and edges lexicographically (dups kept)."""
    return tuple(sorted((min(u, v), max(u, v)) for u, v in edges))


class SpanningTree:
    """One spanning tree of AQ_n as an undirected edge set."""

    def __init__(self, n: int, edges: tuple[Edge, ...], _validated: bool = False):
        if not _validated:
            raise TypeError("use SpanningTree.from_edges()")
        self.n = n
        self.vertex_count = 2**n
        self.edges = edges
        self._edge_array = np.array(edges, dtype=np.int64).reshape(-1, 2)
        self._indptr, self._indices = kernels.csr_from_edges(self.vertex_count, self._edge_array)
        self._degrees = np.diff(self._indptr)

    @classmethod
    def from_edges(cls, n: int, edge_list) -> "SpanningTree":
        """Validate an edge list as a spanning tree of AQ_n.

        Rejects, in order: edges that are not AQ_n edges, duplicate edges,
        edge sets that do not reach every vertex, and cycles.  Each rejection
        carries the offending edge or vertex.
        """
        topology.check_dim(n)
        V = 2**n
        edges = []
        for e in edge_list:
            u, v = e
            u, v = int(u), int(v)
            topology.check_vertex(n, u)
            topology.check_vertex(n, v)
            if not topology.are_adjacent(n, u, v):
                raise TreeStructureError(
                    "non-aq-edge", (u, v),
                    f"({topology.format_vertex(n, u)}, {topology.format_vertex(n, v)}) "
                    f"is not an edge of AQ_{n}")
            edges.append((min(u, v), max(u, v)))
        edges.sort()
        for a, b in zip(edges, edges[1:]):
            if a == b:
                raise TreeStructureError("duplicate-edge", a, f"edge {a} listed twice")
        edge_tuple = tuple(edges)
        arr = np.array(edge_tuple, dtype=np.int64).reshape(-1, 2)
        indptr, indices = kernels.csr_from_edges(V, arr)
        dist, _ = kernels.bfs_tree(indptr, indices, 0)
        if (dist < 0).any():
            missing = int(np.flatnonzero(dist < 0)[0])
            raise TreeStructureError(
                "disconnected", missing,
                f"{len(edge_tuple)} edges do not connect all {V} vertices; "
                f"vertex {topology.format_vertex(n, missing)} unreached")
        if len(edge_tuple) != V - 1:
            # Connected with more than V-1 edges: some edge closes a cycle.
            witness = _find_cycle_edge(V, edge_tuple)
            raise TreeStructureError("cyclic", witness, f"edge {witness} closes a cycle")
        return cls(n, edge_tuple, _validated=True)

    # -- queries ------------------------------------------------------------

    def degree(self, u: int) -> int:
        topology.check_vertex(self.n, u)
        return int(self._degrees[u])

    def neighbors_of(self, u: int) -> list[int]:
        topology.check_vertex(self.n, u)
        return [int(w) for w in self._indices[self._indptr[u]:self._indptr[u + 1]]]

    def distances_from(self, u: int) -> np.ndarray:
        topology.check_vertex(self.n, u)
        dist, _ = kernels.bfs_tree(self._indptr, self._indices, u)
        return dist

    def path(self, u: int, v: int) -> list[int]:
        """The unique tree path from u to v, endpoints included."""
        topology.check_vertex(self.n, u)
        topology.check_vertex(self.n, v)
        _, parent = kernels.bfs_tree(self._indptr, self._indices, u)
        out = [v]
        w = v
        while w != u:
            w = int(parent[w])
            out.append(w)
        out.reverse()
        return out

    def distance(self, u: int, v: int) -> int:
        return int(self.distances_from(u)[v])

    def eccentricity(self, u: int) -> int:
        return int(self.distances_from(u).max())

    def eccentricities(self) -> np.ndarray:
        """Eccentricity of every vertex (exhaustive all-sources scan)."""
        return kernels.all_eccentricities(self._indptr, self._indices)

    @cached_property
    def _diametral_path(self) -> list[int]:
        # Two-pass farthest-vertex search; argmax ties go to the smaller label.
        dist0, _ = kernels.bfs_tree(self._indptr, self._indices, 0)
        a = int(dist0.argmax())
        dist_a, _ = kernels.bfs_tree(self._indptr, self._indices, a)
        b = int(dist_a.argmax())
        return self.path(a, b)

    def diameter(self) -> int:
        return len(self._diametral_path) - 1

    @cached_property
    def _center(self) -> int:
        if self.vertex_count < 3:
            raise TreeStructureError(
                "degenerate", self.vertex_count,
                "center is defined for trees with at least 3 vertices")
        p = self._diametral_path
        d = len(p) - 1
        if d % 2 == 0:
            return p[d // 2]
        return min(p[(d - 1) // 2], p[(d + 1) // 2])

    def center(self) -> int:
        """The minimum-eccentricity vertex (smaller label on a two-vertex tie)."""
        return self._center

    def radius(self) -> int:
        if self.vertex_count < 3:
            return self.diameter()  # K_2: both vertices have eccentricity 1
        return self.eccentricity(self.center())

    def internal_vertices(self) -> frozenset[int]:
        """Vertices of tree degree >= 2."""
        return frozenset(int(v) for v in np.flatnonzero(self._degrees >= 2))

    def leaves(self) -> frozenset[int]:
        return frozenset(int(v) for v in np.flatnonzero(self._degrees == 1))

    def __eq__(self, other) -> bool:
        return isinstance(other, SpanningTree) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"SpanningTree(n={self.n}, edges={len(self.edges)})"


def _find_cycle_edge(vertex_count: int, edges: tuple[Edge, ...]) -> Edge:
    """First edge (sorted order) joining two already-connected endpoints."""
    parent = list(range(vertex_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return (u, v)
        parent[ru] = rv
    raise AssertionError("no cycle found in an over-full connected edge set")

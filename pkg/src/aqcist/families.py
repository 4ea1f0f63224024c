"""Bundled base CIST families and a randomized search fallback.

The package ships verified base families: four trees on AQ_5 (transcribed
from the published edge tables), three on AQ_4 and two on AQ_3 (transcribed
from published drawings).  Edge data below uses 1-based vertex labels
(label = value + 1) to stay auditable against the source listings; the
loader converts to 0-based values.

``search_family`` can rediscover small families from scratch: it samples
disjoint connected dominating sets as the internal vertices of each tree,
wires each tree as internal-set spanning tree plus leaf attachments, and
keeps the first candidate the verifier accepts.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property

from . import topology
from .errors import UnsupportedDimensionError
from .tree import Edge, SpanningTree, canonical_edges
from .verification import VerificationReport, verify_family

PROVENANCE_TABLE = "builtin-table"
PROVENANCE_FIGURE = "builtin-figure"
PROVENANCE_SEARCH = "search"
PROVENANCE_LIFTED = "lifted"
PROVENANCE_FILE = "file"


@dataclass(frozen=True)
class CistFamily:
    """An ordered collection of spanning trees of one AQ_n claimed to be CISTs.

    The claim is checked by :mod:`aqcist.verification`, never assumed; edge
    lists are stored raw so that broken families can be represented and fed
    to the verifier.
    """

    n: int
    edge_lists: tuple[tuple[Edge, ...], ...]
    provenance: str

    @classmethod
    def from_edge_lists(cls, n: int, lists, provenance: str) -> "CistFamily":
        topology.check_dim(n)
        return cls(n, tuple(canonical_edges(edges) for edges in lists), provenance)

    @property
    def k(self) -> int:
        return len(self.edge_lists)

    @cached_property
    def trees(self) -> tuple[SpanningTree, ...]:
        """Validated tree objects; raises TreeStructureError on a broken list."""
        return tuple(SpanningTree.from_edges(self.n, edges) for edges in self.edge_lists)

    def diameters(self) -> tuple[int, ...]:
        return tuple(t.diameter() for t in self.trees)

    def internal_vertex_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(t.internal_vertices() for t in self.trees)

    def verify(self, mode: str = "auto") -> VerificationReport:
        return verify_family(self, mode)

    def __repr__(self) -> str:
        return f"CistFamily(n={self.n}, k={self.k}, provenance={self.provenance!r})"


def _edges_0based(pairs_1based) -> tuple[Edge, ...]:
    return canonical_edges((u - 1, v - 1) for u, v in pairs_1based)


# Four trees on AQ_5, 31 edges each, 1-based labels 1..32 for 00000..11111.
_AQ5_TREES_1BASED = (
    (
        (1, 2), (1, 3), (1, 5), (1, 16), (1, 17), (4, 5), (5, 7), (5, 12),
        (5, 21), (5, 28), (6, 7), (7, 8), (7, 10), (9, 25), (11, 27), (13, 16),
        (14, 16), (15, 16), (17, 18), (17, 20), (17, 24), (17, 25), (19, 27),
        (22, 27), (23, 31), (25, 27), (26, 27), (27, 31), (29, 31), (30, 31),
        (31, 32),
    ),
    (
        (1, 4), (2, 3), (2, 4), (2, 6), (2, 10), (4, 8), (4, 12), (4, 13),
        (4, 29), (5, 8), (7, 23), (8, 16), (8, 24), (8, 25), (9, 10), (10, 11),
        (10, 15), (10, 23), (14, 30), (17, 21), (18, 23), (19, 30), (20, 21),
        (21, 23), (21, 28), (22, 23), (23, 26), (26, 30), (26, 31), (27, 30),
        (30, 32),
    ),
    (
        (1, 9), (2, 15), (3, 14), (4, 20), (5, 13), (6, 14), (7, 15), (8, 9),
        (9, 11), (9, 12), (9, 13), (9, 16), (10, 14), (13, 14), (13, 15),
        (13, 29), (15, 18), (15, 31), (17, 19), (19, 20), (19, 22), (19, 23),
        (20, 24), (20, 29), (21, 29), (25, 29), (26, 28), (27, 28), (28, 29),
        (28, 32), (29, 30),
    ),
    (
        (1, 32), (2, 18), (3, 4), (3, 7), (3, 11), (5, 6), (6, 8), (6, 11),
        (6, 27), (9, 24), (10, 12), (11, 12), (11, 14), (11, 15), (11, 22),
        (12, 13), (12, 16), (12, 28), (17, 32), (18, 19), (18, 20), (18, 22),
        (18, 26), (18, 31), (21, 22), (22, 24), (22, 30), (23, 24), (24, 25),
        (24, 32), (29, 32),
    ),
)

# Published internal-vertex sets for the AQ_5 trees (1-based labels); the
# loader asserts the edge data reproduces them.
AQ5_INTERNAL_1BASED = (
    frozenset({1, 5, 7, 16, 17, 25, 27, 31}),
    frozenset({2, 4, 8, 10, 21, 23, 26, 30}),
    frozenset({9, 13, 14, 15, 19, 20, 28, 29}),
    frozenset({3, 6, 11, 12, 18, 22, 24, 32}),
)

# Two trees on AQ_3, labels 1..8 for 000..111.
_AQ3_TREES_1BASED = (
    ((1, 2), (1, 3), (1, 5), (1, 8), (4, 5), (5, 6), (5, 7)),
    ((1, 4), (2, 4), (3, 4), (4, 8), (5, 8), (6, 8), (7, 8)),
)

# Three trees on AQ_4, labels 1..16 for 0000..1111.
_AQ4_TREES_1BASED = (
    (
        (1, 9), (2, 6), (3, 6), (4, 12), (5, 6), (5, 8), (5, 13), (6, 7),
        (6, 11), (9, 12), (9, 16), (10, 12), (11, 12), (11, 14), (11, 15),
    ),
    (
        (1, 16), (2, 3), (2, 4), (2, 10), (2, 15), (4, 5), (4, 8), (4, 13),
        (6, 8), (7, 10), (8, 9), (8, 16), (10, 11), (12, 16), (14, 16),
    ),
    (
        (1, 3), (2, 7), (3, 4), (3, 11), (3, 14), (5, 7), (6, 14), (7, 8),
        (7, 15), (9, 13), (10, 15), (12, 13), (13, 14), (13, 15), (15, 16),
    ),
)

_BASE_DATA = {
    3: (_AQ3_TREES_1BASED, PROVENANCE_FIGURE),
    4: (_AQ4_TREES_1BASED, PROVENANCE_FIGURE),
    5: (_AQ5_TREES_1BASED, PROVENANCE_TABLE),
}


def base_family(n: int) -> CistFamily:
    """The bundled family of n-1 (n=3,4) or 4 (n=5) CISTs on AQ_n."""
    if n not in _BASE_DATA:
        raise UnsupportedDimensionError(
            f"base families exist for n in (3, 4, 5); use construct_cists for n >= 6 (got {n})")
    lists, provenance = _BASE_DATA[n]
    return CistFamily(n, tuple(_edges_0based(t) for t in lists), provenance)


# ---------------------------------------------------------------------------
# search fallback


def _grow_internal_set(rng: random.Random, adj: list[list[int]], size: int,
                       blocked: set[int]) -> set[int] | None:
    """Random connected set of `size` vertices avoiding `blocked`, or None."""
    free = [v for v in range(len(adj)) if v not in blocked]
    if not free:
        return None
    chosen = {rng.choice(free)}
    while len(chosen) < size:
        frontier = [w for v in chosen for w in adj[v] if w not in chosen and w not in blocked]
        if not frontier:
            return None
        chosen.add(rng.choice(frontier))
    return chosen


def _dominates(adj: list[list[int]], internal: set[int]) -> bool:
    covered = set(internal)
    for v in internal:
        covered.update(adj[v])
    return len(covered) == len(adj)


def _build_tree_edges(rng: random.Random, adj: list[list[int]], internal: set[int],
                      used: set[Edge]) -> list[Edge] | None:
    """Spanning tree with exactly `internal` as its internal vertices.

    Wires a random spanning tree over the internal set, then attaches every
    other vertex as a leaf of some internal neighbor.  Edges already claimed
    by other trees are off limits.
    """
    members = sorted(internal)
    inner = [(u, w) for u in members for w in adj[u]
             if w in internal and u < w and (u, w) not in used]
    rng.shuffle(inner)
    edges: list[Edge] = []
    parent = {v: v for v in members}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, w in inner:
        ru, rw = find(u), find(w)
        if ru != rw:
            parent[ru] = rw
            edges.append((u, w))
    if len(edges) != len(members) - 1:
        return None
    outside = [v for v in range(len(adj)) if v not in internal]
    rng.shuffle(outside)
    for v in outside:
        anchors = [w for w in adj[v] if w in internal
                   and (min(v, w), max(v, w)) not in used]
        if not anchors:
            return None
        w = rng.choice(anchors)
        edges.append((min(v, w), max(v, w)))
    return edges


def search_family(n: int, k: int | None = None, *, budget: int = 5000,
                  seed: int = 0) -> CistFamily | None:
    """Randomized search for k CISTs on AQ_n (n in {3, 4}); None if budget runs out.

    Deterministic for a fixed seed.  Candidates are built so each vertex is
    internal in at most one tree, then confirmed with the full verifier.
    """
    if n not in (3, 4):
        raise UnsupportedDimensionError(f"search supports n in (3, 4), got {n}")
    if k is None:
        k = n - 1
    V = 2**n
    adj = [topology.neighbors(n, v) for v in range(V)]
    # Internal set sizes seen in valid families at these scales.
    size_choices = {3: (2, 3), 4: (4, 5, 6)}[n]
    rng = random.Random(seed)
    for _ in range(budget):
        blocked: set[int] = set()
        internal_sets = []
        for _ in range(k):
            size = rng.choice(size_choices)
            grown = _grow_internal_set(rng, adj, size, blocked)
            if grown is None or not _dominates(adj, grown):
                internal_sets = []
                break
            internal_sets.append(grown)
            blocked |= grown
        if len(internal_sets) != k:
            continue
        used: set[Edge] = set()
        lists = []
        for internal in internal_sets:
            edges = _build_tree_edges(rng, adj, internal, used)
            if edges is None:
                lists = []
                break
            used.update((min(u, v), max(u, v)) for u, v in edges)
            lists.append(edges)
        if len(lists) != k:
            continue
        candidate = CistFamily.from_edge_lists(n, lists, PROVENANCE_SEARCH)
        if verify_family(candidate, "both").ok:
            return candidate
    return None

"""Augmented cube AQ_n: labels, adjacency, edge classification, edge enumeration.

Vertices are n-bit binary labels u_1 u_2 ... u_n stored as plain integers with
u_1 as the most significant bit, so ``00000 -> 0`` and ``11111 -> 31``.
Human-facing 1-based labels (``00000`` is vertex 1) are one off from the
internal value; :func:`paper_label` / :func:`from_paper_label` convert.

Two distinct vertices u, v are adjacent iff, writing x = u XOR v, either

* x has exactly one set bit (a *hypercube* edge flipping bit k), or
* x is an all-ones suffix mask 0...01...1 of length >= 2 (a *complement*
  edge: the labels agree on bits 1..k-1 and differ on every bit k..n).

A flip of the last bit alone satisfies both descriptions; it is classified
as a hypercube edge so that the hypercube-classified edges form exactly Q_n.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import InvalidVertexError, NotAdjacentError, UnsupportedDimensionError

# Labels must fit comfortably in 32-bit words; edge materialization is capped
# separately because it allocates 2**(n-1) * (2n-1) edges.
MAX_DIM = 30
MAX_BUILD_DIM = 20

HYPERCUBE = "hypercube"
COMPLEMENT = "complement"


class EdgeKind(NamedTuple):
    kind: str
    split_dim: int  # 1-based bit index k, counted from the most significant bit


class GraphStats(NamedTuple):
    vertex_count: int
    edge_count: int
    degree: int


def check_dim(n: int, *, max_dim: int = MAX_DIM) -> int:
    if not isinstance(n, int) or n < 1 or n > max_dim:
        raise UnsupportedDimensionError(f"dimension must be an int in 1..{max_dim}, got {n!r}")
    return n


def check_vertex(n: int, u: int) -> int:
    if not isinstance(u, (int, np.integer)) or u < 0 or u >> n:
        raise InvalidVertexError(f"vertex {u!r} is not in [0, 2**{n})")
    return int(u)


def paper_label(u: int) -> int:
    """1-based label of a vertex value (00000 is printed as 1)."""
    return u + 1


def from_paper_label(label: int) -> int:
    if label < 1:
        raise InvalidVertexError(f"1-based labels start at 1, got {label}")
    return label - 1


def format_vertex(n: int, u: int) -> str:
    """Render a vertex as its zero-padded binary label, u_1 first."""
    check_vertex(check_dim(n), u)
    return format(u, f"0{n}b")


def parse_vertex(s: str, n: int | None = None) -> int:
    """Parse a binary label; if n is given the string length must match."""
    if not s or set(s) - {"0", "1"}:
        raise InvalidVertexError(f"not a binary vertex label: {s!r}")
    if n is not None and len(s) != n:
        raise InvalidVertexError(f"label {s!r} has {len(s)} bits, expected {n}")
    return int(s, 2)


def are_adjacent(n: int, u: int, v: int) -> bool:
    """True iff u and v are adjacent in AQ_n."""
    check_dim(n)
    check_vertex(n, u)
    check_vertex(n, v)
    x = u ^ v
    if x == 0:
        return False
    return (x & (x - 1)) == 0 or (x & (x + 1)) == 0


def classify_edge(n: int, u: int, v: int) -> EdgeKind:
    """Classify an edge as (hypercube, k) or (complement, k).

    Hypercube: the labels differ in bit k only.  Complement: they agree on
    bits 1..k-1 and differ on all of k..n, with k < n (the k = n case is
    reported as hypercube).
    """
    check_dim(n)
    check_vertex(n, u)
    check_vertex(n, v)
    x = u ^ v
    if x != 0 and (x & (x - 1)) == 0:
        return EdgeKind(HYPERCUBE, n - x.bit_length() + 1)
    if x != 0 and (x & (x + 1)) == 0:
        return EdgeKind(COMPLEMENT, n - x.bit_length() + 1)
    raise NotAdjacentError(f"{format_vertex(n, u)} and {format_vertex(n, v)} are not adjacent in AQ_{n}")


def apply_edge_kind(n: int, u: int, kind: EdgeKind) -> int:
    """Recover v from u and the classification of the edge (u, v)."""
    check_vertex(check_dim(n), u)
    length = n - kind.split_dim + 1
    if not 1 <= length <= n:
        raise NotAdjacentError(f"split dimension {kind.split_dim} out of range for n={n}")
    if kind.kind == HYPERCUBE:
        return u ^ (1 << (length - 1))
    if kind.kind == COMPLEMENT:
        if length < 2:
            raise NotAdjacentError("complement edges require split dimension k < n")
        return u ^ ((1 << length) - 1)
    raise NotAdjacentError(f"unknown edge kind {kind.kind!r}")


def neighbors(n: int, u: int) -> list[int]:
    """The 2n-1 neighbors of u, ascending."""
    check_dim(n)
    check_vertex(n, u)
    out = [u ^ (1 << b) for b in range(n)]
    out += [u ^ ((1 << length) - 1) for length in range(2, n + 1)]
    return sorted(out)


def graph_stats(n: int) -> GraphStats:
    check_dim(n)
    return GraphStats(2**n, 2 ** (n - 1) * (2 * n - 1), 2 * n - 1)


def _canonical_edge_array(edges: np.ndarray) -> np.ndarray:
    """Sort endpoints within each edge, then edges lexicographically."""
    lo = np.minimum(edges[:, 0], edges[:, 1])
    hi = np.maximum(edges[:, 0], edges[:, 1])
    order = np.lexsort((hi, lo))
    return np.stack([lo[order], hi[order]], axis=1)


def aq_edges(n: int, *, max_dim: int = MAX_BUILD_DIM) -> np.ndarray:
    """All edges of AQ_n from the closed-form adjacency rule.

    Returns an (E, 2) int64 array with u < v per row, rows sorted.
    """
    check_dim(n, max_dim=max_dim)
    u = np.arange(2**n, dtype=np.int64)
    masks = [1 << b for b in range(n)]
    masks += [(1 << length) - 1 for length in range(2, n + 1)]
    parts = []
    for m in masks:
        v = u ^ m
        keep = u < v
        parts.append(np.stack([u[keep], v[keep]], axis=1))
    return _canonical_edge_array(np.concatenate(parts))


def build_recursive(n: int, *, max_dim: int = MAX_BUILD_DIM) -> np.ndarray:
    """Edge set of AQ_n built by doubling two copies of AQ_{n-1}.

    Copies get prefixes 0 and 1; every vertex of the 0-copy is joined to the
    1-copy vertex with the same suffix and to the one with the fully
    complemented suffix.  Independent of :func:`aq_edges`; used as its oracle.
    """
    check_dim(n, max_dim=max_dim)
    edges = np.array([[0, 1]], dtype=np.int64)  # AQ_1 is K_2
    for m in range(2, n + 1):
        half = 1 << (m - 1)
        u = np.arange(half, dtype=np.int64)
        same = np.stack([u, u + half], axis=1)
        flipped = np.stack([u, (half - 1 - u) + half], axis=1)
        edges = np.concatenate([edges, edges + half, same, flipped])
    return _canonical_edge_array(edges)


def adjacency_mask(n: int, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Vectorized adjacency test for arrays of vertex values."""
    x = u ^ v
    single_bit = (x & (x - 1)) == 0
    ones_suffix = (x & (x + 1)) == 0
    return (x != 0) & (single_bit | ones_suffix)


class AugmentedCube:
    """Query surface for one AQ_n; adjacency is computed, never stored."""

    def __init__(self, n: int):
        self.n = check_dim(n)
        stats = graph_stats(n)
        self.vertex_count = stats.vertex_count
        self.edge_count = stats.edge_count
        self.degree = stats.degree

    def are_adjacent(self, u: int, v: int) -> bool:
        return are_adjacent(self.n, u, v)

    def neighbors(self, u: int) -> list[int]:
        return neighbors(self.n, u)

    def classify_edge(self, u: int, v: int) -> EdgeKind:
        return classify_edge(self.n, u, v)

    def edges(self, *, max_dim: int = MAX_BUILD_DIM) -> np.ndarray:
        return aq_edges(self.n, max_dim=max_dim)

    def stats(self) -> GraphStats:
        return graph_stats(self.n)

    def __repr__(self) -> str:
        return f"AugmentedCube(n={self.n})"

"""Hot graph kernels: tree BFS, eccentricity scans, path-intersection scans.

Everything here operates on CSR adjacency arrays (``indptr``, ``indices``)
over vertices 0..V-1.  Each kernel exists twice:

* a numba ``@njit(cache=True)`` compiled loop (default when numba imports),
* a numpy/python fallback with identical outputs.

Set ``AQCIST_PURE_NUMPY=1`` in the environment to force the fallback backend;
``ACTIVE_BACKEND`` records which one is bound.  ``benchmarks/bench_kernels.py``
times the two against each other.
"""

from __future__ import annotations

import os
from types import SimpleNamespace

import numpy as np

PURE_NUMPY_ENV = "AQCIST_PURE_NUMPY"

# Violation codes returned by path_conflict_scan.
CLEAN = 0
SHARED_VERTEX = 1
SHARED_EDGE = 2


def csr_from_edges(vertex_count: int, edges: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Build CSR adjacency from an (E, 2) edge array; neighbors sorted ascending."""
    edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    src = np.concatenate([edges[:, 0], edges[:, 1]])
    dst = np.concatenate([edges[:, 1], edges[:, 0]])
    order = np.lexsort((dst, src))
    indices = dst[order].astype(np.int32)
    counts = np.bincount(src, minlength=vertex_count)
    indptr = np.zeros(vertex_count + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    return indptr, indices


# ---------------------------------------------------------------------------
# numpy fallback implementations


def _np_bfs_tree(indptr, indices, source):
    """Level-synchronous BFS; returns (dist, parent) int32 arrays, -1 = unreached."""
    V = indptr.shape[0] - 1
    dist = np.full(V, -1, dtype=np.int32)
    parent = np.full(V, -1, dtype=np.int32)
    dist[source] = 0
    frontier = np.array([source], dtype=np.int64)
    d = 0
    while frontier.size:
        starts = indptr[frontier]
        counts = indptr[frontier + 1] - starts
        total = int(counts.sum())
        if total == 0:
            break
        ends = np.cumsum(counts)
        idx = np.repeat(starts - (ends - counts), counts) + np.arange(total)
        neigh = indices[idx]
        origin = np.repeat(frontier, counts).astype(np.int32)
        fresh = dist[neigh] < 0
        cand, first = np.unique(neigh[fresh], return_index=True)
        dist[cand] = d + 1
        parent[cand] = origin[fresh][first]
        frontier = cand.astype(np.int64)
        d += 1
    return dist, parent


def _np_all_eccentricities(indptr, indices):
    V = indptr.shape[0] - 1
    ecc = np.empty(V, dtype=np.int32)
    for s in range(V):
        dist, _ = _np_bfs_tree(indptr, indices, s)
        ecc[s] = dist.max()
    return ecc


def _np_all_parents(indptr, indices):
    V = indptr.shape[0] - 1
    parents = np.empty((V, V), dtype=np.int32)
    for s in range(V):
        _, parents[s] = _np_bfs_tree(indptr, indices, s)
    return parents


def _np_path_conflict_scan(parents_a, parents_b):
    """First vertex pair whose two tree paths overlap beyond the endpoints.

    ``parents_x[s]`` must be the BFS parent array of tree x rooted at s.
    Scans pairs (u, v), u < v, in lexicographic order and returns
    (code, u, v) with code CLEAN / SHARED_VERTEX / SHARED_EDGE.
    """
    V = parents_a.shape[0]
    for u in range(V):
        pa = parents_a[u]
        pb = parents_b[u]
        for v in range(u + 1, V):
            verts_a = set()
            edges_a = set()
            w = v
            while w != u:
                p = int(pa[w])
                verts_a.add(w)
                edges_a.add((p, w) if p < w else (w, p))
                w = p
            w = v
            while w != u:
                p = int(pb[w])
                if w != v and w in verts_a:
                    return SHARED_VERTEX, u, v
                e = (p, w) if p < w else (w, p)
                if e in edges_a:
                    return SHARED_EDGE, u, v
                w = p
    return CLEAN, -1, -1


# ---------------------------------------------------------------------------
# numba implementations (same semantics, explicit loops)


def _nb_bfs_tree_py(indptr, indices, source):
    V = indptr.shape[0] - 1
    dist = np.full(V, -1, dtype=np.int32)
    parent = np.full(V, -1, dtype=np.int32)
    queue = np.empty(V, dtype=np.int64)
    queue[0] = source
    dist[source] = 0
    head, tail = 0, 1
    while head < tail:
        v = queue[head]
        head += 1
        for j in range(indptr[v], indptr[v + 1]):
            w = indices[j]
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                parent[w] = v
                queue[tail] = w
                tail += 1
    return dist, parent


def _make_numba_kernels():
    from numba import njit

    bfs_tree = njit(cache=True)(_nb_bfs_tree_py)

    @njit(cache=True)
    def all_eccentricities(indptr, indices):
        V = indptr.shape[0] - 1
        ecc = np.empty(V, dtype=np.int32)
        for s in range(V):
            dist, _ = bfs_tree(indptr, indices, s)
            ecc[s] = dist.max()
        return ecc

    @njit(cache=True)
    def all_parents(indptr, indices):
        V = indptr.shape[0] - 1
        parents = np.empty((V, V), dtype=np.int32)
        for s in range(V):
            _, p = bfs_tree(indptr, indices, s)
            parents[s] = p
        return parents

    @njit(cache=True)
    def path_conflict_scan(parents_a, parents_b):
        V = parents_a.shape[0]
        vstamp = np.full(V, -1, dtype=np.int64)
        estamp = np.full(V * V, -1, dtype=np.int64)
        pair_id = 0
        for u in range(V):
            for v in range(u + 1, V):
                w = v
                while w != u:
                    p = parents_a[u, w]
                    vstamp[w] = pair_id
                    if p < w:
                        estamp[p * V + w] = pair_id
                    else:
                        estamp[w * V + p] = pair_id
                    w = p
                w = v
                while w != u:
                    p = parents_b[u, w]
                    if w != v and vstamp[w] == pair_id:
                        return SHARED_VERTEX, u, v
                    if p < w:
                        key = p * V + w
                    else:
                        key = w * V + p
                    if estamp[key] == pair_id:
                        return SHARED_EDGE, u, v
                    w = p
                pair_id += 1
        return CLEAN, -1, -1

    return SimpleNamespace(
        name="numba",
        bfs_tree=bfs_tree,
        all_eccentricities=all_eccentricities,
        all_parents=all_parents,
        path_conflict_scan=path_conflict_scan,
    )


numpy_backend = SimpleNamespace(
    name="numpy",
    bfs_tree=_np_bfs_tree,
    all_eccentricities=_np_all_eccentricities,
    all_parents=_np_all_parents,
    path_conflict_scan=_np_path_conflict_scan,
)

numba_backend = None
if os.environ.get(PURE_NUMPY_ENV, "").strip().lower() not in {"1", "true", "yes"}:
    try:
        numba_backend = _make_numba_kernels()
    except ImportError:
        numba_backend = None

_active = numba_backend if numba_backend is not None else numpy_backend
ACTIVE_BACKEND = _active.name

bfs_tree = _active.bfs_tree
all_eccentricities = _active.all_eccentricities
all_parents = _active.all_parents
path_conflict_scan = _active.path_conflict_scan


def get_backend(name: str) -> SimpleNamespace:
    """Fetch a backend by name ('numba' or 'numpy'), e.g. for benchmarks."""
    if name == "numpy":
        return numpy_backend
    if name == "numba":
        if numba_backend is None:
            backend = _make_numba_kernels()
            return backend
        return numba_backend
    raise ValueError(f"unknown kernel backend {name!r}")

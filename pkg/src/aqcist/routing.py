"""Multipath delivery over a CIST family: one tree path per tree.

For any source/destination pair the k tree paths are pairwise edge-disjoint
and share no vertex besides the endpoints, so k-1 of them survive any
single internal fault.  Paths are tree paths, not shortest AQ_n paths; the
stats report also says whether the endpoints are adjacent in AQ_n (graph
distance 1) so callers can judge the stretch.
"""

from __future__ import annotations

import random
from typing import Iterable, Sequence

from . import topology
from .errors import InvalidVertexError, VerificationFailedError
from .families import CistFamily
from .verification import verify_characterization

_VERIFIED_CACHE_ATTR = "_routing_verified"


def _ensure_verified(family: CistFamily) -> None:
    if family.__dict__.get(_VERIFIED_CACHE_ATTR):
        return
    report = verify_characterization(family)
    if not report.ok:
        raise VerificationFailedError(
            f"family fails verification: {report.first_failure()}", report)
    family.__dict__[_VERIFIED_CACHE_ATTR] = True


def disjoint_routes(family: CistFamily, u: int, v: int) -> list[list[int]]:
    """The k tree paths from u to v, in tree order."""
    topology.check_vertex(family.n, u)
    topology.check_vertex(family.n, v)
    if u == v:
        raise InvalidVertexError("source and destination must differ")
    _ensure_verified(family)
    return [t.path(u, v) for t in family.trees]


def sample_pairs(n: int, count: int, seed: int) -> list[tuple[int, int]]:
    """count distinct vertex pairs of AQ_n, drawn with a seeded generator."""
    topology.check_dim(n)
    V = 2**n
    total = V * (V - 1) // 2
    if count >= total:
        return all_pairs(n)
    rng = random.Random(seed)
    picked: set[tuple[int, int]] = set()
    while len(picked) < count:
        u = rng.randrange(V)
        v = rng.randrange(V)
        if u != v:
            picked.add((min(u, v), max(u, v)))
    return sorted(picked)


def all_pairs(n: int) -> list[tuple[int, int]]:
    V = 2**n
    return [(u, v) for u in range(V) for v in range(u + 1, V)]


def route_stats(family: CistFamily, pairs: Iterable[Sequence[int]] | None = None,
                *, samples: int | None = None, seed: int = 0) -> dict:
    """Path-length summary over vertex pairs.

    Uses the given pairs, otherwise `samples` seeded random pairs, otherwise
    every pair.  Reports per-tree max/mean path length and how many sampled
    pairs are already adjacent in AQ_n.
    """
    if pairs is None:
        pairs = sample_pairs(family.n, samples, seed) if samples is not None else all_pairs(family.n)
        used_seed = seed if samples is not None else None
    else:
        pairs = [(int(u), int(v)) for u, v in pairs]
        used_seed = None
    _ensure_verified(family)
    trees = family.trees
    totals = [0] * family.k
    maxima = [0] * family.k
    adjacent = 0
    count = 0
    for u, v in pairs:
        if u == v:
            raise InvalidVertexError("pair endpoints must differ")
        count += 1
        if topology.are_adjacent(family.n, u, v):
            adjacent += 1
        for i, t in enumerate(trees):
            length = t.distance(u, v)
            totals[i] += length
            maxima[i] = max(maxima[i], length)
    if count == 0:
        raise ValueError("no pairs to sample")
    return {
        "n": family.n,
        "k": family.k,
        "pair_count": count,
        "seed": used_seed,
        "adjacent_pair_count": adjacent,
        "per_tree": [
            {"tree": i + 1, "max_length": maxima[i], "mean_length": totals[i] / count}
            for i in range(family.k)
        ],
    }

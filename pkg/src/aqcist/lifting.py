"""Doubling construction: k CISTs on AQ_n -> k CISTs on AQ_{n+1}.

Each tree is copied into the 0-prefixed and 1-prefixed halves of AQ_{n+1}
and the copies are joined by one cross edge between the two copies of the
tree's center.  The center has minimum eccentricity, is internal whenever
the diameter is at least 2, and the two prefixed copies of the same label
always form a hypercube edge, so the construction stays inside the joining
rule's hypotheses.  Diameters follow max(d, 2r + 1) per lift.
"""

from __future__ import annotations

from .errors import TreeStructureError, UnsupportedDimensionError, VerificationFailedError
from .families import PROVENANCE_LIFTED, CistFamily, base_family
from .tree import SpanningTree
from .verification import verify_characterization

# Full materialization above this dimension needs an explicit override;
# 4 trees at n=14 already mean ~65k stored edges.
DEFAULT_MAX_N = 14

# The copy-and-join argument is stated for dimension >= 4; lifting a
# 3-dimensional base works in practice but must be requested explicitly.
MIN_LIFT_BASE = 4


def connector_edge(t: SpanningTree) -> tuple[int, int]:
    """Cross edge joining the two copies of t's center, as AQ_{n+1} vertices.

    Returns (0c, 1c): the center label prefixed with 0 and with 1.  Requires
    diameter >= 2 so that the center is an internal vertex.
    """
    if t.diameter() < 2:
        raise TreeStructureError(
            "degenerate", t.diameter(),
            "connector endpoints must be internal; tree diameter < 2 has none")
    c = t.center()
    return c, c + 2**t.n


def lift_tree(t: SpanningTree) -> SpanningTree:
    """Double one tree: two prefixed copies plus the connector edge."""
    lo, hi = connector_edge(t)
    half = 2**t.n
    edges = list(t.edges)
    edges += [(u + half, v + half) for u, v in t.edges]
    edges.append((lo, hi))
    return SpanningTree.from_edges(t.n + 1, edges)


def lift_family(family: CistFamily, *, allow_small_base: bool = False) -> CistFamily:
    """Lift every tree of a verified family from AQ_n to AQ_{n+1}."""
    if family.n < 3 or (family.n < MIN_LIFT_BASE and not allow_small_base):
        raise UnsupportedDimensionError(
            f"lifting is supported from n >= {MIN_LIFT_BASE} "
            f"(n=3 only with allow_small_base=True); got n={family.n}")
    report = verify_characterization(family)
    if not report.ok:
        raise VerificationFailedError(
            f"refusing to lift an invalid family: {report.first_failure()}", report)
    lifted = [lift_tree(t) for t in family.trees]
    return CistFamily(family.n + 1, tuple(t.edges for t in lifted), PROVENANCE_LIFTED)


def construct_cists(n: int, *, max_n: int = DEFAULT_MAX_N) -> CistFamily:
    """The package's main pipeline: a verified CIST family on AQ_n.

    n in {3, 4, 5} returns the bundled base family (n-1 trees for n < 5,
    four for n = 5); n >= 6 lifts the AQ_5 base n-5 times, giving four trees
    with diameters 2n-3, 2n-3, 2n-5, 2n-5.
    """
    if n < 3:
        raise UnsupportedDimensionError(
            f"AQ_{n} is too small to carry a family of this form (need n >= 3)")
    if n > max_n:
        raise UnsupportedDimensionError(
            f"n={n} exceeds the materialization cap of {max_n}; pass max_n explicitly to override")
    if n <= 5:
        return base_family(n)
    family = base_family(5)
    for _ in range(n - 5):
        family = lift_family(family)
    return family

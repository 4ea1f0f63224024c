"""Decide whether a family of trees is a set of completely independent spanning trees.

Two independent routes:

* ``characterization`` — edge-disjoint spanning trees in which every vertex
  has degree > 1 in at most one tree.
* ``bruteforce`` — the definition itself: for every vertex pair and every
  tree pair, the two tree paths share no vertex beyond the endpoints and no
  edge.  Only feasible for small n (all-pairs enumeration).

Both verdicts must always agree; ``mode="both"`` asserts that.  Checks run
cheap-to-expensive and stop at the first violation, which is reported with a
concrete witness.  All scans iterate in sorted order (labels ascending, tree
indices ascending), so the reported witness is deterministic; the bruteforce
pair space is scanned per tree pair and the winning witness is the
lexicographically smallest (u, v, i, j).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

from . import kernels, topology
from .errors import BruteForceLimitError, MalformedFamilyError, ModeDisagreementError
from .tree import Edge, SpanningTree, canonical_edges

MODES = ("characterization", "bruteforce", "both", "auto")
DEFAULT_BRUTEFORCE_MAX_N = 6

PASS = "pass"
FAIL = "fail"


@dataclass(frozen=True)
class CheckResult:
    condition: str
    status: str
    witness: dict[str, Any] | None = None

    def to_dict(self) -> dict[str, Any]:
        return {"condition": self.condition, "status": self.status, "witness": self.witness}


@dataclass(frozen=True)
class VerificationReport:
    verdict: str
    mode: str
    n: int
    k: int
    checks: tuple[CheckResult, ...]
    stats: dict[str, list[int]] | None = field(default=None)

    @property
    def ok(self) -> bool:
        return self.verdict == PASS

    def first_failure(self) -> CheckResult | None:
        for c in self.checks:
            if c.status == FAIL:
                return c
        return None

    def to_dict(self) -> dict[str, Any]:
        return {
            "verdict": self.verdict,
            "mode": self.mode,
            "n": self.n,
            "k": self.k,
            "checks": [c.to_dict() for c in self.checks],
            "stats": self.stats,
        }

    def to_text(self) -> str:
        lines = [f"family: n={self.n} k={self.k} mode={self.mode}"]
        for c in self.checks:
            line = f"  {c.condition}: {c.status}"
            if c.witness is not None:
                line += f"  witness={c.witness}"
            lines.append(line)
        if self.stats is not None:
            lines.append(f"  diameters: {self.stats['diameters']}")
            lines.append(f"  internal_counts: {self.stats['internal_counts']}")
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines)


def _coerce(family) -> tuple[int, list[tuple[Edge, ...]]]:
    """Accept a CistFamily-like object or an (n, edge_lists) pair."""
    if hasattr(family, "edge_lists") and hasattr(family, "n"):
        n, lists = family.n, family.edge_lists
    else:
        n, lists = family
    topology.check_dim(n)
    out = []
    for edges in lists:
        checked = []
        for e in edges:
            u, v = e
            if not isinstance(u, (int, np.integer)) or not isinstance(v, (int, np.integer)):
                raise MalformedFamilyError(f"non-integer edge endpoint in {e!r}")
            u, v = int(u), int(v)
            if u < 0 or u >> n or v < 0 or v >> n:
                raise MalformedFamilyError(f"edge ({u}, {v}) out of range for n={n}")
            checked.append((u, v))
        out.append(canonical_edges(checked))
    if not out:
        raise MalformedFamilyError("family has no trees")
    return n, out


def _structural_checks(n: int, lists: list[tuple[Edge, ...]]) -> list[CheckResult]:
    """Per-tree checks: subgraph, spanning (count, duplicates, reach), acyclic."""
    V = 2**n
    for i, edges in enumerate(lists):
        for u, v in edges:
            if u == v or not topology.are_adjacent(n, u, v):
                return [CheckResult("subgraph", FAIL, {"tree": i + 1, "edge": [u, v]})]
        if len(edges) != V - 1:
            return [
                CheckResult("subgraph", PASS),
                CheckResult("spanning", FAIL,
                            {"tree": i + 1, "edge_count": len(edges), "expected": V - 1}),
            ]
        for a, b in zip(edges, edges[1:]):
            if a == b:
                return [
                    CheckResult("subgraph", PASS),
                    CheckResult("spanning", FAIL, {"tree": i + 1, "duplicate_edge": list(a)}),
                ]
        cycle = _cycle_edge(V, edges)
        if cycle is not None:
            return [
                CheckResult("subgraph", PASS),
                CheckResult("spanning", PASS),
                CheckResult("acyclic", FAIL, {"tree": i + 1, "edge": list(cycle)}),
            ]
        # V-1 distinct edges with no cycle span all vertices; keep a reach
        # check as a guard against kernel regressions.
        arr = np.array(edges, dtype=np.int64)
        indptr, indices = kernels.csr_from_edges(V, arr)
        dist, _ = kernels.bfs_tree(indptr, indices, 0)
        if (dist < 0).any():
            missing = int(np.flatnonzero(dist < 0)[0])
            return [
                CheckResult("subgraph", PASS),
                CheckResult("spanning", FAIL, {"tree": i + 1, "unreached_vertex": missing}),
            ]
    return [CheckResult("subgraph", PASS), CheckResult("spanning", PASS), CheckResult("acyclic", PASS)]


def _cycle_edge(vertex_count: int, edges: tuple[Edge, ...]) -> Edge | None:
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
    return None


def _edge_disjoint_check(lists: list[tuple[Edge, ...]]) -> CheckResult:
    seen: dict[Edge, int] = {}
    for i, edges in enumerate(lists):
        for e in edges:
            j = seen.get(e)
            if j is not None:
                return CheckResult("edge-disjoint", FAIL,
                                   {"edge": list(e), "trees": [j + 1, i + 1]})
            seen[e] = i
    return CheckResult("edge-disjoint", PASS)


def _internal_overlap_check(n: int, lists: list[tuple[Edge, ...]]) -> CheckResult:
    V = 2**n
    owner = np.full(V, -1, dtype=np.int64)
    for i, edges in enumerate(lists):
        arr = np.array(edges, dtype=np.int64).reshape(-1, 2)
        deg = np.bincount(arr.ravel(), minlength=V)
        internal = np.flatnonzero(deg >= 2)
        clash = internal[owner[internal] >= 0]
        if clash.size:
            v = int(clash[0])
            return CheckResult("internal-overlap", FAIL,
                               {"vertex": v, "trees": [int(owner[v]) + 1, i + 1]})
        owner[internal] = i
    return CheckResult("internal-overlap", PASS)


def _family_stats(n: int, lists: list[tuple[Edge, ...]]) -> dict[str, list[int]]:
    trees = [SpanningTree.from_edges(n, edges) for edges in lists]
    return {
        "diameters": [t.diameter() for t in trees],
        "internal_counts": [len(t.internal_vertices()) for t in trees],
    }


def _report(mode: str, n: int, lists, checks: list[CheckResult],
            stats: dict | None) -> VerificationReport:
    verdict = PASS if all(c.status == PASS for c in checks) else FAIL
    return VerificationReport(verdict, mode, n, len(lists), tuple(checks), stats)


def verify_characterization(family) -> VerificationReport:
    """Edge-disjoint spanning trees + every vertex internal in at most one tree."""
    n, lists = _coerce(family)
    checks = _structural_checks(n, lists)
    if any(c.status == FAIL for c in checks):
        return _report("characterization", n, lists, checks, None)
    stats = _family_stats(n, lists)
    checks.append(_edge_disjoint_check(lists))
    if checks[-1].status == FAIL:
        return _report("characterization", n, lists, checks, stats)
    checks.append(_internal_overlap_check(n, lists))
    return _report("characterization", n, lists, checks, stats)


def _path_between(parents_row: np.ndarray, u: int, v: int) -> list[int]:
    out = [v]
    w = v
    while w != u:
        w = int(parents_row[w])
        out.append(w)
    out.reverse()
    return out


def verify_bruteforce(family, *, max_n: int = DEFAULT_BRUTEFORCE_MAX_N) -> VerificationReport:
    """All-pairs path enumeration against the defining property.

    Checks every unordered vertex pair {u, v} and every tree pair (i, j):
    the two tree paths must share no vertex besides u and v, and no edge.
    Refuses n > max_n; pass a larger ``max_n`` explicitly to override.
    """
    n, lists = _coerce(family)
    if n > max_n:
        raise BruteForceLimitError(
            f"all-pairs verification at n={n} exceeds the cap of {max_n}; "
            f"raise max_n explicitly or use characterization mode")
    checks = _structural_checks(n, lists)
    if any(c.status == FAIL for c in checks):
        return _report("bruteforce", n, lists, checks, None)
    stats = _family_stats(n, lists)
    checks.append(_edge_disjoint_check(lists))
    if checks[-1].status == FAIL:
        return _report("bruteforce", n, lists, checks, stats)

    V = 2**n
    parents = []
    for edges in lists:
        arr = np.array(edges, dtype=np.int64)
        indptr, indices = kernels.csr_from_edges(V, arr)
        parents.append(kernels.all_parents(indptr, indices))

    best: tuple[int, int, int, int, int] | None = None  # (u, v, i, j, code)
    for i in range(len(lists)):
        for j in range(i + 1, len(lists)):
            code, u, v = kernels.path_conflict_scan(parents[i], parents[j])
            if code != kernels.CLEAN:
                key = (u, v, i, j, code)
                if best is None or key < best:
                    best = key
    if best is None:
        checks.append(CheckResult("path-vertex-intersection", PASS))
        checks.append(CheckResult("path-edge-intersection", PASS))
        return _report("bruteforce", n, lists, checks, stats)

    u, v, i, j, code = best
    witness = {
        "pair": [u, v],
        "trees": [i + 1, j + 1],
        "path_i": _path_between(parents[i][u], u, v),
        "path_j": _path_between(parents[j][u], u, v),
    }
    if code == kernels.SHARED_VERTEX:
        checks.append(CheckResult("path-vertex-intersection", FAIL, witness))
    else:
        checks.append(CheckResult("path-vertex-intersection", PASS))
        checks.append(CheckResult("path-edge-intersection", FAIL, witness))
    return _report("bruteforce", n, lists, checks, stats)


def verify_family(family, mode: str = "auto",
                  *, max_bruteforce_n: int = DEFAULT_BRUTEFORCE_MAX_N) -> VerificationReport:
    """Dispatch to one or both verifiers.

    ``auto`` runs both when the pair enumeration is tractable (n <= cap) and
    only the characterization otherwise.  ``both`` runs the two routes and
    insists on identical verdicts.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    n, lists = _coerce(family)
    if mode == "auto":
        mode = "both" if n <= max_bruteforce_n else "characterization"
    if mode == "characterization":
        return verify_characterization((n, lists))
    if mode == "bruteforce":
        return verify_bruteforce((n, lists), max_n=max_bruteforce_n)

    char = verify_characterization((n, lists))
    brute = verify_bruteforce((n, lists), max_n=max_bruteforce_n)
    if char.verdict != brute.verdict:
        raise ModeDisagreementError(
            f"characterization says {char.verdict} but bruteforce says {brute.verdict}; "
            f"witnesses: {char.first_failure()} / {brute.first_failure()}")
    brute_only = tuple(c for c in brute.checks
                       if c.condition.startswith("path-") or c.status == FAIL)
    merged = char.checks + tuple(c for c in brute_only if c not in char.checks)
    return VerificationReport(char.verdict, "both", n, len(lists), merged, char.stats or brute.stats)

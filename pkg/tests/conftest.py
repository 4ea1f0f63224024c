"""Shared test helpers: random spanning trees and family corruption."""

from __future__ import annotations

import random

import pytest

from aqcist import aq_edges, base_family
from aqcist.families import CistFamily


def random_spanning_tree_edges(n: int, rng: random.Random) -> list[tuple[int, int]]:
    """Random spanning tree of AQ_n by Kruskal over shuffled edges."""
    edges = [tuple(int(x) for x in e) for e in aq_edges(n)]
    rng.shuffle(edges)
    parent = list(range(2**n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen = []
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            chosen.append((u, v))
    return chosen


def corrupt_family(family: CistFamily, rng: random.Random) -> tuple[int, list[list[tuple[int, int]]]]:
    """One random edge deletion, duplication, or swap; returns a raw family."""
    lists = [list(edges) for edges in family.edge_lists]
    kind = rng.choice(("delete", "duplicate", "swap"))
    i = rng.randrange(len(lists))
    if kind == "delete":
        lists[i].pop(rng.randrange(len(lists[i])))
    elif kind == "duplicate":
        j = rng.randrange(len(lists))
        lists[i].append(lists[j][rng.randrange(len(lists[j]))])
    else:
        present = set(lists[i])
        candidates = [tuple(int(x) for x in e) for e in aq_edges(family.n)]
        candidates = [e for e in candidates if e not in present]
        lists[i][rng.randrange(len(lists[i]))] = rng.choice(candidates)
    return family.n, lists


@pytest.fixture(scope="session")
def aq5_family():
    return base_family(5)

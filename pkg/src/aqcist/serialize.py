"""File formats: the family JSON schema and whole-graph exports.

Family schema (vertex values are 0-based label values; tree ids are 1-based
and keep family order)::

    { "n": int, "k": int, "labeling": "zero-based-value", "provenance": str,
      "trees": [ { "id": 1, "edges": [[u, v], ...] }, ... ] }

Edges are sorted with sorted endpoints, so serialization is canonical and
byte-identical across runs.  Graph exports (dot / graphml / edgelist / json)
render vertices as zero-padded binary labels except the json form, which
keeps integer values.
"""

from __future__ import annotations

import json
from typing import TextIO

from . import topology
from .errors import MalformedFamilyError
from .families import PROVENANCE_FILE, CistFamily

LABELING = "zero-based-value"
GRAPH_FORMATS = ("dot", "graphml", "edgelist", "json")


def family_to_dict(family: CistFamily) -> dict:
    return {
        "n": family.n,
        "k": family.k,
        "labeling": LABELING,
        "provenance": family.provenance,
        "trees": [
            {"id": i + 1, "edges": [[u, v] for u, v in edges]}
            for i, edges in enumerate(family.edge_lists)
        ],
    }


def family_to_json(family: CistFamily) -> str:
    return json.dumps(family_to_dict(family), indent=2) + "\n"


def family_from_dict(data: dict) -> CistFamily:
    if not isinstance(data, dict):
        raise MalformedFamilyError("family document must be a JSON object")
    try:
        n = data["n"]
        trees = data["trees"]
    except (KeyError, TypeError) as exc:
        raise MalformedFamilyError(f"missing family field: {exc}") from exc
    if not isinstance(n, int) or not 1 <= n <= topology.MAX_DIM:
        raise MalformedFamilyError(f"bad dimension {n!r}")
    if data.get("labeling", LABELING) != LABELING:
        raise MalformedFamilyError(f"unsupported labeling {data.get('labeling')!r}")
    if not isinstance(trees, list) or not trees:
        raise MalformedFamilyError("'trees' must be a non-empty list")
    if "k" in data and data["k"] != len(trees):
        raise MalformedFamilyError(f"k={data['k']} but {len(trees)} trees listed")
    lists = []
    for entry in trees:
        if not isinstance(entry, dict) or "edges" not in entry:
            raise MalformedFamilyError(f"bad tree entry: {entry!r}")
        edges = []
        for e in entry["edges"]:
            if (not isinstance(e, list) or len(e) != 2
                    or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)):
                raise MalformedFamilyError(f"bad edge {e!r}")
            u, v = e
            if u < 0 or u >> n or v < 0 or v >> n:
                raise MalformedFamilyError(f"edge [{u}, {v}] out of range for n={n}")
            edges.append((u, v))
        lists.append(edges)
    provenance = data.get("provenance", PROVENANCE_FILE)
    if not isinstance(provenance, str):
        raise MalformedFamilyError(f"bad provenance {provenance!r}")
    return CistFamily.from_edge_lists(n, lists, provenance)


def load_family(path: str) -> CistFamily:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise MalformedFamilyError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise MalformedFamilyError(f"{path} is not valid JSON: {exc}") from exc
    return family_from_dict(data)


def dump_family(family: CistFamily, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(family_to_json(family))


# ---------------------------------------------------------------------------
# whole-graph exports


def write_graph(n: int, fmt: str, out: TextIO, *, max_dim: int = topology.MAX_BUILD_DIM) -> None:
    """Write the full AQ_n edge set in the chosen format (edges sorted)."""
    if fmt not in GRAPH_FORMATS:
        raise ValueError(f"format must be one of {GRAPH_FORMATS}, got {fmt!r}")
    edges = topology.aq_edges(n, max_dim=max_dim)
    label = lambda u: format(int(u), f"0{n}b")
    if fmt == "edgelist":
        for u, v in edges:
            out.write(f"{label(u)} {label(v)}\n")
    elif fmt == "dot":
        out.write(f"graph AQ{n} {{\n")
        for u, v in edges:
            out.write(f'  "{label(u)}" -- "{label(v)}";\n')
        out.write("}\n")
    elif fmt == "graphml":
        out.write('<?xml version="1.0" encoding="UTF-8"?>\n')
        out.write('<graphml xmlns="http://graphml.graphdrawing.org/xmlns">\n')
        out.write(f'  <graph id="AQ{n}" edgedefault="undirected">\n')
        for u in range(2**n):
            out.write(f'    <node id="{label(u)}"/>\n')
        for u, v in edges:
            out.write(f'    <edge source="{label(u)}" target="{label(v)}"/>\n')
        out.write("  </graph>\n")
        out.write("</graphml>\n")
    else:  # json
        doc = {
            "n": n,
            "labeling": LABELING,
            "vertex_count": 2**n,
            "edge_count": int(edges.shape[0]),
            "edges": [[int(u), int(v)] for u, v in edges],
        }
        out.write(json.dumps(doc, indent=2) + "\n")

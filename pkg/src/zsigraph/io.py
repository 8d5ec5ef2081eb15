"""Serialization: DOT export, JSON model descriptors, invariant reports."""

from __future__ import annotations

import json
import math

from .graphs import (Graph, diameter, domination_number, girth, is_chordal,
                     is_complemented, radius)
from .model import FunctionVertex, ModelConfig, ZeroSet, parse_vertex_label


def jsonable(value):
    """Map infinities to the string "inf" (JSON has no native value)."""
    if isinstance(value, float) and math.isinf(value):
        return "inf"
    return value


def graph_to_dot(g: Graph, name: str = "G") -> str:
    """DOT text for any labeled graph; loads in standard viewers."""
    lines = [f"graph {name} {{"]
    for i in range(g.n):
        lines.append(f'  v{i} [label="{g.labels[i]}"];')
    for u, v in g.edges():
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def model_descriptor(config: ModelConfig, g: Graph) -> dict:
    """JSON descriptor of a model graph: vertices as "S:k" labels, edges as
    index pairs with i < j."""
    return {
        "n": config.n,
        "m": config.m,
        "include_zero": config.include_zero,
        "vertices": list(g.labels),
        "edges": [[int(u), int(v)] for u, v in g.edges()],
    }


def graph_from_descriptor(desc: dict) -> tuple[ModelConfig, Graph]:
    """Rebuild a model graph from its JSON descriptor.

    Vertex labels are parsed back into function vertices so invariant
    computation on the round-tripped graph matches the direct build.
    """
    config = ModelConfig(n=int(desc["n"]), m=int(desc["m"]),
                         include_zero=bool(desc["include_zero"]))
    labels = list(desc["vertices"])
    data = []
    for lab in labels:
        mask, copy = parse_vertex_label(lab, config.n)
        data.append(FunctionVertex(ZeroSet(mask, config.n), copy))
    edges = [(int(u), int(v)) for u, v in desc["edges"]]
    g = Graph(len(labels), edges, labels=labels, data=tuple(data))
    return config, g


def invariants_payload(g: Graph, max_k: int = 3) -> dict:
    """The standard invariant report with witnesses as label sequences."""
    chordal, chordal_wit = is_chordal(g)
    complemented, lacking = is_complemented(g)
    dom_k, dom_wit = domination_number(g, max_k=max_k)
    payload = {
        "vertices": g.n,
        "edges": g.number_of_edges(),
        "diameter": jsonable(diameter(g)) if g.n else None,
        "radius": jsonable(radius(g)) if g.n else None,
        "girth": jsonable(girth(g)),
        "chordal": chordal,
        "domination_number": dom_k if dom_k is not None else f"> {max_k}",
        "complemented": complemented,
        "witnesses": {
            ("elimination_order" if chordal else "chordless_cycle"):
                [g.labels[i] for i in chordal_wit],
            "dominating_set":
                [g.labels[i] for i in dom_wit] if dom_wit else None,
            "vertex_without_orthogonal_partner":
                g.labels[lacking] if lacking is not None else None,
        },
    }
    return payload


def render_invariants_markdown(payload: dict) -> str:
    lines = ["# Graph invariants", ""]
    for key in ("vertices", "edges", "diameter", "radius", "girth",
                "chordal", "domination_number", "complemented"):
        lines.append(f"- **{key}**: {payload[key]}")
    lines.append("")
    lines.append("## Witnesses")
    for key, value in payload["witnesses"].items():
        lines.append(f"- {key}: {value}")
    return "\n".join(lines) + "\n"


def dump_json(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"

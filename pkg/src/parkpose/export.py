"""Edge-list, JSON, and DOT writers for relations on S_n."""

from __future__ import annotations

import json

from .permutation import format_vector, length
from .posets import PosetRelation

__all__ = ["relation_edges", "to_edges", "to_json", "to_dot"]


def relation_edges(relation: PosetRelation, poset: bool = True) -> list[tuple]:
    """Cover pairs of a poset, or every strict pair of a non-transitive relation."""
    return relation.covers() if poset else relation.pairs(strict=True)


def _label(x) -> str:
    return format_vector(x)


def to_edges(relation: PosetRelation, poset: bool = True) -> str:
    lines = []
    if not poset:
        lines.append(
            f"# {relation.name}: not transitive, not a poset; every related pair x > y is listed"
        )
    for x, y in relation_edges(relation, poset):
        lines.append(f"{_label(x)}\t{_label(y)}")
    return "\n".join(lines) + "\n"


def to_json(relation: PosetRelation, poset: bool = True) -> str:
    n = len(relation.elements[0]) if relation.elements else 0
    doc = {
        "n": n,
        "order": relation.name,
        "poset": poset,
        "covers": [[_label(x), _label(y)] for x, y in relation_edges(relation, poset)],
    }
    return json.dumps(doc, indent=2) + "\n"


def to_dot(relation: PosetRelation, poset: bool = True) -> str:
    """Hasse diagram with one rank per length, identity at the bottom."""
    out = [f'digraph "{relation.name}" {{', "  rankdir=BT;", "  node [shape=box];"]
    if not poset:
        out.insert(0, f"// {relation.name}: not transitive, not a poset; all related pairs drawn")
    ranks: dict[int, list] = {}
    for x in relation.elements:
        ranks.setdefault(length(x), []).append(x)
    for rank in sorted(ranks):
        names = " ".join(f'"{_label(x)}";' for x in ranks[rank])
        out.append(f"  {{ rank=same; {names} }}")
    for x, y in relation_edges(relation, poset):
        out.append(f'  "{_label(y)}" -> "{_label(x)}" [arrowhead=none];')
    out.append("}")
    return "\n".join(out) + "\n"

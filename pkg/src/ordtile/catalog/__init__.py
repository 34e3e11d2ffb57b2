"""The shipped six-pattern catalog: one pattern per classification case, plus K2 and a remainder-part pattern."""

from __future__ import annotations

from importlib import resources

from ..core import OrderedGraph, mirror, parse_ordered_graph

NAMES = ("K2", "213", "P_A14", "P_B23", "P_C6", "P_D6")


def pattern(name: str) -> OrderedGraph:
    if name == "P_C6m":
        return mirror(pattern("P_C6"))
    text = resources.files(__name__).joinpath(f"{name}.txt").read_text(encoding="utf-8")
    return parse_ordered_graph(text)


def default_catalog() -> list[tuple[str, OrderedGraph]]:
    return [(name, pattern(name)) for name in NAMES]

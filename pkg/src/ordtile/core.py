"""Vertex-ordered graphs on [n] with bitset adjacency.

Vertices are 1-based everywhere in the public API. Internally bit ``v`` of
``adj[v]`` is set for each neighbour, so index 0 of every mask is unused.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable


class GraphFormatError(ValueError):
    """Raised when the exchange text cannot be parsed; carries the line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class OrderedGraph:
    n: int
    edges: frozenset[tuple[int, int]]
    adj: tuple[int, ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]] = ()) -> "OrderedGraph":
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        normalized = set()
        for i, j in edges:
            if i == j:
                raise ValueError(f"self-loop at {i}")
            i, j = min(i, j), max(i, j)
            if i < 1 or j > n:
                raise ValueError(f"edge {i} {j} outside [1, {n}]")
            normalized.add((i, j))
        adj = [0] * (n + 1)
        for i, j in normalized:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return cls(n, frozenset(normalized), tuple(adj))

    @classmethod
    def complete(cls, n: int) -> "OrderedGraph":
        return cls.from_edges(n, ((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)))

    @classmethod
    def empty(cls, n: int) -> "OrderedGraph":
        return cls.from_edges(n)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return i != j and bool(self.adj[i] >> j & 1)

    def neighbors(self, v: int) -> list[int]:
        return [u for u in range(1, self.n + 1) if self.adj[v] >> u & 1]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def with_edge(self, i: int, j: int) -> "OrderedGraph":
        return OrderedGraph.from_edges(self.n, self.edges | {(min(i, j), max(i, j))})

    def __str__(self) -> str:
        return to_text(self)


def interval_mask(a: int, b: int) -> int:
    """Bitmask of the vertices in [a, b] (empty when a > b)."""
    if a > b:
        return 0
    return ((1 << (b - a + 1)) - 1) << a


def is_independent(g: OrderedGraph, a: int, b: int) -> bool:
    """True when the interval [a, b] spans no edge of ``g``."""
    mask = interval_mask(a, b)
    return all(not (g.adj[v] & mask) for v in range(max(a, 1), min(b, g.n) + 1))


def has_edge_in(g: OrderedGraph, a: int, b: int) -> bool:
    return not is_independent(g, a, b)


def min_degree(g: OrderedGraph) -> int:
    if g.n < 1:
        raise ValueError("min_degree needs at least one vertex")
    return min(g.degree(v) for v in range(1, g.n + 1))


def degree_sequence(g: OrderedGraph) -> list[int]:
    return [g.degree(v) for v in range(1, g.n + 1)]


def mirror(g: OrderedGraph) -> OrderedGraph:
    """Reverse the vertex order: vertex i becomes n + 1 - i."""
    n = g.n
    return OrderedGraph.from_edges(n, ((n + 1 - j, n + 1 - i) for i, j in g.edges))


def join(*parts: OrderedGraph) -> OrderedGraph:
    """Concatenate ordered graphs left to right, joining every pair of parts completely."""
    edges = []
    offsets = []
    total = 0
    for part in parts:
        offsets.append(total)
        edges.extend((i + total, j + total) for i, j in part.edges)
        total += part.n
    for x, (off_x, px) in enumerate(zip(offsets, parts)):
        for off_y, py in zip(offsets[x + 1:], parts[x + 1:]):
            edges.extend(
                (off_x + i, off_y + j) for i in range(1, px.n + 1) for j in range(1, py.n + 1)
            )
    return OrderedGraph.from_edges(total, edges)


def disjoint_union(*parts: OrderedGraph) -> OrderedGraph:
    edges = []
    total = 0
    for part in parts:
        edges.extend((i + total, j + total) for i, j in part.edges)
        total += part.n
    return OrderedGraph.from_edges(total, edges)


# -- serialization ----------------------------------------------------------


def parse_ordered_graph(text: str) -> OrderedGraph:
    """Parse the ``n m`` / ``i j`` exchange format. Lines starting with ``#`` are ignored."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        rows.append((lineno, stripped.split()))
    if not rows:
        raise GraphFormatError("missing header", 1)

    lineno, header = rows[0]
    if len(header) != 2:
        raise GraphFormatError(f"malformed header {' '.join(header)!r}, expected 'n m'", lineno)
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphFormatError(f"malformed header {' '.join(header)!r}", lineno) from None
    if n < 1 or m < 0:
        raise GraphFormatError(f"malformed header: n={n} m={m}", lineno)
    if len(rows) - 1 != m:
        where = rows[-1][0] if len(rows) > 1 else lineno
        raise GraphFormatError(f"header announces {m} edges, found {len(rows) - 1}", where)

    edges: set[tuple[int, int]] = set()
    for lineno, fields in rows[1:]:
        if len(fields) != 2:
            raise GraphFormatError(f"expected 'i j', got {' '.join(fields)!r}", lineno)
        try:
            i, j = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError(f"non-integer endpoint in {' '.join(fields)!r}", lineno) from None
        if not (1 <= i <= n and 1 <= j <= n):
            raise GraphFormatError(f"endpoint out of range [1, {n}]: {i} {j}", lineno)
        if i >= j:
            raise GraphFormatError(f"need i < j, got {i} {j}", lineno)
        if (i, j) in edges:
            raise GraphFormatError(f"duplicate edge {i} {j}", lineno)
        edges.add((i, j))
    return OrderedGraph.from_edges(n, edges)


def to_text(g: OrderedGraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{i} {j}" for i, j in g.sorted_edges())
    return "\n".join(lines) + "\n"


def to_json_obj(g: OrderedGraph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}


def from_json_obj(obj: dict) -> OrderedGraph:
    try:
        n = int(obj["n"])
        raw = obj["edges"]
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphFormatError(f"bad JSON graph: {exc}") from None
    lines = [f"{n} {len(raw)}"] + [f"{e[0]} {e[1]}" for e in raw]
    return parse_ordered_graph("\n".join(lines))


def loads(text: str) -> OrderedGraph:
    """Parse either format, sniffing JSON by its leading brace."""
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"invalid JSON: {exc.msg}", exc.lineno) from None
        return from_json_obj(obj)
    return parse_ordered_graph(text)


def load(path) -> OrderedGraph:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def dumps(g: OrderedGraph, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(to_json_obj(g)) + "\n"
    return to_text(g)

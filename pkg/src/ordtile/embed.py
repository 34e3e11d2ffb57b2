"""Order-preserving containment and the exact perfect-tiling oracle.

Candidate sets are Python ints used as bitsets over the host's vertices
(bit v <=> vertex v). For pattern position i the candidates are the
still-available host vertices above the previous image that are adjacent
to the images of every earlier pattern neighbour of i.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator

from .core import OrderedGraph

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class Embedding:
    image: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(self.image))


@dataclass(frozen=True)
class Tiling:
    blocks: tuple[Embedding, ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))

    def vertices(self) -> list[int]:
        return sorted(v for b in self.blocks for v in b.image)

    def as_dict(self) -> dict:
        return {"blocks": [list(b.image) for b in self.blocks]}

    @classmethod
    def from_dict(cls, obj: dict) -> "Tiling":
        return cls(tuple(Embedding(tuple(b)) for b in obj["blocks"]))


class Outcome(str, enum.Enum):
    TILING = "Tiling"
    NO_TILING = "NoTiling"
    NOT_DIVISIBLE = "NotDivisible"
    TIMEOUT = "Timeout"

    @property
    def exit_code(self) -> int:
        return _EXIT_CODES[self]


_EXIT_CODES = {
    Outcome.TILING: 0,
    Outcome.NO_TILING: 1,
    Outcome.NOT_DIVISIBLE: 2,
    Outcome.TIMEOUT: 3,
}


@dataclass
class TilingResult:
    outcome: Outcome
    tiling: Tiling | None = None
    nodes: int = 0

    def __bool__(self) -> bool:
        return self.outcome is Outcome.TILING


class _BudgetExhausted(Exception):
    pass


def _back_neighbours(H: OrderedGraph) -> list[tuple[int, ...]]:
    """For each pattern vertex i (1-based), its neighbours j < i."""
    back = [()] * (H.n + 1)
    for i in range(1, H.n + 1):
        back[i] = tuple(j for j in range(1, i) if H.has_edge(i, j))
    return back


def _full_mask(n: int) -> int:
    return ((1 << n) - 1) << 1


def _iter_embeddings(
    G: OrderedGraph,
    H: OrderedGraph,
    allowed: int,
    back: list[tuple[int, ...]],
    first: int | None = None,
) -> Iterator[tuple[int, ...]]:
    """Yield embedding images inside ``allowed`` in lexicographic order.

    When ``first`` is given the image of pattern vertex 1 is pinned to it.
    """
    h = H.n
    if h == 0:
        yield ()
        return
    adj = G.adj
    image = [0] * (h + 1)

    def extend(i: int, prev: int):
        # vertices strictly above prev
        cand = allowed & ~((1 << (prev + 1)) - 1)
        for j in back[i]:
            cand &= adj[image[j]]
        remaining = h - i
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            if remaining and (allowed >> (v + 1)).bit_count() < remaining:
                return
            image[i] = v
            if i == h:
                yield tuple(image[1:])
            else:
                yield from extend(i + 1, v)

    if first is None:
        yield from extend(1, 0)
        return
    if not allowed >> first & 1:
        return
    image[1] = first
    if h == 1:
        yield (first,)
        return
    yield from extend(2, first)


def iter_embeddings(G: OrderedGraph, H: OrderedGraph) -> Iterator[Embedding]:
    for img in _iter_embeddings(G, H, _full_mask(G.n), _back_neighbours(H)):
        yield Embedding(img)


def find_embedding(G: OrderedGraph, H: OrderedGraph) -> Embedding | None:
    """Lexicographically smallest embedding image of H in G, or None."""
    return next(iter_embeddings(G, H), None)


def count_embeddings(G: OrderedGraph, H: OrderedGraph, cap: int) -> int:
    if cap < 0:
        raise ValueError("cap must be non-negative")
    count = 0
    if cap == 0:
        return 0
    for _ in iter_embeddings(G, H):
        count += 1
        if count >= cap:
            break
    return count


@dataclass
class _Search:
    G: OrderedGraph
    H: OrderedGraph
    budget: int
    nodes: int = 0
    dead: set = field(default_factory=set)

    def __post_init__(self):
        self.back = _back_neighbours(self.H)

    def solve(self, uncovered: int) -> list[tuple[int, ...]] | None:
        if not uncovered:
            return []
        if uncovered in self.dead:
            return None
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExhausted
        v = (uncovered & -uncovered).bit_length() - 1
        for img in _iter_embeddings(self.G, self.H, uncovered, self.back, first=v):
            used = 0
            for u in img:
                used |= 1 << u
            rest = self.solve(uncovered & ~used)
            if rest is not None:
                rest.append(img)
                return rest
        self.dead.add(uncovered)
        return None


def perfect_tiling(G: OrderedGraph, H: OrderedGraph, budget: int = DEFAULT_BUDGET) -> TilingResult:
    """Exhaustive search for a perfect H-tiling of G.

    Branches on the smallest uncovered vertex, which must be the first
    vertex of whichever block covers it. Sub-problems (sets of uncovered
    vertices) proven untileable are remembered, so revisits are free.
    NO_TILING is a proof; running out of ``budget`` search nodes gives
    TIMEOUT instead.
    """
    h = H.n
    if h < 1:
        raise ValueError("pattern must have at least one vertex")
    if G.n % h:
        return TilingResult(Outcome.NOT_DIVISIBLE)
    search = _Search(G, H, budget)
    try:
        blocks = search.solve(_full_mask(G.n))
    except _BudgetExhausted:
        return TilingResult(Outcome.TIMEOUT, nodes=search.nodes)
    if blocks is None:
        return TilingResult(Outcome.NO_TILING, nodes=search.nodes)
    blocks.reverse()
    return TilingResult(Outcome.TILING, Tiling(tuple(Embedding(b) for b in blocks)), search.nodes)


def is_embedding(G: OrderedGraph, H: OrderedGraph, image) -> bool:
    image = tuple(image)
    if len(image) != H.n:
        return False
    if any(not 1 <= v <= G.n for v in image):
        return False
    if any(a >= b for a, b in zip(image, image[1:])):
        return False
    return all(G.has_edge(image[i - 1], image[j - 1]) for i, j in H.edges)


def verify_tiling(G: OrderedGraph, H: OrderedGraph, t: Tiling) -> bool:
    """Certificate check: disjoint valid embeddings covering exactly V(G)."""
    seen: set[int] = set()
    for block in t.blocks:
        if not is_embedding(G, H, block.image):
            return False
        for v in block.image:
            if v in seen:
                return False
            seen.add(v)
    return len(seen) == G.n

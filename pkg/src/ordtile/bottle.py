"""Bottlegraphs for interval-chromatic-2 patterns and tilings of their ordered blow-ups.

A bottlegraph is a complete multipartite template B such that every ordered
blow-up (B(t), phi) has a perfect H-tiling for a suitable t. Part 0 is the
remainder part U_0 when it exists.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import lcm

from .core import OrderedGraph, mirror
from .embed import Embedding, Tiling, find_embedding
from .profile import alpha_minus_seq, alpha_plus_seq, has_property_a


class ChiLtNotTwo(ValueError):
    pass


class Branch(str, enum.Enum):
    NO_PROP_A = "NoPropA"
    PROP_A = "PropA"


@dataclass(frozen=True)
class Bottlegraph:
    part_sizes: tuple[int, ...]
    branch: Branch
    p: int
    r: int
    a: int | None = None
    mirrored: bool = False

    @property
    def order(self) -> int:
        return sum(self.part_sizes)

    @property
    def has_remainder_part(self) -> bool:
        """True when part 0 is U_0 of size r (the NoPropA branch with r > 0)."""
        return self.branch is Branch.NO_PROP_A and self.r > 0

    def as_dict(self) -> dict:
        chi = chi_cr(self.part_sizes)
        return {
            "part_sizes": list(self.part_sizes),
            "branch": self.branch.value,
            "p": self.p,
            "r": self.r,
            "a": self.a,
            "mirrored": self.mirrored,
            "chi_cr": f"{chi.numerator}/{chi.denominator}",
        }


@dataclass(frozen=True)
class IntervalLabeling:
    order: tuple[int, ...]  # part indices, left to right

    def reversed(self) -> "IntervalLabeling":
        return IntervalLabeling(tuple(reversed(self.order)))


def chi_cr(part_sizes) -> Fraction:
    """Critical chromatic number of a complete multipartite graph."""
    sizes = list(part_sizes)
    if len(sizes) < 2:
        raise ValueError("need at least two parts")
    if any(s < 1 for s in sizes):
        raise ValueError("part sizes must be positive")
    total = sum(sizes)
    return Fraction((len(sizes) - 1) * total, total - min(sizes))


def bottlegraph(H: OrderedGraph) -> Bottlegraph:
    plus, minus = alpha_plus_seq(H), alpha_minus_seq(H)
    if len(plus) != 2:
        raise ChiLtNotTwo(f"bottlegraph construction needs chi_<(H) = 2, got {len(plus)}")
    h = H.n
    left, right = plus[0], h - minus[0] + 1
    p = min(left, right)
    if has_property_a(H):
        return Bottlegraph((h - p, p), Branch.PROP_A, p=p, r=h - p)
    a, r = divmod(h, p)
    parts = ((r,) if r else ()) + (p,) * a
    return Bottlegraph(parts, Branch.NO_PROP_A, p=p, r=r, a=a, mirrored=right < left)


def interval_labelings(B: Bottlegraph, dedup: bool = False) -> list[IntervalLabeling]:
    """Every left-to-right placement of the parts; ``dedup`` keeps one per part-size sequence."""
    out = []
    seen = set()
    for perm in permutations(range(len(B.part_sizes))):
        if dedup:
            key = tuple(B.part_sizes[i] for i in perm)
            if key in seen:
                continue
            seen.add(key)
        out.append(IntervalLabeling(perm))
    return out


def part_intervals(part_sizes, labeling: IntervalLabeling, t: int) -> dict[int, range]:
    """Vertex range of each blown-up part."""
    spans = {}
    start = 1
    for idx in labeling.order:
        size = t * part_sizes[idx]
        spans[idx] = range(start, start + size)
        start += size
    return spans


def blowup(B: Bottlegraph | tuple, labeling: IntervalLabeling, t: int) -> OrderedGraph:
    if t < 1:
        raise ValueError("blow-up factor must be positive")
    sizes = B.part_sizes if isinstance(B, Bottlegraph) else tuple(B)
    if sorted(labeling.order) != list(range(len(sizes))):
        raise ValueError(f"labeling {labeling.order} is not a permutation of the parts")
    spans = part_intervals(sizes, labeling, t)
    n = t * sum(sizes)
    part_of = {}
    for idx, span in spans.items():
        for v in span:
            part_of[v] = idx
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if part_of[u] != part_of[v]]
    return OrderedGraph.from_edges(n, edges)


def _typed_decomposition(B: Bottlegraph, labeling: IntervalLabeling) -> tuple[int, list[tuple[int, ...]]]:
    """Type-I / type-II partition of B(t) when U_0 is placed leftmost.

    The size-p parts are used in labeling order: with U'_a the rightmost,
    a type-I set takes p from U'_0 .. U'_{a-1} and r from U'_a; a type-II set
    takes nothing from U'_0, p from U'_1 .. U'_{a-1} and p + r from U'_a.
    """
    p, r = B.p, B.r
    c = lcm(p, r)
    t = c // r
    spans = part_intervals(B.part_sizes, labeling, t)
    pools = [list(spans[idx]) for idx in labeling.order]  # pools[0] is U'_0
    cursor = [0] * len(pools)

    def take(i: int, k: int) -> list[int]:
        got = pools[i][cursor[i]:cursor[i] + k]
        cursor[i] += k
        return got

    last = len(pools) - 1
    blocks = []
    for _ in range(c // p):
        chosen = []
        for i in range(last):
            chosen += take(i, p)
        chosen += take(last, r)
        blocks.append(tuple(sorted(chosen)))
    for _ in range(c // r - c // p):
        chosen = []
        for i in range(1, last):
            chosen += take(i, p)
        chosen += take(last, p + r)
        blocks.append(tuple(sorted(chosen)))
    assert all(cur == len(pool) for cur, pool in zip(cursor, pools)), "type sets must exhaust every part"
    return t, blocks


def _tile_unmirrored(H: OrderedGraph, B: Bottlegraph, labeling: IntervalLabeling) -> tuple[int, Tiling]:
    if B.has_remainder_part and labeling.order[0] == 0:
        t, blocks = _typed_decomposition(B, labeling)
        return t, Tiling(tuple(Embedding(b) for b in blocks))
    # |B| = h: one spanning copy of H, whose existence the construction guarantees
    host = blowup(B, labeling, 1)
    emb = find_embedding(host, H)
    if emb is None:
        raise AssertionError(f"no spanning copy of H in blow-up with labeling {labeling.order}")
    return 1, Tiling((emb,))


def constructive_blowup_tiling(
    H: OrderedGraph, B: Bottlegraph, labeling: IntervalLabeling
) -> tuple[int, Tiling]:
    """Blow-up factor t and an explicit perfect H-tiling of blowup(B, labeling, t).

    For a mirrored template the tiling is built for mirror(H) in the reversed
    blow-up and reflected back.
    """
    if not B.mirrored:
        return _tile_unmirrored(H, B, labeling)
    t, tiling = _tile_unmirrored(mirror(H), B, labeling.reversed())
    n = t * B.order
    blocks = tuple(Embedding(tuple(sorted(n + 1 - v for v in b.image))) for b in tiling.blocks)
    return t, Tiling(tuple(sorted(blocks, key=lambda e: e.image)))

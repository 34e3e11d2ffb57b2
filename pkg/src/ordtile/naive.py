"""Brute-force reference oracles, deliberately sharing no code with ``embed``.

Used only to cross-check the fast engine on small inputs.
"""

from __future__ import annotations

from itertools import combinations

from .core import OrderedGraph


def block_spans(G: OrderedGraph, H: OrderedGraph, block) -> bool:
    """A sorted h-set spans H iff the unique order-preserving map sends every H-edge to a G-edge."""
    block = sorted(block)
    return all((block[i - 1], block[j - 1]) in G.edges for i, j in H.edges)


def all_embeddings(G: OrderedGraph, H: OrderedGraph) -> list[tuple[int, ...]]:
    return [c for c in combinations(range(1, G.n + 1), H.n) if block_spans(G, H, c)]


def partitions_into_blocks(vertices: tuple[int, ...], size: int):
    """All partitions of ``vertices`` into blocks of ``size``; the smallest remaining vertex anchors each block."""
    if not vertices:
        yield []
        return
    head, rest = vertices[0], vertices[1:]
    for others in combinations(rest, size - 1):
        block = (head,) + others
        remaining = tuple(v for v in rest if v not in others)
        for tail in partitions_into_blocks(remaining, size):
            yield [block] + tail


def naive_has_perfect_tiling(G: OrderedGraph, H: OrderedGraph) -> bool | None:
    """None when h does not divide n; otherwise whether any partition works."""
    h = H.n
    if G.n % h:
        return None
    for partition in partitions_into_blocks(tuple(range(1, G.n + 1)), h):
        if all(block_spans(G, H, b) for b in partition):
            return True
    return False


def min_independent_intervals(H: OrderedGraph) -> int:
    """Minimum number of consecutive independent intervals covering [h], over all compositions of h."""
    h = H.n
    best = h
    # a composition is fixed by which of the h-1 gaps are cut
    for cuts in range(1 << (h - 1)):
        pieces = 1
        start = 1
        ok = True
        for gap in range(1, h + 1):
            if gap == h or cuts >> (gap - 1) & 1:
                for a, b in combinations(range(start, gap + 1), 2):
                    if (a, b) in H.edges:
                        ok = False
                        break
                if not ok:
                    break
                if gap < h:
                    pieces += 1
                start = gap + 1
        if ok:
            best = min(best, pieces)
    return best

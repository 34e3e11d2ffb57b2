"""Median splitting: large block-ordered subsets of disjoint sets of integers.

Given disjoint non-empty A_1..A_k, find S_i subset of A_i and a permutation
``perm`` (perm[i] is the 1-based rank of block i) such that S_i < S_j
elementwise whenever perm[i] < perm[j], with |S_i| >= |A_i| / 2**(2**(k-2)).
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CropResult:
    subsets: tuple[frozenset[int], ...]
    perm: tuple[int, ...]

    def as_dict(self) -> dict:
        return {"subsets": [sorted(s) for s in self.subsets], "perm": list(self.perm)}


def lower_median(values) -> int:
    ordered = sorted(values)
    return ordered[(len(ordered) - 1) // 2]


def size_bound_divisor(k: int) -> int:
    return 1 if k <= 1 else 2 ** (2 ** (k - 2))


def _split_pair(a: frozenset[int], b: frozenset[int]) -> tuple[frozenset[int], frozenset[int], bool]:
    """Two-set case. Returns (S_a, S_b, a_is_lower)."""
    if max(a) < min(b):
        return a, b, True
    if max(b) < min(a):
        return a, b, False
    ma, mb = lower_median(a), lower_median(b)
    # medians are elements of disjoint sets, so they never tie
    if ma > mb:
        return frozenset(x for x in a if x >= ma), frozenset(x for x in b if x <= mb), False
    return frozenset(x for x in a if x <= ma), frozenset(x for x in b if x >= mb), True


def _crop(sets: list[frozenset[int]]) -> tuple[list[frozenset[int]], list[int]]:
    k = len(sets)
    if k == 1:
        return [sets[0]], [1]
    if k == 2:
        s1, s2, first_lower = _split_pair(sets[0], sets[1])
        return [s1, s2], [1, 2] if first_lower else [2, 1]

    prev, prev_perm = _crop(sets[:-1])
    top = prev_perm.index(k - 1)  # block currently ranked highest
    s_top, s_new, top_lower = _split_pair(prev[top], sets[-1])
    if top_lower:
        out = list(prev)
        out[top] = s_top
        return out + [s_new], prev_perm + [k]

    # new block sits below the old top block; the old top stays above everything,
    # re-crop the remaining k-1 blocks and put it last
    rest_idx = [i for i in range(k - 1) if i != top]
    inner, inner_perm = _crop([prev[i] for i in rest_idx] + [s_new])
    out: list[frozenset[int]] = [frozenset()] * k
    perm = [0] * k
    for pos, i in enumerate(rest_idx):
        out[i] = inner[pos]
        perm[i] = inner_perm[pos]
    out[k - 1] = inner[-1]
    perm[k - 1] = inner_perm[-1]
    out[top] = s_top
    perm[top] = k
    return out, perm


def crop(sets) -> CropResult:
    blocks = [frozenset(s) for s in sets]
    if not blocks:
        raise ValueError("need at least one set")
    seen: set[int] = set()
    for i, s in enumerate(blocks, start=1):
        if not s:
            raise ValueError(f"set {i} is empty")
        if seen & s:
            raise ValueError(f"set {i} overlaps an earlier set")
        seen |= s
    subsets, perm = _crop(blocks)
    return CropResult(tuple(subsets), tuple(perm))


def check_crop(sets, result: CropResult) -> bool:
    """Both crop invariants: the size bound and the block order."""
    k = len(sets)
    divisor = size_bound_divisor(k)
    if sorted(result.perm) != list(range(1, k + 1)):
        return False
    for a, s in zip(sets, result.subsets):
        if not s <= frozenset(a):
            return False
        if k == 1 and s != frozenset(a):
            return False
        if len(s) * divisor < len(a):
            return False
    for i in range(k):
        for j in range(k):
            if result.perm[i] < result.perm[j] and not max(result.subsets[i]) < min(result.subsets[j]):
                return False
    return True

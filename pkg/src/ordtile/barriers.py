"""Extremal ordered graphs with large minimum degree and no perfect H-tiling."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import OrderedGraph, disjoint_union, join, min_degree, mirror
from .profile import (
    alpha_plus_seq,
    first_has_property_c,
    has_property_b,
    last_has_property_c,
)


class BarrierError(ValueError):
    pass


class PropertyBRequired(BarrierError):
    pass


class PropertyCRequired(BarrierError):
    pass


class Kind(str, enum.Enum):
    SPACE = "space"
    DIVISIBILITY = "div"
    LOCAL = "local"


@dataclass(frozen=True)
class BarrierCertificate:
    kind: Kind
    graph: OrderedGraph
    claimed_min_degree: int
    formula_value: int
    ell: int | None = None
    endpoint: str | None = None  # "last" / "first" for local barriers
    mirrored: bool = False

    def header_lines(self) -> list[str]:
        lines = [f"# barrier: {self.kind.value}"]
        if self.ell is not None:
            lines.append(f"# ell: {self.ell}")
        if self.endpoint is not None:
            lines.append(f"# endpoint: {self.endpoint}")
        if self.mirrored:
            lines.append("# mirrored: true")
        lines.append(f"# min_degree: {self.claimed_min_degree}")
        lines.append(f"# formula_bound: {self.formula_value}")
        return lines

    def as_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "ell": self.ell,
            "endpoint": self.endpoint,
            "mirrored": self.mirrored,
            "min_degree": self.claimed_min_degree,
            "formula_bound": self.formula_value,
        }


def _check_n(h: int, n: int, minimum: int):
    if n % h:
        raise BarrierError(f"pattern order {h} does not divide n={n}")
    if n < minimum:
        raise BarrierError(f"n={n} too small, need n >= {minimum}")


def near_equal_sizes(total: int, parts: int) -> list[int]:
    """Split ``total`` into ``parts`` sizes differing by at most one, larger ones first."""
    q, r = divmod(total, parts)
    return [q + 1] * r + [q] * (parts - r)


def space_barrier(H: OrderedGraph, ell: int, n: int, *, mirrored: bool = False) -> BarrierCertificate:
    """Edgeless intervals A_1 < ... < A_ell on [s+1], a clique on the rest, all parts joined.

    s = floor(alpha^+_ell * n / h). With ``mirrored`` the construction is run on
    the reversed pattern and reversed back, covering the alpha^- side.
    """
    if mirrored:
        cert = space_barrier(mirror(H), ell, n)
        return BarrierCertificate(
            Kind.SPACE, mirror(cert.graph), cert.claimed_min_degree, cert.formula_value, ell=ell, mirrored=True
        )
    h = H.n
    plus = alpha_plus_seq(H)
    if not 1 <= ell < len(plus):
        raise BarrierError(f"ell={ell} must satisfy 1 <= ell < chi_<(H) = {len(plus)}")
    _check_n(h, n, h)
    a = plus[ell - 1]
    s = a * n // h
    parts = [OrderedGraph.empty(size) for size in near_equal_sizes(s + 1, ell)]
    parts.append(OrderedGraph.complete(n - s - 1))
    g = join(*parts)
    # floor((1 - a/(ell h)) n) - 1, in integers
    bound = (ell * h - a) * n // (ell * h) - 1
    return BarrierCertificate(Kind.SPACE, g, min_degree(g), bound, ell=ell)


def divisibility_cut(h: int, n: int) -> int:
    """Largest k <= ceil(n/2) with h not dividing k."""
    k = (n + 1) // 2
    while k % h == 0:
        k -= 1
    return k


def divisibility_barrier(H: OrderedGraph, n: int) -> BarrierCertificate:
    """Two disjoint cliques on [k] and [k+1, n], neither of size divisible by h."""
    h = H.n
    if not has_property_b(H):
        raise PropertyBRequired("divisibility barrier needs a pattern with Property B")
    _check_n(h, n, 2 * h)
    k = divisibility_cut(h, n)
    g = disjoint_union(OrderedGraph.complete(k), OrderedGraph.complete(n - k))
    return BarrierCertificate(Kind.DIVISIBILITY, g, min_degree(g), n // 2 - 2)


def local_barrier(H: OrderedGraph, n: int) -> BarrierCertificate:
    """Join of edgeless [1, ceil(n/2)-1] and [ceil(n/2), n-1], plus n attached to the second interval.

    Built directly when vertex h has Property C, otherwise mirrored from the
    reversed pattern (whose last vertex then has it).
    """
    h = H.n
    if last_has_property_c(H):
        endpoint = "last"
    elif first_has_property_c(H):
        endpoint = "first"
    else:
        raise PropertyCRequired("local barrier needs vertex 1 or vertex h to have Property C")
    _check_n(h, n, 2 * h)
    half = (n + 1) // 2
    g = join(OrderedGraph.empty(half - 1), OrderedGraph.empty(n - half))
    g = OrderedGraph.from_edges(n, g.edges | {(v, n) for v in range(half, n)})
    if endpoint == "first":
        g = mirror(g)
    return BarrierCertificate(Kind.LOCAL, g, min_degree(g), n // 2, endpoint=endpoint, mirrored=endpoint == "first")

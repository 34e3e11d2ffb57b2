"""Pattern parameters of an ordered graph and the interval-chromatic-2 classification."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .core import OrderedGraph, has_edge_in, is_independent


class AlphaStarUndefined(ValueError):
    """alpha* needs at least two intervals; edgeless patterns have only one."""


class Case(str, enum.Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    UNCLASSIFIED = "Unclassified"


@dataclass(frozen=True)
class PatternProfile:
    h: int
    chi_lt: int
    alpha_plus: tuple[int, ...]
    alpha_minus: tuple[int, ...]
    alpha_star: Fraction | None
    s: int
    l: int
    prop_a: bool
    prop_b: bool
    prop_c_first: bool
    prop_c_last: bool
    case: Case
    threshold_coeff: Fraction | None

    @property
    def lower_bound_coeff(self) -> Fraction | None:
        """1 - alpha*, the space-barrier coefficient; meaningful for every chi_< >= 2."""
        return None if self.alpha_star is None else 1 - self.alpha_star

    def as_dict(self) -> dict:
        def frac(x):
            return None if x is None else f"{x.numerator}/{x.denominator}"

        return {
            "h": self.h,
            "chi_lt": self.chi_lt,
            "alpha_plus": list(self.alpha_plus),
            "alpha_minus": list(self.alpha_minus),
            "alpha_star": frac(self.alpha_star),
            "s": self.s,
            "l": self.l,
            "prop_a": self.prop_a,
            "prop_b": self.prop_b,
            "prop_c_first": self.prop_c_first,
            "prop_c_last": self.prop_c_last,
            "case": self.case.value,
            "threshold_coeff": frac(self.threshold_coeff),
            "lower_bound_coeff": frac(self.lower_bound_coeff),
        }


def alpha_plus_seq(H: OrderedGraph) -> list[int]:
    """Greedy left-to-right sweep of maximal independent intervals; returns the right ends."""
    h = H.n
    seq = []
    start = 1
    while start <= h:
        end = start
        while end < h and is_independent(H, start, end + 1):
            end += 1
        seq.append(end)
        start = end + 1
    return seq


def alpha_minus_seq(H: OrderedGraph) -> list[int]:
    """Right-to-left sweep; returns the left ends, finishing at 1."""
    h = H.n
    seq = []
    end = h
    while end >= 1:
        start = end
        while start > 1 and is_independent(H, start - 1, end):
            start -= 1
        seq.append(start)
        end = start - 1
    return seq


def interval_chromatic_number(H: OrderedGraph) -> int:
    return len(alpha_plus_seq(H))


def alpha_star(H: OrderedGraph) -> Fraction:
    plus, minus = alpha_plus_seq(H), alpha_minus_seq(H)
    chi = len(plus)
    if chi < 2:
        raise AlphaStarUndefined("alpha* is undefined for patterns with interval chromatic number 1")
    h = H.n
    return min(
        min(Fraction(plus[ell - 1], ell * h), Fraction(h - minus[ell - 1] + 1, ell * h))
        for ell in range(1, chi)
    )


def s_param(H: OrderedGraph) -> int:
    """Smallest neighbour of vertex h, or 0 when h is isolated."""
    h = H.n
    nbrs = H.neighbors(h)
    return nbrs[0] if nbrs else 0


def l_param(H: OrderedGraph) -> int:
    """Largest neighbour of vertex 1, or h + 1 when 1 is isolated."""
    nbrs = H.neighbors(1)
    return nbrs[-1] if nbrs else H.n + 1


def has_property_a(H: OrderedGraph) -> bool:
    h = H.n
    return is_independent(H, 1, h // 2 + 1) and is_independent(H, (h + 1) // 2, h)


def has_property_b(H: OrderedGraph) -> bool:
    h = H.n
    for i in range(1, h):
        if not any(a <= i < b for a, b in H.edges):
            return False
    return True


def last_has_property_c(H: OrderedGraph) -> bool:
    s = s_param(H)
    return s >= 1 and has_edge_in(H, s, H.n - 1)


def first_has_property_c(H: OrderedGraph) -> bool:
    l = l_param(H)
    return l <= H.n and has_edge_in(H, 2, l)


def compute_profile(H: OrderedGraph) -> PatternProfile:
    h = H.n
    plus, minus = alpha_plus_seq(H), alpha_minus_seq(H)
    chi = len(plus)
    a_star = alpha_star(H) if chi >= 2 else None
    prop_a = has_property_a(H)
    prop_b = has_property_b(H)
    c_first = first_has_property_c(H)
    c_last = last_has_property_c(H)

    case = Case.UNCLASSIFIED
    coeff = None
    if chi == 2:
        if not prop_a:
            case, coeff = Case.I, 1 - a_star
        elif prop_b:
            case, coeff = Case.II, Fraction(1, 2)
        elif c_first or c_last:
            case, coeff = Case.III, Fraction(1, 2)
        else:
            case, coeff = Case.IV, 1 - a_star

    return PatternProfile(
        h=h,
        chi_lt=chi,
        alpha_plus=tuple(plus),
        alpha_minus=tuple(minus),
        alpha_star=a_star,
        s=s_param(H),
        l=l_param(H),
        prop_a=prop_a,
        prop_b=prop_b,
        prop_c_first=c_first,
        prop_c_last=c_last,
        case=case,
        threshold_coeff=coeff,
    )


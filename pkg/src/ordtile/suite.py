"""Invariant battery over a pattern catalog, used by ``ordtile verify-suite``."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .barriers import divisibility_barrier, local_barrier, space_barrier
from .bottle import bottlegraph, blowup, chi_cr, constructive_blowup_tiling, interval_labelings
from .core import OrderedGraph, mirror
from .crop import check_crop, crop
from .embed import Outcome, iter_embeddings, perfect_tiling, verify_tiling
from .naive import min_independent_intervals, naive_has_perfect_tiling
from .probe import derive_seed, random_ordered_graph
from .profile import (
    alpha_minus_seq,
    alpha_plus_seq,
    compute_profile,
    first_has_property_c,
    has_property_b,
    last_has_property_c,
)

PASS, FAIL, SKIP = "pass", "fail", "skip"


class EmptyCatalog(ValueError):
    pass


@dataclass
class CheckResult:
    name: str
    pattern: str
    params: dict
    outcome: str
    runtime: float
    detail: str = ""

    def as_dict(self) -> dict:
        return {
            "check": self.name,
            "pattern": self.pattern,
            "params": self.params,
            "outcome": self.outcome,
            "runtime": round(self.runtime, 4),
            "detail": self.detail,
        }


@dataclass
class SuiteReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.outcome != FAIL for c in self.checks)

    def as_dict(self) -> dict:
        return {"passed": self.passed, "checks": [c.as_dict() for c in self.checks]}


@dataclass(frozen=True)
class Limits:
    max_n: int = 18
    naive_max_n: int = 10
    naive_hosts: int = 40
    crop_inputs: int = 200
    budget: int = 10**8
    seed: int = 0


def barrier_sizes(h: int, max_n: int, minimum: int) -> list[int]:
    return [n for n in range(h, max_n + 1, h) if n >= minimum]


def _profile_checks(H: OrderedGraph) -> tuple[bool, str]:
    h = H.n
    plus, minus = alpha_plus_seq(H), alpha_minus_seq(H)
    mplus, mminus = alpha_plus_seq(mirror(H)), alpha_minus_seq(mirror(H))
    if mplus != [h + 1 - x for x in minus] or mminus != [h + 1 - x for x in plus]:
        return False, "mirror duality of alpha sequences"
    if h <= 12 and len(plus) != min_independent_intervals(H):
        return False, "greedy chi_< differs from exhaustive minimum"
    prof = compute_profile(H)
    if prof.chi_lt >= 2:
        if compute_profile(mirror(H)).alpha_star != prof.alpha_star:
            return False, "alpha* not mirror invariant"
        if (H.has_edge(1, 2) or H.has_edge(h - 1, h)) and prof.alpha_star != Fraction(1, h):
            return False, "alpha* != 1/h despite an edge 12 or (h-1)h"
    if prof.chi_lt == 2:
        if prof.prop_a != (prof.alpha_star > Fraction(1, 2)):
            return False, "Property A disagrees with alpha* > 1/2"
        if compute_profile(mirror(H)).case != prof.case:
            return False, "case not mirror invariant"
        if prof.threshold_coeff not in (1 - prof.alpha_star, Fraction(1, 2)):
            return False, "threshold coefficient outside {1 - alpha*, 1/2}"
    return True, ""


def _barriers(H: OrderedGraph, max_n: int):
    h = H.n
    chi = len(alpha_plus_seq(H))
    for ell in range(1, chi):
        for n in barrier_sizes(h, max_n, h):
            yield f"space(ell={ell},n={n})", space_barrier(H, ell, n)
            yield f"space-mirror(ell={ell},n={n})", space_barrier(H, ell, n, mirrored=True)
    if chi == 2 and has_property_b(H):
        for n in barrier_sizes(h, max_n, 2 * h):
            yield f"div(n={n})", divisibility_barrier(H, n)
    if chi == 2 and (first_has_property_c(H) or last_has_property_c(H)):
        for n in barrier_sizes(h, max_n, 2 * h):
            yield f"local(n={n})", local_barrier(H, n)


def _space_intersection_ok(H: OrderedGraph, ell: int, cert) -> bool:
    """Every copy of H meets [s+1] in at most alpha^+_ell vertices."""
    a = alpha_plus_seq(H)[ell - 1]
    s = a * cert.graph.n // H.n
    return all(sum(1 for v in e.image if v <= s + 1) <= a for e in iter_embeddings(cert.graph, H))


def _bottle_checks(H: OrderedGraph, budget: int, max_oracle: int = 18) -> tuple[bool, str]:
    B = bottlegraph(H)
    if chi_cr(B.part_sizes) != 1 / compute_profile(H).alpha_star:
        return False, "chi_cr(B) != 1/alpha*"
    for lab in interval_labelings(B):
        t, tiling = constructive_blowup_tiling(H, B, lab)
        host = blowup(B, lab, t)
        if not verify_tiling(host, H, tiling):
            return False, f"constructive tiling rejected for labeling {lab.order}"
        if host.n <= max_oracle and perfect_tiling(host, H, budget).outcome is not Outcome.TILING:
            return False, f"oracle found no tiling for labeling {lab.order}"
    return True, ""


def _oracle_vs_naive(H: OrderedGraph, limits: Limits, name: str) -> tuple[bool, str]:
    h = H.n
    sizes = [n for n in range(h, limits.naive_max_n + 1, h)]
    for k in range(limits.naive_hosts):
        n = sizes[k % len(sizes)]
        seed = derive_seed(limits.seed, "naive", name, k)
        p = random.Random(seed).uniform(0.3, 1.0)
        g = random_ordered_graph(n, p, seed)
        res = perfect_tiling(g, H, limits.budget)
        expected = naive_has_perfect_tiling(g, H)
        if res.outcome is Outcome.TILING and not (expected and verify_tiling(g, H, res.tiling)):
            return False, f"oracle/naive mismatch on seed {seed}"
        if res.outcome is Outcome.NO_TILING and expected:
            return False, f"oracle/naive mismatch on seed {seed}"
        if res.outcome is Outcome.TIMEOUT:
            return False, f"timeout on seed {seed}"
    return True, ""


def _crop_checks(limits: Limits) -> tuple[bool, str]:
    rng = random.Random(derive_seed(limits.seed, "crop"))
    for _ in range(limits.crop_inputs):
        k = rng.choice((2, 3, 4))
        n = rng.randint(k, 200)
        pool = rng.sample(range(1, n + 1), rng.randint(k, n))
        cuts = sorted(rng.sample(range(1, len(pool)), k - 1))
        sets = [pool[a:b] for a, b in zip([0] + cuts, cuts + [len(pool)])]
        if not check_crop(sets, crop(sets)):
            return False, f"crop invariant failed on {sets}"
    return True, ""


def _timed(report: SuiteReport, name: str, pattern: str, params: dict, fn):
    start = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash inside a check is a failed check
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    report.checks.append(
        CheckResult(name, pattern, params, PASS if ok else FAIL, time.perf_counter() - start, detail)
    )


def verify_suite(catalog: list[tuple[str, OrderedGraph]], limits: Limits = Limits()) -> SuiteReport:
    if not catalog:
        raise EmptyCatalog("nothing to verify: the catalog is empty")
    report = SuiteReport()
    for name, H in catalog:
        _timed(report, "profile", name, {}, lambda: _profile_checks(H))
        chi = len(alpha_plus_seq(H))
        if chi != 2:
            note = "edgeless pattern, alpha* undefined" if chi == 1 else f"chi_< = {chi}: case unclassified"
            report.checks.append(CheckResult("classification", name, {}, SKIP, 0.0, note))

        if chi >= 2:
            for label, cert in _barriers(H, limits.max_n):
                def check(cert=cert, label=label):
                    res = perfect_tiling(cert.graph, H, limits.budget)
                    if res.outcome is not Outcome.NO_TILING:
                        return False, f"oracle outcome {res.outcome.value}"
                    if cert.claimed_min_degree < cert.formula_value:
                        return False, "min degree below the stated bound"
                    if label.startswith("space(") and cert.graph.n <= 12:
                        if not _space_intersection_ok(H, cert.ell, cert):
                            return False, "a copy of H uses too many vertices of [s+1]"
                    return True, ""

                _timed(report, "barrier", name, {"barrier": label}, check)

        if chi == 2:
            _timed(report, "bottlegraph", name, {}, lambda: _bottle_checks(H, limits.budget))
        else:
            report.checks.append(CheckResult("bottlegraph", name, {}, SKIP, 0.0, "needs chi_< = 2"))

        if H.n <= limits.naive_max_n:
            _timed(report, "oracle-vs-naive", name, {"hosts": limits.naive_hosts}, lambda: _oracle_vs_naive(H, limits, name))

    _timed(report, "crop", "-", {"inputs": limits.crop_inputs}, lambda: _crop_checks(limits))
    return report


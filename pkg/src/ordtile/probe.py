"""Monte Carlo harness: oracle outcomes on random ordered graphs across a parameter grid."""

from __future__ import annotations

import csv
import hashlib
import io
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from decimal import Decimal

from .core import OrderedGraph, min_degree
from .embed import DEFAULT_BUDGET, Outcome, perfect_tiling

CSV_COLUMNS = ("n", "param", "trials", "successes", "timeouts", "mean_nodes", "seed")
DEFAULT_MAX_REJECTIONS = 10_000


class ProbeError(RuntimeError):
    pass


@dataclass(frozen=True)
class ProbeRow:
    n: int
    param: str
    trials: int
    successes: int
    timeouts: int
    mean_nodes: float
    seed: int

    @property
    def tiling_rate(self) -> float:
        return self.successes / self.trials if self.trials else 0.0

    def csv_values(self) -> list[str]:
        return [
            str(self.n),
            self.param,
            str(self.trials),
            str(self.successes),
            str(self.timeouts),
            f"{self.mean_nodes:.3f}",
            str(self.seed),
        ]


def derive_seed(*parts) -> int:
    """Stable 64-bit seed from the given parts (independent of PYTHONHASHSEED)."""
    digest = hashlib.sha256(":".join(str(p) for p in parts).encode()).digest()
    return int.from_bytes(digest[:8], "big")


def random_ordered_graph(n: int, p: float, seed: int) -> OrderedGraph:
    if not 0 <= p <= 1:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < p]
    return OrderedGraph.from_edges(n, edges)


def parse_grid(text: str) -> tuple[str, list[Decimal]]:
    """``p=0.2:0.9:0.1`` (inclusive range), ``p=0.3,0.5`` or ``mindeg=3:6:1``."""
    key, sep, body = text.partition("=")
    key = key.strip()
    if not sep or key not in ("p", "mindeg"):
        raise ValueError(f"grid must look like p=LO:HI:STEP or mindeg=LO:HI:STEP, got {text!r}")
    if ":" in body:
        lo, hi, step = (Decimal(x) for x in body.split(":"))
        if step <= 0:
            raise ValueError("grid step must be positive")
        values = []
        v = lo
        while v <= hi:
            values.append(v)
            v += step
    else:
        values = [Decimal(x) for x in body.split(",") if x.strip()]
    if not values:
        raise ValueError(f"empty grid {text!r}")
    return key, values


def _sample(n: int, key: str, value: Decimal, base_p: float, seed: int, max_rejections: int):
    if key == "p":
        return random_ordered_graph(n, float(value), seed)
    target = int(value)
    for attempt in range(max_rejections):
        g = random_ordered_graph(n, base_p, derive_seed(seed, attempt))
        if min_degree(g) >= target:
            return g
    raise ProbeError(f"no sample with min degree >= {target} after {max_rejections} draws")


def _trial(args) -> tuple[Outcome, int]:
    H, n, key, value, base_p, seed, budget, max_rejections = args
    g = _sample(n, key, value, base_p, seed, max_rejections)
    res = perfect_tiling(g, H, budget=budget)
    return res.outcome, res.nodes


def threshold_probe(
    H: OrderedGraph,
    n: int,
    grid: str | tuple[str, list],
    trials: int,
    seed: int,
    *,
    budget: int = DEFAULT_BUDGET,
    base_p: float = 0.5,
    max_rejections: int = DEFAULT_MAX_REJECTIONS,
    jobs: int = 1,
) -> list[ProbeRow]:
    """One row per grid point. Trial seeds depend only on (seed, grid value, trial index)."""
    if n % H.n:
        raise ValueError(f"pattern order {H.n} does not divide n={n}")
    key, values = parse_grid(grid) if isinstance(grid, str) else grid
    rows = []
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        for value in values:
            tasks = [
                (H, n, key, Decimal(value), base_p, derive_seed(seed, key, value, t), budget, max_rejections)
                for t in range(trials)
            ]
            results = list(pool.map(_trial, tasks)) if pool else [_trial(t) for t in tasks]
            successes = sum(1 for o, _ in results if o is Outcome.TILING)
            timeouts = sum(1 for o, _ in results if o is Outcome.TIMEOUT)
            mean_nodes = sum(nodes for _, nodes in results) / trials if trials else 0.0
            rows.append(ProbeRow(n, f"{key}={value}", trials, successes, timeouts, mean_nodes, seed))
    finally:
        if pool:
            pool.shutdown()
    return rows


def rows_to_csv(rows: list[ProbeRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(row.csv_values())
    return buf.getvalue()


def sanity_anchors(H: OrderedGraph, n: int, barrier_graphs, budget: int = DEFAULT_BUDGET) -> dict[str, bool]:
    """Complete graph must tile; every supplied barrier must be a proven NoTiling."""
    checks = {"complete": perfect_tiling(OrderedGraph.complete(n), H, budget).outcome is Outcome.TILING}
    for name, g in barrier_graphs:
        checks[name] = perfect_tiling(g, H, budget).outcome is Outcome.NO_TILING
    return checks

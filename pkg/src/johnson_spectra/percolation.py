"""Bond percolation on explicit Johnson graphs.

Each edge of G(n, r, s) is kept independently with probability p = c / d.
For c > 1 the largest component is expected to hold about 1 - abar(c)/c of
the vertices, where abar(c) is the root in (0, 1) of x e^{-x} = c e^{-c};
for c < 1 every component should be logarithmically small.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

import numpy as np

from .oracle import DEFAULT_VERTEX_CAP, DisjointSet, ExplicitGraph, build_graph
from .spectrum import GraphParams, ParamsLike, as_params, full_spectrum

__all__ = [
    "PercolationConfig",
    "PercolationTrial",
    "PercolationSummary",
    "alpha_bar",
    "predicted_fraction",
    "trial_rng",
    "sample_subgraph",
    "run_percolation",
    "threshold_scan",
]

Number = Union[int, float, Fraction]


def alpha_bar(c: float, tol: float = 1e-15) -> float:
    """Root in (0, 1) of x e^{-x} = c e^{-c} for c > 1, by bisection.

    x e^{-x} is increasing on (0, 1) and the right-hand side lies strictly
    between its values at 0 and 1, so the bracket [0, 1] always works.
    """
    c = float(c)
    if not c > 1.0:
        raise ValueError(
            f"alpha_bar needs c > 1 (got {c}): for c <= 1 there is no root of "
            "x e^-x = c e^-c distinct from c itself"
        )
    target = c * math.exp(-c)
    lo, hi = 0.0, 1.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid * math.exp(-mid) < target:
            lo = mid
        else:
            hi = mid
        if hi - lo <= tol:
            break
    return 0.5 * (lo + hi)


def predicted_fraction(c: float) -> float:
    """Expected giant-component share 1 - abar(c)/c; 0 for c <= 1."""
    c = float(c)
    if c <= 1.0:
        return 0.0
    return 1.0 - alpha_bar(c) / c


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Independent Philox stream for one trial, fixed by (seed, trial) alone."""
    if not 0 <= seed < 2**64:
        raise ValueError("seed must be a 64-bit unsigned integer")
    ss = np.random.SeedSequence(seed, spawn_key=(trial,))
    return np.random.Generator(np.random.Philox(ss))


def sample_subgraph(graph: ExplicitGraph, p: float, rng: np.random.Generator) -> list[int]:
    """Keep each edge with probability p; return component sizes, largest first."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must be in [0, 1], got {p}")
    us, vs = graph.edge_array
    keep = rng.random(us.size) < p
    ds = DisjointSet(graph.order)
    for u, v in zip(us[keep].tolist(), vs[keep].tolist()):
        ds.union(u, v)
    return ds.component_sizes()


@dataclass(frozen=True)
class PercolationConfig:
    params: GraphParams
    c: Number
    trials: int = 20
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "params", as_params(self.params))
        if not self.c > 0:
            raise ValueError(f"intensity c must be positive, got {self.c}")
        if self.trials < 1:
            raise ValueError(f"need at least one trial, got {self.trials}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


@dataclass(frozen=True)
class PercolationTrial:
    index: int
    largest: int
    second: int
    n_components: int


@dataclass(frozen=True)
class PercolationSummary:
    params: GraphParams
    c: Number
    p: float
    seed: int
    vertex_count: int
    degree: int
    lambda_over_d: Fraction
    trials: tuple[PercolationTrial, ...]
    mean_fraction: float
    std_fraction: float
    predicted: float

    @property
    def largest_sizes(self) -> list[int]:
        return [t.largest for t in self.trials]

    @property
    def second_sizes(self) -> list[int]:
        return [t.second for t in self.trials]

    def row(self) -> dict:
        """Flat record for CSV / JSON output."""
        return {
            "n": self.params.n,
            "r": self.params.r,
            "s": self.params.s,
            "c": str(self.c),
            "p": repr(self.p),
            "seed": self.seed,
            "trials": len(self.trials),
            "N": self.vertex_count,
            "d": self.degree,
            "lambda_over_d": str(self.lambda_over_d),
            "mean_fraction": repr(self.mean_fraction),
            "std_fraction": repr(self.std_fraction),
            "predicted_fraction": repr(self.predicted),
            "max_largest": max(self.largest_sizes),
            "max_second": max(self.second_sizes),
            "largest": " ".join(map(str, self.largest_sizes)),
            "second": " ".join(map(str, self.second_sizes)),
        }


def run_percolation(config: PercolationConfig, graph: Optional[ExplicitGraph] = None,
                    cap: int = DEFAULT_VERTEX_CAP) -> PercolationSummary:
    """Run ``config.trials`` independent trials at p = c / d."""
    params = config.params
    if graph is None:
        graph = build_graph(params, cap=cap)
    elif graph.params != params:
        raise ValueError(f"graph is {graph.params}, config asks for {params}")
    spec = full_spectrum(params)
    d = spec.degree
    if config.c > d:
        raise ValueError(f"c = {config.c} exceeds the degree d = {d}, so p = c/d > 1")
    p = float(Fraction(config.c) / d) if not isinstance(config.c, float) else config.c / d

    trials = []
    for t in range(config.trials):
        sizes = sample_subgraph(graph, p, trial_rng(config.seed, t))
        second = sizes[1] if len(sizes) > 1 else 0
        trials.append(PercolationTrial(t, sizes[0], second, len(sizes)))

    N = graph.order
    fracs = [t.largest / N for t in trials]
    std = statistics.stdev(fracs) if len(fracs) > 1 else 0.0
    return PercolationSummary(
        params=params, c=config.c, p=p, seed=config.seed, vertex_count=N, degree=d,
        lambda_over_d=Fraction(spec.lam, d), trials=tuple(trials),
        mean_fraction=statistics.fmean(fracs), std_fraction=std,
        predicted=predicted_fraction(config.c),
    )


def threshold_scan(params: ParamsLike, c_values: Iterable[Number], trials: int = 20,
                   seed: int = 0, cap: int = DEFAULT_VERTEX_CAP) -> list[PercolationSummary]:
    """One summary per intensity, all on the same graph and seed."""
    p = as_params(params)
    graph = build_graph(p, cap=cap)
    return [run_percolation(PercolationConfig(p, c, trials, seed), graph=graph) for c in c_values]

"""Timing harness for the linear-time routines.

Random cographs on 10^5 vertices carry billions of edges, so the timed
cores read only the cotree (or its binarization). Tree generation sits
outside the timed region. The weighted routine needs the adjacency and
is limited to ``WEIGHTED_LIMIT`` vertices.
"""

from __future__ import annotations

import gc
import random
import statistics
import time
from dataclasses import dataclass
from typing import Any, Callable

from .augment_vertex import augment_vertex_weighted, vertex_augmentation_from_cotree
from .cotree import JOIN, Cotree, binarize, random_cograph, realize
from .errors import CompleteGraph, InputError, InstanceTooLarge
from .graph import WeightMap
from .longest_path import path_dp
from .separators import separators_from_cotree

WEIGHTED_LIMIT = 500
ALGORITHMS = ("mvs", "augment-vertex", "augment-vertex-weighted", "longest-path")


@dataclass(frozen=True)
class BenchConfig:
    algorithm: str
    sizes: tuple[int, ...]
    seed: int = 0
    repeats: int = 5


def _prepare(algorithm: str, n: int, seed: int) -> Callable[[], Any]:
    t = _non_complete_cograph(n, seed)
    if algorithm == "mvs":
        return lambda: separators_from_cotree(t)
    if algorithm == "augment-vertex":
        return lambda: vertex_augmentation_from_cotree(t)
    if algorithm == "longest-path":
        root = binarize(t).root
        return lambda: path_dp(root)
    if algorithm == "augment-vertex-weighted":
        if n > WEIGHTED_LIMIT:
            raise InstanceTooLarge(f"weighted benchmark limited to n <= {WEIGHTED_LIMIT}")
        g = realize(t)
        rng = random.Random(seed)
        w = WeightMap({e: rng.randint(1, 100) for e in g.non_edges()})
        return lambda: augment_vertex_weighted(g, t, w)
    raise InputError(f"unknown algorithm {algorithm!r}; choose from {', '.join(ALGORITHMS)}")


def _non_complete_cograph(n: int, seed: int) -> Cotree:
    # augmentation needs a non-complete graph; reseed until the root has a union child
    for s in range(seed, seed + 100):
        t = random_cograph(n, s, root_label=JOIN)
        if n < 3 or any(not c.is_leaf for c in t.root.children):
            return t
    raise CompleteGraph("could not draw a non-complete cograph")


def run_bench(cfg: BenchConfig) -> dict[str, Any]:
    """Median wall time over ``cfg.repeats`` runs per size, plus ratios of consecutive medians."""
    if cfg.repeats < 5:
        raise InputError("at least five repeats are required")
    rows = []
    for n in cfg.sizes:
        fn = _prepare(cfg.algorithm, n, cfg.seed)
        runs = []
        # like timeit: no collector pauses, and freeing the result is not timed
        was_enabled = gc.isenabled()
        gc.disable()
        try:
            for _ in range(cfg.repeats):
                t0 = time.perf_counter()
                out = fn()
                runs.append(time.perf_counter() - t0)
                del out
        finally:
            if was_enabled:
                gc.enable()
        rows.append({"n": n, "median_seconds": statistics.median(runs), "runs": runs})
    ratios = [
        {"from": a["n"], "to": b["n"], "ratio": b["median_seconds"] / a["median_seconds"]}
        for a, b in zip(rows, rows[1:])
        if a["median_seconds"] > 0
    ]
    return {
        "algorithm": cfg.algorithm,
        "seed": cfg.seed,
        "repeats": cfg.repeats,
        "rows": rows,
        "ratios": ratios,
    }

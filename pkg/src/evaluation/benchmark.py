"""
Timing harness for the ray and augmentation algorithms.

Each task draws a random rectilinear drawing, fixes the star of vertex 1
as reference subgraph and times:
  - brute-force and fast uncrossed rays of the last vertex
  - greedy_maximal from scratch
  - maximal_connected_fast from the star
Growth exponents come from a least-squares fit on log-log data.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from tqdm import tqdm

from ..augmentation.maximal import greedy_maximal, maximal_connected_fast
from ..augmentation.rays import uncrossed_rays_brute, uncrossed_rays_fast
from ..config import get_settings
from ..exceptions import InvariantError, PreconditionError
from ..generators.points import gen_random
from ..structure.plane import PlaneSubgraph

log = logging.getLogger(__name__)

ALGORITHMS = ("rays_brute", "rays_fast", "greedy_maximal", "maximal_connected_fast")
COLUMNS = ["algorithm", "n", "repeat", "seconds", "result"]


def _timed(fn: Callable, *args) -> Tuple[float, object]:
    start = time.perf_counter()
    out = fn(*args)
    return time.perf_counter() - start, out


def run_task(n: int, seed: int, repeat: int) -> List[Dict]:
    """Time every algorithm on one random drawing; rows for the result table."""
    d = gen_random(n, seed + repeat)
    star = PlaneSubgraph(d, d.star(1), check=False)
    v = d.n

    t_brute, brute = _timed(uncrossed_rays_brute, d, star, v)
    t_fast, fast = _timed(uncrossed_rays_fast, d, star, v)
    if brute != fast:
        raise InvariantError(f"ray algorithms disagree on n={n}, seed={seed + repeat}")
    t_greedy, greedy = _timed(greedy_maximal, d)
    t_conn, conn = _timed(maximal_connected_fast, d, star)

    timings = [(t_brute, len(brute)), (t_fast, len(fast)),
               (t_greedy, len(greedy)), (t_conn, len(conn))]
    return [
        {"algorithm": name, "n": n, "repeat": repeat, "seconds": secs, "result": size}
        for name, (secs, size) in zip(ALGORITHMS, timings)
    ]


def bench(sizes: Sequence[int], seed: int, repeats: int = 1,
          workers: Optional[int] = None, progress: bool = True) -> pd.DataFrame:
    """
    Time all algorithms over the given sizes.

    Args:
        sizes: Vertex counts, each at least 3
        seed: Base seed; repeat r uses seed + r
        repeats: Drawings per size
        workers: Parallel processes (defaults to the configured bench workers)
        progress: Show a progress bar

    Returns:
        DataFrame with one row per (algorithm, n, repeat)

    Raises:
        PreconditionError: on empty sizes, sizes below 3 or repeats below 1
    """
    if not sizes:
        raise PreconditionError("bench needs at least one size")
    if min(sizes) < 3:
        raise PreconditionError(f"bench sizes must be >= 3, got {min(sizes)}")
    if repeats < 1:
        raise PreconditionError(f"repeats must be >= 1, got {repeats}")
    workers = get_settings().bench_workers if workers is None else workers

    tasks = [(n, seed, r) for n in sizes for r in range(repeats)]
    rows: List[Dict] = []
    if workers <= 1:
        for task in tqdm(tasks, desc="bench", disable=not progress):
            rows.extend(run_task(*task))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(run_task, *task) for task in tasks]
            for fut in tqdm(as_completed(futures), total=len(futures), desc="bench",
                            disable=not progress):
                rows.extend(fut.result())

    df = pd.DataFrame(rows, columns=COLUMNS)
    df = df.sort_values(["algorithm", "n", "repeat"]).reset_index(drop=True)
    log.info("bench finished: %d tasks, %d workers", len(tasks), workers)
    return df


def growth_slopes(df: pd.DataFrame) -> pd.Series:
    """
    Log-log slope of mean running time against n, per algorithm.

    Algorithms measured at fewer than two sizes get NaN.
    """
    slopes = {}
    means = df.groupby(["algorithm", "n"])["seconds"].mean().reset_index()
    for name, group in means.groupby("algorithm"):
        group = group[group["seconds"] > 0]
        if group["n"].nunique() < 2:
            slopes[name] = float("nan")
            continue
        slope, _ = np.polyfit(np.log(group["n"]), np.log(group["seconds"]), 1)
        slopes[name] = float(slope)
    return pd.Series(slopes, name="slope").sort_index()

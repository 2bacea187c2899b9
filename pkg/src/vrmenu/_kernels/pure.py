"""Pure-Python kernel, the reference the compiled one must match."""

from __future__ import annotations

import numpy as np


def accumulate_trials(
    mts: np.ndarray, draws: np.ndarray, start: float = 0.0
) -> tuple[float, np.ndarray]:
    """Tally one batch of simulated selections.

    ``mts`` holds the per-button movement times, ``draws`` the button
    index chosen on each trial, ``start`` the running total carried in
    from earlier batches. Returns the updated total and a per-button
    hit count. The sum runs strictly left to right and the accumulator
    threads through batches, so splitting the trials differently cannot
    change a single bit; the compiled backend mirrors this exactly.
    """
    hits = np.zeros(len(mts), dtype=np.int64)
    hit_list = hits.tolist()
    mt_list = [float(v) for v in mts]
    total = start
    for index in draws.tolist():
        total += mt_list[index]
        hit_list[index] += 1
    hits[:] = hit_list
    return total, hits

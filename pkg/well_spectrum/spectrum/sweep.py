from dataclasses import replace
from functools import partial
from multiprocessing import Pool

import numpy as np
from tqdm import tqdm

from spectrum.quantization import find_levels


def sweep_values(sweep):
    return [float(v) for v in np.linspace(sweep.start, sweep.stop, sweep.steps)]


def _energies_at(value, p, cfg, variable, n_levels):
    point = replace(p, **{variable: value})
    return value, [lvl.energy for lvl in find_levels(point, cfg, n_levels)]


def sweep_levels(p, cfg, sweep, n_levels, workers=1, progress=False):
    """Energies of the first ``n_levels`` levels at every sweep point, in sweep order."""
    values = sweep_values(sweep)
    work = partial(_energies_at, p=p, cfg=cfg, variable=sweep.variable, n_levels=n_levels)
    bar = dict(total=len(values), desc="Sweep:", leave=False, disable=not progress)
    if workers is None or workers <= 1:
        return [work(v) for v in tqdm(values, **bar)]
    with Pool(workers) as pool:
        return list(tqdm(pool.imap(work, values), **bar))

"""Deterministic seed derivation for node-, fold-, cell- and trial-level substreams.

Every random decision in the package flows through a numpy Generator whose
SeedSequence is derived from a base seed plus an integer path. Results are
therefore reproducible regardless of evaluation order or worker scheduling.
"""

from __future__ import annotations

import numpy as np

# stream tags keep substreams for different purposes disjoint
FOLD_STREAM = 1
CELL_STREAM = 2
TRIAL_STREAM = 3
PROTOTYPE_STREAM = 4
PLAN_STREAM = 5


def derive_seed(base: int, *path: int) -> int:
    """Mix a base seed with an integer path into a fresh 64-bit seed."""
    ss = np.random.SeedSequence([int(base), *map(int, path)])
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def node_stream(seed: int, node_index: int) -> np.random.Generator:
    """Independent generator for one hidden node, a function of (seed, index) only."""
    return np.random.default_rng(
        np.random.SeedSequence(entropy=int(seed), spawn_key=(int(node_index),))
    )

"""Seeded PCG64 streams.

Every random draw in hurstlab comes from ``stream(seed, *key)``: the root
seed plus a spawn key (ensemble member, shuffle repeat, ...). Stream
(seed, k) is fixed by its key alone, so member k of an ensemble can be
regenerated without generating members 0..k-1.
"""

from __future__ import annotations

import numpy as np


def stream(seed: int, *key: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=key)))


def derive_seed(seed: int, *key: int) -> int:
    """A 64-bit child seed for (seed, key), for handing to another seeded operation."""
    state = np.random.SeedSequence(seed, spawn_key=key).generate_state(1, dtype=np.uint64)
    return int(state[0])

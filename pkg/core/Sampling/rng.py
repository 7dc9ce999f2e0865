"""
Seeded random number generators.

Every generator is numpy's PCG64 bit generator, seeded through a SeedSequence
built from (seed, *stream). The stream words keep independent draws apart:
the same seed gives unrelated numbers for different dimensions, provenances
or purposes, while each (seed, stream) pair stays bit-for-bit reproducible.
"""

from typing import Sequence

import numpy as np

from ..exceptions import ConfigError

SEED_LIMIT = 2 ** 64


def check_seed(seed: int) -> int:
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)):
        raise ConfigError(f"Seed must be an integer, got {seed!r}")
    seed = int(seed)
    if not 0 <= seed < SEED_LIMIT:
        raise ConfigError(f"Seed {seed} is outside the unsigned 64-bit range", seed=seed)
    return seed


def make_rng(seed: int, stream: Sequence[int] = ()) -> np.random.Generator:
    """Return a fresh Generator for (seed, *stream)."""
    entropy = [check_seed(seed), *(int(word) for word in stream)]
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy)))

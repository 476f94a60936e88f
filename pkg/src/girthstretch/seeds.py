"""Deterministic, splittable seeding helpers.

Every random choice in the package flows from a numpy ``SeedSequence`` so
that identical seeds reproduce results bit-exactly across runs and platforms.
"""

from __future__ import annotations

import numpy as np

SeedLike = int | np.random.SeedSequence | np.random.Generator | None


def as_generator(seed: SeedLike) -> np.random.Generator:
    """Coerce an int / SeedSequence / Generator / None into a Generator."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def derive(master_seed: int, *path: int) -> np.random.SeedSequence:
    """Collision-free child seed for a position in a derivation tree."""
    return np.random.SeedSequence([int(master_seed), *map(int, path)])


def fingerprint(ss: np.random.SeedSequence) -> int:
    """Stable 64-bit identifier of a seed sequence, for logging."""
    a, b = ss.generate_state(2)
    return (int(a) << 32) | int(b)

"""Deterministic sampling bounds for the property verifiers.

Group samples are canonical enumeration prefixes (so small witnesses are
always covered); randomized pair/triple selection is driven by the
recorded seed, making every report replayable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass


@dataclass(frozen=True)
class SampleSpec:
    p_radius: int = 3
    g_count: int = 50
    pair_count: int = 200
    vector_count: int = 25
    window_g_count: int = 8
    window_p_radius: int = 2
    seed: int = 0

    def to_json(self) -> dict:
        return {
            "p_radius": self.p_radius,
            "g_count": self.g_count,
            "pair_count": self.pair_count,
            "vector_count": self.vector_count,
            "window_g_count": self.window_g_count,
            "window_p_radius": self.window_p_radius,
            "seed": self.seed,
        }

    def rng(self) -> random.Random:
        return random.Random(self.seed)


def pick_pairs(rng: random.Random, pool, count: int):
    """All ordered pairs when the pool is small, otherwise a random sample."""
    n = len(pool)
    if n * n <= count:
        return [(a, b) for a in pool for b in pool]
    return [(rng.choice(pool), rng.choice(pool)) for _ in range(count)]

"""Seeded pseudorandom rational flags."""

from __future__ import annotations

import random
from fractions import Fraction

from .clans import _as_clan, is_noncrossing
from .ranklin import Flag, first_violation, rank

DEFAULT_SEED = 20240607


def random_flags(n: int, count: int, seed: int = DEFAULT_SEED, zero_prob: float = 0.5):
    """
    ``count`` invertible flags with small rational entries.  Entries are zero
    with probability ``zero_prob`` so that special positions (which the rank
    conditions care about) are hit often.  Singular draws are redrawn.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        rows = [[Fraction(0) if rng.random() < zero_prob
                 else Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(n)]
                for _ in range(n)]
        if rank(rows) == n:
            out.append(Flag(tuple(map(tuple, rows))))
    return out


def crossing_redundancy(gamma, count: int = 200, seed: int = DEFAULT_SEED) -> dict:
    """Compare membership with and without the third rank condition on random flags."""
    gamma = _as_clan(gamma)
    members = 0
    disagreements = []
    for k, F in enumerate(random_flags(gamma.n, count, seed)):
        full = first_violation(F, gamma, True) is None
        short = first_violation(F, gamma, False) is None
        members += full
        if full != short:
            disagreements.append(k)
    return {"gamma": str(gamma), "noncrossing": is_noncrossing(gamma), "seed": seed,
            "count": count, "members": members, "disagreements": disagreements}

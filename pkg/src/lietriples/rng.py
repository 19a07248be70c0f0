"""Seeded deterministic sampling of small-denominator rationals.

Every piece of sampled evidence in a report records the seed that produced
it, so runs are reproducible bit for bit.
"""

from __future__ import annotations

import random
from fractions import Fraction


class RationalSampler:
    """Deterministic stream of small rationals and rational vectors."""

    def __init__(self, seed: int, max_num: int = 3, max_den: int = 3):
        self.seed = seed
        self._rng = random.Random(seed)
        self.max_num = max_num
        self.max_den = max_den

    def rational(self) -> Fraction:
        num = self._rng.randrange(-self.max_num, self.max_num + 1)
        den = self._rng.randrange(1, self.max_den + 1)
        return Fraction(num, den)

    def vector(self, n: int, nonzero: bool = True):
        while True:
            v = tuple(self.rational() for _ in range(n))
            if not nonzero or any(a != 0 for a in v):
                return v

    def combination(self, basis_rows, nonzero: bool = True):
        """Random rational combination of the given basis rows."""
        rows = list(basis_rows)
        if not rows:
            return ()
        n = len(rows[0])
        while True:
            coeffs = [self.rational() for _ in rows]
            v = [Fraction(0)] * n
            for c, row in zip(coeffs, rows):
                if c != 0:
                    v = [x + c * y for x, y in zip(v, row)]
            if not nonzero or any(a != 0 for a in v):
                return tuple(v)

    def spawn(self, offset: int) -> "RationalSampler":
        """Independent sampler with a derived seed (recorded per stage)."""
        return RationalSampler(self.seed * 1000003 + offset,
                               self.max_num, self.max_den)

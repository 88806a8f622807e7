"""Run configuration: field modulus, randomness provenance, search bounds."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .fields import DEFAULT_PRIME, GF, is_prime


@dataclass(frozen=True)
class Config:
    prime: int = DEFAULT_PRIME
    seed: int = 12345
    trials: int = 3
    entry_bound: int = 12
    expand_limit: int = 8

    def __post_init__(self):
        if not is_prime(self.prime) or self.prime == 2:
            raise ValueError(f"prime must be an odd prime, got {self.prime}")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")

    def field(self):
        return GF(self.prime)

    def rng(self):
        return random.Random(self.seed)

    def provenance(self):
        return {"prime": self.prime, "seed": self.seed, "trials": self.trials}

import random
from fractions import Fraction as F

import pytest

from divstab import catalog
from divstab.modelseq import ModelSequence, validate_sequence
from divstab.polynomial import interpolate


@pytest.fixture(scope="session")
def fans():
    return {e.id: e.parse() for e in catalog.entries("fan")}


def random_sequence(rng: random.Random, n: int) -> ModelSequence:
    """A valid sequence built from a continuous, positive restricted volume."""
    m = rng.randint(1, 3)
    steps = [F(rng.randint(1, 8), rng.randint(1, 4)) for _ in range(m)]
    bps = [F(0)]
    for s in steps:
        bps.append(bps[-1] + s)
    values = [F(rng.randint(1, 12), rng.randint(1, 3)) for _ in bps]
    values[-1] = F(rng.randint(0, 6))
    polys = []
    for i in range(m):
        lo, hi = bps[i], bps[i + 1]
        if n == 2:
            polys.append(interpolate([lo, hi], [values[i], values[i + 1]]))
        else:
            # quadratic through the endpoint values and a positive bump in between
            mid = (lo + hi) / 2
            bump = (values[i] + values[i + 1]) / 2 + F(rng.randint(0, 6), rng.randint(1, 4))
            polys.append(interpolate([lo, mid, hi], [values[i], bump, values[i + 1]]))
    return ModelSequence.from_restricted_polys(n, bps, polys)


def _valid_random_sequences(count=120, seed=7):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        seq = random_sequence(rng, rng.choice((2, 3)))
        if validate_sequence(seq).ok:
            out.append(seq)
    return out


@pytest.fixture(scope="session")
def valid_random_sequences():
    return _valid_random_sequences

import cmath
import math
import random

import pytest

from spinlift.lifting import LiftInput
from spinlift.satake import SatakeParams


def random_gl2(rng: random.Random, k: int = 12, p: int = 2, ramanujan: bool = True) -> SatakeParams:
    """Normalized degree-1 parameters; unit-circle second parameter unless
    ramanujan is disabled."""
    phi = rng.uniform(0.0, 2 * math.pi)
    r = 1.0 if ramanujan else math.exp(rng.uniform(-0.4, 0.4))
    a0 = r * p ** ((k - 1) / 2) * cmath.exp(1j * phi)
    return SatakeParams(degree=1, weight=k, p=p, mu0=a0, mu=(p ** (k - 1) / (a0 * a0),))


def random_gsp4(rng: random.Random, k: int = 14, p: int = 2) -> SatakeParams:
    """Normalized degree-2 parameters with generic moduli."""
    b1 = cmath.exp(complex(rng.uniform(-0.4, 0.4), rng.uniform(0.0, 2 * math.pi)))
    b2 = cmath.exp(complex(rng.uniform(-0.4, 0.4), rng.uniform(0.0, 2 * math.pi)))
    b0 = cmath.sqrt(p ** (2 * k - 3) / (b1 * b2))
    return SatakeParams(degree=2, weight=k, p=p, mu0=b0, mu=(b1, b2))


def random_lift_input(rng: random.Random, k: int = 14, p: int = 2) -> LiftInput:
    return LiftInput(gl2=random_gl2(rng, k - 2, p), gsp4=random_gsp4(rng, k, p))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20110)

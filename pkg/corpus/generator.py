"""
Seeded polynomial corpus with known root multisets

Each case is c * prod (x - a)^mu * prod (x^2 + b x + c)^nu with integer roots
a, irreducible quadratics (b^2 < 4c) and a nonzero rational scale.
"""

import cmath
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Sequence, Tuple

from polys import Poly

LINEAR_ROOT_RANGE = (-5, 5)
QUADRATIC_B_RANGE = (-4, 4)
MULTIPLICITIES = (1, 1, 1, 2, 2, 3)
SCALES_NUM = (-3, -2, -1, 1, 2, 3, 5)
SCALES_DEN = (1, 2, 3, 7)
QUADRATIC_PROBABILITY = 0.35


@dataclass(frozen=True)
class GeneratedCase:
    poly: Poly
    linear: Tuple[Tuple[int, int], ...]  # (root, multiplicity)
    quadratics: Tuple[Tuple[Tuple[int, int], int], ...]  # ((b, c), mult)
    scale: Fraction

    @property
    def real_rooted(self) -> bool:
        return not self.quadratics

    @property
    def distinct_roots(self) -> int:
        return len(self.linear) + 2 * len(self.quadratics)

    @property
    def distinct_real_roots(self) -> int:
        return len(self.linear)

    @property
    def roots(self) -> List[Tuple[complex, int]]:
        """full root multiset as (value, multiplicity)"""
        out = [(complex(a, 0), mu) for a, mu in self.linear]
        for (b, c), mu in self.quadratics:
            half = cmath.sqrt(b * b - 4 * c) / 2
            out.append((-b / 2 + half, mu))
            out.append((-b / 2 - half, mu))
        return out


def build_case(
    linear: Sequence[Tuple[int, int]],
    quadratics: Sequence[Tuple[Tuple[int, int], int]] = (),
    scale=1,
) -> GeneratedCase:
    """
    Assemble a case, merging repeated factors into their multiplicities

    Args:
        linear: (root, multiplicity) pairs
        quadratics: ((b, c), multiplicity) pairs with b^2 < 4c
        scale: nonzero rational

    Returns:
        GeneratedCase
    """
    scale = Fraction(scale)
    if scale == 0:
        raise ValueError("[Error: corpus.build_case] scale must be nonzero")
    linear_mult: Counter = Counter()
    for root, mu in linear:
        linear_mult[root] += mu
    quad_mult: Counter = Counter()
    for (b, c), mu in quadratics:
        if b * b >= 4 * c:
            raise ValueError(
                f"[Error: corpus.build_case] x^2 + {b}x + {c} is reducible"
            )
        quad_mult[(b, c)] += mu
    poly = Poly.from_roots(
        root for root, mu in linear_mult.items() for _ in range(mu)
    ).scale(scale)
    for (b, c), mu in quad_mult.items():
        poly = poly * Poly((c, b, 1)) ** mu
    return GeneratedCase(
        poly=poly,
        linear=tuple(sorted(linear_mult.items())),
        quadratics=tuple(sorted(quad_mult.items())),
        scale=scale,
    )


def random_case(rng: random.Random, degree_max: int) -> GeneratedCase:
    target = rng.randint(1, degree_max)
    linear: List[Tuple[int, int]] = []
    quadratics: List[Tuple[Tuple[int, int], int]] = []
    degree = 0
    while degree < target:
        remaining = target - degree
        if remaining >= 2 and rng.random() < QUADRATIC_PROBABILITY:
            mu = min(rng.choice(MULTIPLICITIES), remaining // 2)
            b = rng.randint(*QUADRATIC_B_RANGE)
            c = rng.randint(b * b // 4 + 1, b * b // 4 + 6)
            quadratics.append(((b, c), mu))
            degree += 2 * mu
        else:
            mu = min(rng.choice(MULTIPLICITIES), remaining)
            linear.append((rng.randint(*LINEAR_ROOT_RANGE), mu))
            degree += mu
    scale = Fraction(rng.choice(SCALES_NUM), rng.choice(SCALES_DEN))
    return build_case(linear, quadratics, scale)


def generate_corpus(
    cases: int, degree_max: int, seed: int
) -> Iterator[GeneratedCase]:
    rng = random.Random(seed)
    for _ in range(cases):
        yield random_case(rng, degree_max)

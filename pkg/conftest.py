"""
Shared fixtures and generators for the test suite.

Random families are seeded so every run sees the same instances.
"""

import random
from fractions import Fraction
from typing import Dict, List, Tuple

import pytest
from hypothesis import strategies as st

from extreme_mixture.components.cmdp_adapter import Mdp
from extreme_mixture.components.instance_model import Instance
from extreme_mixture.files import generate_instance
from extreme_mixture.rational import INF

Point = Tuple[Fraction, ...]


@pytest.fixture
def instance_a() -> Instance:
    return Instance.from_costs([(0, 2), (1, 0), (2, 2)], d=(1,))


@pytest.fixture
def instance_c() -> Instance:
    return Instance.from_costs([(INF, 0), (INF, 1)], d=(Fraction(1, 2),))


@pytest.fixture
def unit_square() -> List[Point]:
    return [(Fraction(0), Fraction(0)), (Fraction(1), Fraction(0)), (Fraction(1), Fraction(1)), (Fraction(0), Fraction(1))]


@pytest.fixture
def triangle() -> List[Point]:
    return [(Fraction(0), Fraction(2)), (Fraction(1), Fraction(0)), (Fraction(2), Fraction(2))]


def random_instance(seed: int, max_atoms: int = 25, max_J: int = 4, inf_fraction=Fraction(1, 10)) -> Instance:
    rng = random.Random(seed)
    return generate_instance(rng.randint(1, max_atoms), rng.randint(0, max_J), seed, inf_fraction).to_instance()


def random_points(rng: random.Random, count: int, dim: int, span: int = 4) -> Dict[int, Point]:
    """Distinct integer-grid points, labelled 0..count-1."""
    count = min(count, (2 * span + 1) ** dim)
    chosen = set()
    while len(chosen) < count:
        chosen.add(tuple(Fraction(rng.randint(-span, span)) for _ in range(dim)))
    return dict(enumerate(sorted(chosen)))


def random_convex_weights(rng: random.Random, count: int) -> List[Fraction]:
    raw = [Fraction(rng.randint(0, 6)) for _ in range(count)]
    if not any(raw):
        raw[rng.randrange(count)] = Fraction(1)
    total = sum(raw)
    return [x / total for x in raw]


def random_hull_point(rng: random.Random, points: Dict[int, Point]) -> Point:
    ids = sorted(points)
    weights = random_convex_weights(rng, len(ids))
    dim = len(points[ids[0]])
    return tuple(sum((w * points[i][j] for w, i in zip(weights, ids)), Fraction(0)) for j in range(dim))


def random_pareto_point(rng: random.Random, points: Dict[int, Point]) -> Point:
    """A random mixture of the minimizers of a strictly positive linear functional."""
    dim = len(next(iter(points.values())))
    c = [Fraction(rng.randint(1, 5)) for _ in range(dim)]
    values = {i: sum((a * x for a, x in zip(c, p)), Fraction(0)) for i, p in points.items()}
    best = min(values.values())
    return random_hull_point(rng, {i: points[i] for i, v in values.items() if v == best})


def random_mdp(rng: random.Random, max_states: int = 3, max_actions: int = 3, max_J: int = 2) -> Mdp:
    n = rng.randint(1, max_states)
    actions = tuple(rng.randint(1, max_actions) for _ in range(n))
    J = rng.randint(0, max_J)

    def distribution() -> Tuple[Fraction, ...]:
        return tuple(random_convex_weights(rng, n))

    return Mdp(
        states=n,
        actions=actions,
        P=tuple(tuple(distribution() for _ in range(actions[s])) for s in range(n)),
        costs=tuple(
            tuple(tuple(Fraction(rng.randint(0, 8), 4) for _ in range(actions[s])) for s in range(n))
            for _ in range(J + 1)
        ),
        gamma=Fraction(rng.randint(1, 9), 10),
        initial=distribution(),
    )


grid_rationals = st.fractions(min_value=-4, max_value=4, max_denominator=6)


@st.composite
def finite_instances(draw, max_atoms: int = 6, max_J: int = 3) -> Instance:
    J = draw(st.integers(min_value=0, max_value=max_J))
    m = draw(st.integers(min_value=1, max_value=max_atoms))
    costs = [tuple(draw(grid_rationals) for _ in range(J + 1)) for _ in range(m)]
    d = tuple(draw(grid_rationals) for _ in range(J))
    return Instance.from_costs(costs, d=d)


@st.composite
def mixtures_over(draw, m: int):
    """Mixture support pairs over atom ids 0..m-1 with positive weights summing to 1."""
    ids = draw(st.lists(st.integers(min_value=0, max_value=m - 1), min_size=1, max_size=m, unique=True))
    raw = [Fraction(draw(st.integers(min_value=1, max_value=9))) for _ in ids]
    total = sum(raw)
    return tuple((i, w / total) for i, w in zip(sorted(ids), raw))

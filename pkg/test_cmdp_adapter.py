"""
Tests for the constrained MDP front-end, checked against an occupation-measure
LP written out directly over state-action frequencies.
"""

import random
from fractions import Fraction

import pytest
from pydantic import ValidationError

from conftest import random_mdp
from extreme_mixture import solve
from extreme_mixture.components.cmdp_adapter import (
    Mdp,
    Policy,
    build_instance,
    enumerate_policies,
    evaluate_policy,
    occupation_measure,
)
from extreme_mixture.components.exact_lp import eq, le, make_lp, solve_lp
from extreme_mixture.components.instance_model import INCONSISTENT, Mixture, dirac
from extreme_mixture.errors import InputError

F = Fraction


@pytest.fixture
def two_action_mdp() -> Mdp:
    """One state, action 0 costs (0, 2), action 1 costs (1, 0), gamma 1/2."""
    return Mdp(
        states=1,
        actions=(2,),
        P=(((1,), (1,)),),
        costs=(((0, 1),), ((2, 0),)),
        gamma=F(1, 2),
        initial=(1,),
    )


def _uniform_mdp(actions) -> Mdp:
    n = len(actions)
    row = tuple(F(1, n) for _ in range(n))
    return Mdp(
        states=n,
        actions=tuple(actions),
        P=tuple(tuple(row for _ in range(a)) for a in actions),
        costs=(tuple(tuple(F(0) for _ in range(a)) for a in actions),),
        gamma=F(9, 10),
        initial=row,
    )


def test_enumeration_counts():
    assert len(enumerate_policies(_uniform_mdp([2]))) == 2
    assert len(enumerate_policies(_uniform_mdp([2, 2]))) == 4
    policies = enumerate_policies(_uniform_mdp([1, 2, 3]))
    assert len(policies) == 6
    assert policies[0].actions == (0, 0, 0)
    assert policies[-1].actions == (0, 1, 2)


def test_policy_cap():
    with pytest.raises(InputError):
        enumerate_policies(_uniform_mdp([3, 3]), cap=8)


def test_policy_evaluation(two_action_mdp):
    assert evaluate_policy(two_action_mdp, Policy(actions=(0,))) == (F(0), F(4))
    assert evaluate_policy(two_action_mdp, Policy(actions=(1,))) == (F(2), F(0))
    assert evaluate_policy(_uniform_mdp([2, 3]), Policy(actions=(1, 2))) == (F(0),)
    with pytest.raises(InputError):
        evaluate_policy(two_action_mdp, Policy(actions=(2,)))


def test_occupation_measure_has_total_mass_one_over_one_minus_gamma():
    mdp = _uniform_mdp([2, 2, 1])
    mu = occupation_measure(mdp, Policy(actions=(1, 0, 0)))
    assert sum(mu) == 1 / (1 - mdp.gamma)


def test_two_policy_mixture(two_action_mdp):
    instance = build_instance(two_action_mdp, (2,))
    assert [a.w for a in instance.atoms] == [(F(0), F(4)), (F(2), F(0))]
    solution = solve(instance)
    assert solution.value == 1
    assert solution.mixture == Mixture(support=((0, F(1, 2)), (1, F(1, 2))))

    loose = solve(build_instance(two_action_mdp, (4,)))
    assert loose.value == 0
    assert loose.mixture == dirac(0)


def test_bounds_must_match_costs(two_action_mdp):
    with pytest.raises(InputError):
        build_instance(two_action_mdp, (1, 2))


def test_mdp_validation():
    with pytest.raises(ValidationError):
        Mdp(states=1, actions=(1,), P=(((F(1, 2),),),), costs=(((0,),),), gamma=F(1, 2), initial=(1,))
    with pytest.raises(ValidationError):
        Mdp(states=1, actions=(1,), P=(((1,),),), costs=(((0,),),), gamma=1, initial=(1,))


def _occupation_lp_value(mdp: Mdp, d):
    pairs = [(s, a) for s in range(mdp.states) for a in range(mdp.actions[s])]
    rows = []
    for target in range(mdp.states):
        coefficients = [
            (F(1) if s == target else F(0)) - mdp.gamma * mdp.transition[s][a][target]
            for s, a in pairs
        ]
        rows.append(eq(coefficients, mdp.initial[target]))
    for j, bound in enumerate(d, start=1):
        rows.append(le([mdp.costs[j][s][a] for s, a in pairs], bound))
    outcome = solve_lp(make_lp([mdp.costs[0][s][a] for s, a in pairs], constraints=rows))
    return outcome.value if outcome.is_optimal else INCONSISTENT


@pytest.mark.parametrize("seed", range(30))
def test_random_mdps_match_the_occupation_lp(seed):
    rng = random.Random(seed)
    mdp = random_mdp(rng)
    J = mdp.num_costs - 1
    reference = evaluate_policy(mdp, Policy(actions=tuple(rng.randrange(a) for a in mdp.actions)))
    if rng.random() < 0.2:
        d = tuple(F(rng.randint(-2, 8), 4) for _ in range(J))
    else:
        d = tuple(reference[j] + F(rng.randint(0, 4), 4) for j in range(1, J + 1))

    expected = _occupation_lp_value(mdp, d)
    solution = solve(build_instance(mdp, d))
    if expected is INCONSISTENT:
        assert solution is INCONSISTENT
        return
    assert solution.value == expected
    assert len(solution.mixture) <= J + 1

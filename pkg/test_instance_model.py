"""
Tests for extended-real arithmetic, mixtures and instance records.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from conftest import finite_instances, mixtures_over
from extreme_mixture.components.instance_model import (
    Atom,
    Instance,
    Mixture,
    blend,
    dirac,
    evaluate,
    ext_combine,
    finite_atoms,
    is_feasible,
    restrict_objective,
)
from extreme_mixture.errors import InputError
from extreme_mixture.rational import INF, parse_ext_real, parse_rational

F = Fraction


def test_ext_combine_examples():
    assert ext_combine((F(1),), (F(5),)) == 5
    assert ext_combine((F(1, 2), F(1, 2)), (F(0), INF)) == INF
    assert ext_combine((F(1, 2), F(1, 2)), (F(0), F(2))) == 1


def test_zero_weight_on_infinity_contributes_nothing():
    assert ext_combine((F(0), F(1)), (INF, F(3))) == 3


def test_ext_combine_rejects_bad_weights():
    with pytest.raises(InputError):
        ext_combine((F(1, 2), F(1, 3)), (F(0), F(1)))
    with pytest.raises(InputError):
        ext_combine((F(1),), (F(0), F(1)))


def test_evaluate_examples(instance_a, instance_c):
    half = Mixture(support=((0, F(1, 2)), (1, F(1, 2))))
    assert evaluate(instance_a, half) == (F(1, 2), F(1))
    for atom in instance_a.atoms:
        assert evaluate(instance_a, dirac(atom.id)) == atom.w
    assert evaluate(instance_c, dirac(0)) == (INF, F(0))


def test_evaluate_rejects_unknown_atom(instance_a):
    with pytest.raises(InputError):
        evaluate(instance_a, dirac(3))


def test_is_feasible_examples(instance_a):
    assert is_feasible(instance_a, Mixture(support=((0, F(1, 2)), (1, F(1, 2)))))
    assert not is_feasible(instance_a, dirac(0))
    unconstrained = Instance.from_costs([(3,), (5,)])
    assert is_feasible(unconstrained, dirac(1))


def test_finite_atoms_examples(instance_a, instance_c):
    assert finite_atoms(instance_c, [0, 1]) == []
    assert finite_atoms(instance_c, [1]) == [0, 1]
    assert finite_atoms(instance_a, [0, 1]) == [0, 1, 2]
    with pytest.raises(InputError):
        finite_atoms(instance_a, [2])


def test_mixture_invariants():
    with pytest.raises(ValidationError, match="mixture weights do not sum to 1"):
        Mixture(support=((0, F(1, 2)), (1, F(2, 5))))
    with pytest.raises(ValidationError):
        Mixture(support=((0, F(1)), (1, F(0))))
    with pytest.raises(ValidationError):
        Mixture(support=((0, F(1, 2)), (0, F(1, 2))))
    assert Mixture(support=((2, "1/3"), (0, "2/3"))).weights == (F(1, 3), F(2, 3))


def test_instance_invariants():
    with pytest.raises(ValidationError):
        Instance.from_costs([(0, 1), (1,)], d=(1,))
    with pytest.raises(ValidationError):
        Instance(J=1, atoms=(Atom(id=0, w=(0, 1)),), d=())
    with pytest.raises(ValidationError):
        Instance.from_costs([], d=())


def test_negative_infinity_and_floats_are_rejected():
    with pytest.raises(ValueError, match="-inf"):
        parse_ext_real("-inf")
    with pytest.raises(ValidationError):
        Atom(id=0, w=("-inf",))
    with pytest.raises(ValueError, match="invalid rational"):
        parse_rational(0.5)
    with pytest.raises(ValueError, match="invalid rational"):
        parse_rational("1/0")
    assert parse_ext_real("inf") == INF
    assert parse_rational("-3/6") == F(-1, 2)


def test_restrict_objective_reindexes(instance_c):
    modified = restrict_objective(instance_c, 1, [])
    assert modified.J == 0
    assert [a.w for a in modified.atoms] == [(F(0),), (F(1),)]
    three = Instance.from_costs([(INF, 0, 0), (INF, 1, 0), (0, 3, 0)], d=(1, 0))
    modified = restrict_objective(three, 1, [2])
    assert modified.d == (F(0),)
    assert modified.atoms[2].w == (F(3), F(0))


def test_blend_merges_by_id():
    first = Mixture(support=((0, F(1, 2)), (1, F(1, 2))))
    second = Mixture(support=((1, F(1)),))
    assert blend(first, second, F(1, 2)).support == ((0, F(1, 4)), (1, F(3, 4)))
    assert blend(first, second, F(0)) == second
    with pytest.raises(InputError):
        blend(first, second, F(3, 2))


@settings(max_examples=80, deadline=None)
@given(data=st.data())
def test_evaluate_is_affine(data):
    instance = data.draw(finite_instances())
    m = len(instance.atoms)
    first = Mixture(support=data.draw(mixtures_over(m)))
    second = Mixture(support=data.draw(mixtures_over(m)))
    alpha = data.draw(st.fractions(min_value=0, max_value=1, max_denominator=7).filter(lambda a: 0 < a < 1))
    mixed = evaluate(instance, blend(first, second, alpha))
    a, b = evaluate(instance, first), evaluate(instance, second)
    assert mixed == tuple(ext_combine((alpha, 1 - alpha), (x, y)) for x, y in zip(a, b))


@settings(max_examples=80, deadline=None)
@given(data=st.data())
def test_performance_bounded_below_by_atom_minimum(data):
    instance = data.draw(finite_instances())
    mixture = Mixture(support=data.draw(mixtures_over(len(instance.atoms))))
    values = evaluate(instance, mixture)
    for j in range(instance.J + 1):
        assert values[j] >= min(atom.w[j] for atom in instance.atoms)


@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_finite_value_needs_finite_support(data):
    base = data.draw(finite_instances())
    flags = data.draw(st.lists(st.booleans(), min_size=len(base.atoms), max_size=len(base.atoms)))
    instance = Instance.from_costs(
        [(INF,) + tuple(a.w[1:]) if flag else a.w for a, flag in zip(base.atoms, flags)],
        d=base.d,
    )
    mixture = Mixture(support=data.draw(mixtures_over(len(instance.atoms))))
    if is_feasible(instance, mixture) and evaluate(instance, mixture)[0] != INF:
        assert all(not flags[i] for i in mixture.ids)

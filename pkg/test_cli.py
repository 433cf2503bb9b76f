"""
Command-line tests: every subcommand is driven through main() on temporary files.
"""

import json
from fractions import Fraction

import pytest

from conftest import random_instance
from extreme_mixture import solve
from extreme_mixture.cli import main
from extreme_mixture.components.instance_model import INCONSISTENT, Instance
from extreme_mixture.components.pareto_face import optimal_value
from extreme_mixture.files import InstanceFile, SolutionFile, dumps, generate_instance, load
from extreme_mixture.rational import INF

INSTANCE_A = {"J": 1, "d": ["1"], "atoms": [{"w": ["0", "2"]}, {"w": ["1", "0"]}, {"w": ["2", "2"]}]}


def _write(path, document):
    path.write_text(json.dumps(document))
    return str(path)


@pytest.fixture
def solved_a(tmp_path, capsys):
    instance = _write(tmp_path / "a.json", INSTANCE_A)
    solution = str(tmp_path / "a.solution.json")
    assert main(["solve", "--input", instance, "--output", solution]) == 0
    capsys.readouterr()
    return instance, solution


def test_solve_instance_a(solved_a):
    _, solution = solved_a
    document = json.loads(open(solution).read())
    assert document["status"] == "optimal"
    assert document["value"] == "1/2"
    assert document["mixture"] == [{"atom": 0, "weight": "1/2"}, {"atom": 1, "weight": "1/2"}]
    assert document["branch"] == "main"
    assert document["certificate"]["planes"] == [{"b": ["2/3", "1/3"], "beta": "2/3"}]


def test_verify_accepts_solve_output(solved_a, capsys):
    instance, solution = solved_a
    assert main(["verify", "--input", instance, "--solution", solution]) == 0
    out = capsys.readouterr().out
    for check in ("weights", "support", "feasibility", "value", "optimality", "support_search", "certificate"):
        assert f"{check}: ok" in out
    assert "all checks passed" in out


def test_inconsistent_instance(tmp_path, capsys):
    instance = _write(tmp_path / "bad.json", dict(INSTANCE_A, d=["-1"]))
    solution = str(tmp_path / "bad.solution.json")
    assert main(["solve", "--input", instance, "--output", solution]) == 2
    assert json.loads(open(solution).read()) == {"status": "inconsistent", "mixture": []}
    assert main(["verify", "--input", instance, "--solution", solution]) == 0


def test_malformed_rational(tmp_path, capsys):
    instance = _write(tmp_path / "broken.json", dict(INSTANCE_A, d=["1/0"]))
    assert main(["solve", "--input", instance, "--output", str(tmp_path / "out.json")]) == 1
    assert "invalid rational" in capsys.readouterr().err


def test_json_syntax_error_reports_position(tmp_path, capsys):
    path = tmp_path / "syntax.json"
    path.write_text('{"J": 1,\n "d": [1,}')
    assert main(["solve", "--input", str(path)]) == 1
    err = capsys.readouterr().err
    assert "syntax.json" in err and "line 2" in err


def test_missing_file(tmp_path, capsys):
    assert main(["solve", "--input", str(tmp_path / "nope.json")]) == 1
    assert "nope.json" in capsys.readouterr().err


def _solve_then_verify(tmp_path, instance):
    path = tmp_path / "instance.json"
    path.write_text(dumps(InstanceFile.from_instance(instance)))
    solution = tmp_path / "solution.json"
    assert main(["solve", "--input", str(path), "--output", str(solution)]) in (0, 2)
    assert main(["verify", "--input", str(path), "--solution", str(solution)]) == 0
    return json.loads(solution.read_text())


@pytest.mark.parametrize("seed", range(15))
def test_verify_accepts_random_solve_output(seed, tmp_path, capsys):
    _solve_then_verify(tmp_path, random_instance(seed, max_atoms=10, max_J=3, inf_fraction=Fraction(1, 5)))
    assert "all checks passed" in capsys.readouterr().out


@pytest.mark.parametrize(
    "costs, d, branch",
    [
        ([(INF, 0), (INF, 1)], (Fraction(1, 2),), "degenerate_recursive"),
        ([(INF,), (INF,)], (), "degenerate_j0"),
        ([(3,), (1,), (2,)], (), "main"),
    ],
)
def test_verify_accepts_every_branch(costs, d, branch, tmp_path, capsys):
    document = _solve_then_verify(tmp_path, Instance.from_costs(costs, d=d))
    assert document["branch"] == branch
    out = capsys.readouterr().out
    assert "all checks passed" in out
    if branch != "main":
        assert document["value"] == "inf"
        assert "certificate: skipped" in out


def _damaged(solved, tmp_path, **changes):
    instance, solution = solved
    document = json.loads(open(solution).read())
    document.update(changes)
    return instance, _write(tmp_path / "damaged.json", document)


def test_verify_rejects_bad_weight_sum(solved_a, tmp_path, capsys):
    instance, solution = _damaged(
        solved_a, tmp_path, mixture=[{"atom": 0, "weight": "1/2"}, {"atom": 1, "weight": "2/5"}]
    )
    assert main(["verify", "--input", instance, "--solution", solution]) == 3
    assert "mixture weights do not sum to 1" in capsys.readouterr().out


def test_verify_rejects_large_support(solved_a, tmp_path, capsys):
    third = {"weight": "1/3"}
    instance, solution = _damaged(
        solved_a, tmp_path, mixture=[dict(third, atom=0), dict(third, atom=1), dict(third, atom=2)]
    )
    assert main(["verify", "--input", instance, "--solution", solution]) == 3
    assert "support exceeds J+1" in capsys.readouterr().out


def test_verify_rejects_wrong_value(solved_a, tmp_path, capsys):
    instance, solution = _damaged(solved_a, tmp_path, value="1/3")
    assert main(["verify", "--input", instance, "--solution", solution]) == 3
    out = capsys.readouterr().out
    assert "value: failed" in out
    assert "optimality: failed" in out


def test_gen_is_deterministic(capsys):
    assert main(["gen", "--atoms", "6", "--constraints", "2", "--seed", "7", "--inf-fraction", "1/4"]) == 0
    first = capsys.readouterr().out
    assert main(["gen", "--atoms", "6", "--constraints", "2", "--seed", "7", "--inf-fraction", "1/4"]) == 0
    assert capsys.readouterr().out == first
    document = json.loads(first)
    assert document["J"] == 2 and len(document["atoms"]) == 6


def test_gen_without_infinities(capsys):
    assert main(["gen", "--atoms", "20", "--constraints", "3", "--seed", "1"]) == 0
    assert "inf" not in capsys.readouterr().out


def test_gen_single_atom(tmp_path, capsys):
    assert main(["gen", "--atoms", "1", "--constraints", "0", "--seed", "3"]) == 0
    document = json.loads(capsys.readouterr().out)
    instance = _write(tmp_path / "one.json", document)
    solution = tmp_path / "one.solution.json"
    assert main(["solve", "--input", instance, "--output", str(solution)]) == 0
    assert json.loads(solution.read_text())["value"] == document["atoms"][0]["w"][0]


def test_demo_example1(capsys):
    assert main(["demo", "example1"]) == 0
    out = capsys.readouterr().out
    assert "b = (0, 1)" in out
    assert "beta = 1" in out
    assert "violated by (inf, 0)" in out
    assert "certificate verified, k <= J+1" in out
    assert main(["demo", "example1"]) == 0
    assert capsys.readouterr().out == out


def test_mdp_solve(tmp_path, capsys):
    mdp = {
        "states": 1,
        "actions": [2],
        "P": [[["1"], ["1"]]],
        "costs": [[["0", "1"]], [["2", "0"]]],
        "gamma": "1/2",
        "initial": ["1"],
    }
    path = _write(tmp_path / "mdp.json", mdp)
    output = tmp_path / "mdp.solution.json"
    assert main(["mdp-solve", "--input", path, "--bounds", "2", "--output", str(output)]) == 0
    document = json.loads(output.read_text())
    assert document["value"] == "1"
    assert document["policies"] == [[0], [1]]
    assert main(["mdp-solve", "--input", path, "--bounds", "1,2"]) == 1


@pytest.mark.parametrize("seed", range(10))
def test_files_round_trip(seed, tmp_path):
    instance = random_instance(seed, max_atoms=8, max_J=3)
    document = InstanceFile.from_instance(instance)
    path = tmp_path / "instance.json"
    path.write_text(dumps(document))
    assert load(path, InstanceFile).to_instance() == instance

    solution = SolutionFile.from_result(solve(instance))
    path = tmp_path / "solution.json"
    path.write_text(dumps(solution))
    assert load(path, SolutionFile) == solution


def test_generated_bounds_are_anchored_on_one_atom():
    for seed in range(40):
        document = generate_instance(8, 3, seed)
        assert any(
            all(atom.w[j] <= bound <= atom.w[j] + 1 for j, bound in enumerate(document.d, start=1))
            for atom in document.atoms
        )
        assert optimal_value(document.to_instance()) is not INCONSISTENT


def test_generated_instances_are_mostly_consistent():
    results = [optimal_value(generate_instance(8, 4, seed, Fraction(1, 10)).to_instance()) for seed in range(40)]
    consistent = sum(1 for value in results if value is not INCONSISTENT)
    assert consistent >= 22
    assert generate_instance(3, 1, 5, Fraction(0)) == generate_instance(3, 1, 5)

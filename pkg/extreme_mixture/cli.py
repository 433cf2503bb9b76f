"""
Command-line surface.

Exit codes: 0 ok, 1 input error, 2 inconsistent instance, 3 verification failure.
"""

import argparse
import logging
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .components.cmdp_adapter import Mdp, build_instance, enumerate_policies
from .components.instance_model import INCONSISTENT, Instance, evaluate, finite_points, is_feasible
from .components.oracle import oracle_optimal, oracle_support_search
from .components.pareto_face import disk_counterexample, fs_certificate, verify_certificate
from .config import get_settings
from .errors import ExtremeMixtureError, InputError
from .files import InstanceFile, SolutionFile, dumps, generate_instance, load, write
from .rational import format_ext_real, format_vector, parse_rational
from .solver import solve

logger = logging.getLogger("extreme_mixture.cli")

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INCONSISTENT = 2
EXIT_VERIFY = 3


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_INPUT


def _solve_and_write(instance: Instance, output: Optional[str], policies=None) -> int:
    result = solve(instance)
    if result is INCONSISTENT:
        document = SolutionFile.from_result(result)
        print("instance is inconsistent: no mixture satisfies the bounds")
        code = EXIT_INCONSISTENT
    else:
        chosen = None
        if policies is not None:
            chosen = tuple(policies[i].actions for i in result.mixture.ids)
        document = SolutionFile.from_result(result, policies=chosen)
        print(
            f"optimal value {format_ext_real(result.value)} with {len(result.mixture)} atom(s), "
            f"branch {result.branch.value}"
        )
        code = EXIT_OK
    if output:
        write(output, document)
    else:
        sys.stdout.write(dumps(document))
    return code


def cmd_solve(input_path: str, output_path: Optional[str]) -> int:
    """Solve an instance file and write the solution file."""
    try:
        instance = load(input_path, InstanceFile).to_instance()
        return _solve_and_write(instance, output_path)
    except InputError as e:
        return _fail(str(e))
    except ExtremeMixtureError as e:
        logger.error(f"solver failed on {input_path}: {e}")
        return _fail(f"solver failed: {e}")


def _check(report: List[Dict], name: str, ok: bool, message: str = "") -> bool:
    report.append({"check": name, "status": "ok" if ok else "failed", "message": "" if ok else message})
    if not ok:
        logger.warning(f"verification check {name} failed: {message}")
    return ok


def _skip(report: List[Dict], name: str, message: str) -> None:
    report.append({"check": name, "status": "skipped", "message": message})


def _verify_optimal(instance: Instance, solution: SolutionFile, report: List[Dict]) -> None:
    m = len(instance.atoms)
    entries = solution.mixture
    weights = [e.weight for e in entries]
    ids = [e.atom for e in entries]
    if sum(weights, Fraction(0)) != 1:
        weights_ok = _check(report, "weights", False, "mixture weights do not sum to 1")
    else:
        weights_ok = _check(report, "weights", all(w > 0 for w in weights), "mixture weights must be positive")
    _check(report, "support", len(entries) <= instance.J + 1, f"support exceeds J+1 = {instance.J + 1}")
    ids_ok = _check(
        report,
        "ids",
        len(set(ids)) == len(ids) and all(0 <= i < m for i in ids),
        f"atom ids must be distinct and lie in 0..{m - 1}",
    )
    if solution.value is None:
        _check(report, "value", False, "optimal solution without a value")
        return

    if weights_ok and ids_ok:
        mixture = solution.to_mixture()
        performance = evaluate(instance, mixture)
        _check(report, "feasibility", is_feasible(instance, mixture), "mixture violates a constraint bound")
        _check(
            report,
            "value",
            performance[0] == solution.value,
            f"reported value {format_ext_real(solution.value)} but the mixture gives {format_ext_real(performance[0])}",
        )
    else:
        performance = None
        _skip(report, "feasibility", "mixture is malformed")
        _skip(report, "value", "mixture is malformed")

    expected = oracle_optimal(instance)
    _check(
        report,
        "optimality",
        expected is not INCONSISTENT and expected == solution.value,
        f"direct LP optimum is {expected if expected is INCONSISTENT else format_ext_real(expected)}",
    )

    limit = get_settings().oracle_max_atoms
    if m <= limit:
        searched = oracle_support_search(instance, instance.J + 1, max_atoms=limit)
        _check(
            report,
            "support_search",
            searched is not INCONSISTENT and searched == solution.value,
            "no mixture of at most J+1 atoms attains the reported value",
        )
    else:
        _skip(report, "support_search", f"{m} atoms exceed the oracle limit of {limit}")

    if solution.certificate is None:
        _skip(report, "certificate", "no certificate (degenerate branch)")
        return
    cert = solution.certificate.to_certificate()
    if performance is not None and tuple(performance) != tuple(cert.w_star):
        _check(report, "certificate", False, "certificate point differs from the mixture's performance")
        return
    points = finite_points(instance)
    try:
        verdict = verify_certificate(points, cert.w_star, cert)
    except InputError as e:
        _check(report, "certificate", False, str(e))
        return
    _check(report, "certificate", bool(verdict), "; ".join(verdict.reasons))


def cmd_verify(input_path: str, solution_path: str) -> int:
    """Re-check a solution file against its instance and print one line per check."""
    try:
        instance = load(input_path, InstanceFile).to_instance()
        solution = load(solution_path, SolutionFile)
    except InputError as e:
        return _fail(str(e))

    report: List[Dict] = []
    if solution.status == "inconsistent":
        _check(report, "consistency", oracle_optimal(instance) is INCONSISTENT, "instance has a feasible mixture")
    elif solution.status == "optimal":
        try:
            _verify_optimal(instance, solution, report)
        except InputError as e:
            return _fail(str(e))
    else:
        return _fail(f"{solution_path}: unknown status {solution.status!r}")

    for entry in report:
        line = f"{entry['check']}: {entry['status']}"
        if entry["message"]:
            line += f" ({entry['message']})"
        print(line)
    failed = [entry for entry in report if entry["status"] == "failed"]
    print("all checks passed" if not failed else f"{len(failed)} check(s) failed")
    return EXIT_OK if not failed else EXIT_VERIFY


def cmd_gen(atoms: int, J: int, seed: int, inf_fraction: Fraction) -> int:
    try:
        document = generate_instance(atoms, J, seed, inf_fraction)
    except InputError as e:
        return _fail(str(e))
    sys.stdout.write(dumps(document))
    return EXIT_OK


def _circle_samples(center, radius) -> List[tuple]:
    """Rational boundary points of a circle, from the parametrization t -> ((1-t^2), 2t) / (1+t^2)."""
    samples = []
    for t in (Fraction(-2), Fraction(-1, 2), Fraction(0), Fraction(1, 2), Fraction(2)):
        denom = 1 + t * t
        samples.append((center[0] + radius * (1 - t * t) / denom, center[1] + radius * 2 * t / denom))
    samples.append((center[0] - radius, center[1]))
    return samples


def cmd_demo_example1() -> int:
    """Disk glued to a ray at infinity: no supporting normal, then a finite restriction that certifies."""
    center = (Fraction(1), Fraction(3, 2))
    radius = Fraction(1, 2)
    u = (Fraction(1), Fraction(1))
    print(f"disk center {format_vector(center)}, radius {radius}, u = {format_vector(u)}, ray (inf, v2) with v2 in [0, 2]")
    report = disk_counterexample(center, radius, u, (Fraction(0), Fraction(2)))
    for line in report.lines():
        print(line)

    points = [u, (Fraction(1), Fraction(2))] + _circle_samples(center, radius)
    print(f"finite restriction: {len(points)} boundary atoms, infinite atoms dropped")
    cert = fs_certificate(points, u)
    for i, plane in enumerate(cert.planes, start=1):
        print(f"plane {i}: b = {format_vector(plane.b)}, beta = {plane.beta}")
    print(f"active atoms: {list(cert.active)}")
    verdict = verify_certificate(points, u, cert)
    if verdict and cert.k <= len(u):
        print("certificate verified, k <= J+1")
        return EXIT_OK
    for reason in verdict.reasons:
        print(f"certificate check failed: {reason}")
    return EXIT_VERIFY


def _parse_bounds(text: str) -> List[Fraction]:
    if not text.strip():
        return []
    try:
        return [parse_rational(part) for part in text.split(",")]
    except ValueError as e:
        raise InputError(f"--bounds: {e}") from e


def cmd_mdp_solve(input_path: str, bounds: str, output_path: Optional[str] = None) -> int:
    """Build the policy instance of an MDP file and solve it; the solution lists the chosen policies."""
    try:
        mdp = load(input_path, Mdp)
        d = _parse_bounds(bounds)
        policies = enumerate_policies(mdp)
        instance = build_instance(mdp, d)
        return _solve_and_write(instance, output_path, policies=policies)
    except InputError as e:
        return _fail(str(e))
    except ExtremeMixtureError as e:
        logger.error(f"solver failed on {input_path}: {e}")
        return _fail(f"solver failed: {e}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="extreme-mixture",
        description="Exact optimal mixtures of at most J+1 atoms for linearly constrained problems.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("solve", help="solve an instance file")
    p.add_argument("--input", required=True)
    p.add_argument("--output", help="solution file (default: standard output)")

    p = commands.add_parser("verify", help="check a solution file against its instance")
    p.add_argument("--input", required=True)
    p.add_argument("--solution", required=True)

    p = commands.add_parser("gen", help="print a seeded random instance")
    p.add_argument("--atoms", type=int, required=True)
    p.add_argument("--constraints", type=int, required=True, help="number of constraints J")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--inf-fraction", default="0", help="probability of an infinite cost, as p/q")

    p = commands.add_parser("demo", help="run a worked example")
    p.add_argument("example", choices=["example1"])

    p = commands.add_parser("mdp-solve", help="solve a constrained MDP over deterministic policies")
    p.add_argument("--input", required=True)
    p.add_argument("--bounds", default="", help='comma-separated bounds "d1,d2,..."')
    p.add_argument("--output")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=get_settings().log_level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )
    if args.command == "solve":
        return cmd_solve(args.input, args.output)
    if args.command == "verify":
        return cmd_verify(args.input, args.solution)
    if args.command == "gen":
        try:
            inf_fraction = parse_rational(args.inf_fraction)
        except ValueError as e:
            return _fail(f"--inf-fraction: {e}")
        return cmd_gen(args.atoms, args.constraints, args.seed, inf_fraction)
    if args.command == "demo":
        return cmd_demo_example1()
    return cmd_mdp_solve(args.input, args.bounds, args.output)


if __name__ == "__main__":
    sys.exit(main())

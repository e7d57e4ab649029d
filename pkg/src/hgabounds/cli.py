"""Command-line front end.

Every subcommand prints one JSON object (or ``key: value`` lines with
``--format text``) carrying ``inputs``, ``bounds``, ``witnesses``,
``residuals`` and ``version``.  Exit status: 0 success, 1 malformed input,
2 infeasible or out-of-domain input, 3 a verification failed.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from pathlib import Path

import numpy as np

from . import __version__
from .applications import (
    PolynomialCoeffs,
    fransen_lohne_lower,
    polynomial_from_roots,
    reverse_upper,
    verify_trace_bound,
)
from .errors import FormatError, HGAError, OracleError
from .formats import load_matrix, load_sample, parse_number_list, read_text
from .means import WeightedSample, compute_means, min_weight
from .oracle import MAX_N, random_feasible_search, two_value_search, verify_sharpness
from .sharp import BoundInterval, arithmetic_bounds, geometric_bounds, harmonic_bounds
from .simple import (
    improvement_threshold,
    improves_over_trivial,
    simple_arithmetic_upper,
    simple_geometric_interval,
    simple_harmonic_lower,
)

EXIT_OK, EXIT_MALFORMED, EXIT_INFEASIBLE, EXIT_VERIFY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_MALFORMED, f"{self.prog}: error: {message}\n")


def _report(inputs, lower=None, upper=None, witnesses=None, residuals=None, **extra) -> dict:
    out = {
        "inputs": inputs,
        "bounds": {"lower": lower, "upper": upper},
        "witnesses": witnesses or {},
        "residuals": residuals or {},
        "version": __version__,
    }
    out.update(extra)
    return out


def _sample_json(sample: WeightedSample) -> dict:
    return {"values": list(sample.values), "weights": list(sample.weights)}


def _rel(x: float, ref: float) -> float:
    return abs(x - ref) / abs(ref) if ref else abs(x)


def _parse_weights(args) -> tuple[float, ...]:
    if args.equal is not None:
        if args.equal < 2:
            raise FormatError("--equal needs N >= 2")
        return (1.0 / args.equal,) * args.equal
    if args.weights is None:
        raise FormatError("give --weights W1,W2,... or --equal N")
    try:
        return tuple(float(w) for w in args.weights.split(","))
    except ValueError:
        raise FormatError(f"--weights: not a comma-separated list of numbers: {args.weights!r}") from None


def _interval_report(interval: BoundInterval, inputs: dict, known: dict[str, float], target: str) -> dict:
    residuals = {}
    for side, witness, endpoint in (
        ("lower", interval.lower_witness, interval.lower),
        ("upper", interval.upper_witness, interval.upper),
    ):
        if witness is None:
            residuals[f"{side}_witness_unrepresentable"] = 0.0
            continue
        means = compute_means(witness)
        got = {"h": means.h, "g": means.g, "a": means.a}
        for k, v in known.items():
            residuals[f"{side}_witness_{k}"] = _rel(got[k], v)
        residuals[f"{side}_witness_{target}"] = _rel(got[target], endpoint)
    return _report(
        inputs,
        interval.lower,
        interval.upper,
        {
            "lower": _sample_json(interval.lower_witness) if interval.lower_witness else None,
            "upper": _sample_json(interval.upper_witness) if interval.upper_witness else None,
        },
        residuals,
        target=target,
    )


def cmd_means(args) -> tuple[int, dict]:
    sample = load_sample(args.sample)
    m = compute_means(sample)
    alpha, j = min_weight(sample)
    return EXIT_OK, _report(
        _sample_json(sample),
        m.h,
        m.a,
        residuals={},
        means={"h": m.h, "g": m.g, "a": m.a},
        min_weight={"alpha": alpha, "index": j},
    )


def cmd_bound_h(args) -> tuple[int, dict]:
    ws = _parse_weights(args)
    interval = harmonic_bounds(args.a, args.g, ws)
    return EXIT_OK, _interval_report(interval, {"a": args.a, "g": args.g, "weights": list(ws)}, {"a": args.a, "g": args.g}, "h")


def cmd_bound_g(args) -> tuple[int, dict]:
    ws = _parse_weights(args)
    interval = geometric_bounds(args.a, args.h, ws)
    return EXIT_OK, _interval_report(interval, {"a": args.a, "h": args.h, "weights": list(ws)}, {"a": args.a, "h": args.h}, "g")


def cmd_bound_a(args) -> tuple[int, dict]:
    ws = _parse_weights(args)
    interval = arithmetic_bounds(args.h, args.g, ws)
    return EXIT_OK, _interval_report(interval, {"h": args.h, "g": args.g, "weights": list(ws)}, {"h": args.h, "g": args.g}, "a")


def cmd_simple(args) -> tuple[int, dict]:
    given = {k: getattr(args, k) for k in "hga" if getattr(args, k) is not None}
    inputs = dict(given, alpha=args.alpha, n=args.n)
    if set(given) == {"a", "g"}:
        rep = simple_harmonic_lower(args.a, args.g, args.alpha)
        return EXIT_OK, _report(inputs, rep.bound, args.g, target="h", kind=rep.kind, strict=rep.is_strict)
    if set(given) == {"h", "g"}:
        rep = simple_arithmetic_upper(args.h, args.g, args.alpha)
        return EXIT_OK, _report(inputs, args.g, rep.bound, target="a", kind=rep.kind, strict=rep.is_strict)
    if set(given) == {"a", "h"}:
        if args.n is None:
            raise FormatError("--n is required with --a and --h")
        lo, hi = simple_geometric_interval(args.a, args.h, args.alpha, args.n)
        return EXIT_OK, _report(
            inputs,
            lo.bound,
            hi.bound,
            target="g",
            strict=True,
            improves_over_trivial=improves_over_trivial(args.a, args.h, args.alpha, args.n),
        )
    raise FormatError("give exactly two of --a, --g, --h")


def cmd_threshold(args) -> tuple[int, dict]:
    start = time.perf_counter()
    t0 = improvement_threshold()
    elapsed = time.perf_counter() - start
    return EXIT_OK, _report({}, t0, t0, residuals={"equation": t0 * math.exp(t0 + 1.0) - 1.0}, t0=t0, seconds=elapsed)


_KINDS = {
    "ga": ("h", lambda m, ws: harmonic_bounds(m.a, m.g, ws), lambda m: {"a": m.a, "g": m.g}),
    "ha": ("g", lambda m, ws: geometric_bounds(m.a, m.h, ws), lambda m: {"a": m.a, "h": m.h}),
    "hg": ("a", lambda m, ws: arithmetic_bounds(m.h, m.g, ws), lambda m: {"h": m.h, "g": m.g}),
}
_KINDS["ag"] = _KINDS["hg"]


def cmd_verify(args) -> tuple[int, dict]:
    """Random problems checked against both oracles and the witness samples."""
    if args.n < 2:
        raise FormatError("--n must be at least 2")
    target, bound_fn, known_fn = _KINDS[args.kind]
    rng = np.random.Generator(np.random.Philox(args.seed))
    failures = []
    boundary_hits = 0
    worst = {"endpoint": 0.0, "witness": 0.0}
    for trial in range(args.trials):
        ws = tuple(rng.dirichlet(np.ones(args.n)))
        sample = WeightedSample(tuple(np.exp(rng.normal(0.0, rng.uniform(0.05, 1.5), args.n))), ws)
        m = compute_means(sample)
        interval = bound_fn(m, sample.weights)
        known = known_fn(m)
        true_value = {"h": m.h, "g": m.g, "a": m.a}[target]
        if not interval.contains(true_value, 1e-12):
            failures.append(f"trial {trial}: {target}={true_value!r} outside [{interval.lower!r}, {interval.upper!r}]")
        rep = _interval_report(interval, {}, known, target)
        worst["witness"] = max(worst["witness"], *rep["residuals"].values())
        reports = [random_feasible_search(sample.weights, known, target, samples=args.samples, seed=args.seed + trial)]
        if args.n <= MAX_N:
            reports.append(two_value_search(sample.weights, known, target))
        for report in reports:
            verdict = verify_sharpness(interval, report, args.tol)
            failures.extend(f"trial {trial} ({report.method}): {msg}" for msg in verdict.failures)
            boundary_hits += report.boundary_hits
            if report.method == "two-value":
                worst["endpoint"] = max(
                    worst["endpoint"],
                    _rel(report.observed_min, interval.lower),
                    _rel(report.observed_max, interval.upper),
                )
    if worst["witness"] > 1e-10:
        failures.append(f"witness residual {worst['witness']:.3g} above 1e-10")
    out = _report(
        {"kind": args.kind, "n": args.n, "trials": args.trials, "seed": args.seed, "tol": args.tol},
        residuals={"max_oracle_endpoint_rel": worst["endpoint"], "max_witness_rel": worst["witness"]},
        target=target,
        passed=not failures,
        failures=failures[:20],
        failure_count=len(failures),
        boundary_hits=boundary_hits,
    )
    return (EXIT_OK if not failures else EXIT_VERIFY), out


def cmd_trace(args) -> tuple[int, dict]:
    matrix = load_matrix(args.matrix)
    check = verify_trace_bound(matrix)
    out = _report(
        {"matrix": str(args.matrix), "n": matrix.n},
        None,
        check.bound,
        residuals={"bound_minus_trace_inverse": check.bound - check.trace_inverse},
        trace_inverse=check.trace_inverse,
        slack_ratio=check.slack_ratio,
        passed=check.passed,
    )
    return (EXIT_OK if check.passed else EXIT_VERIFY), out


def _positive_roots(p: PolynomialCoeffs) -> bool:
    roots = np.roots(p.coefficients)
    return bool(np.all(np.abs(roots.imag) <= 1e-8 * np.abs(roots)) and np.all(roots.real > 0.0))


def cmd_poly(args) -> tuple[int, dict]:
    source = args.source
    text = read_text(source) if source == "-" or Path(source).is_file() else source
    numbers = parse_number_list(text)
    if args.from_roots:
        p = polynomial_from_roots(numbers)
        positive = all(r > 0.0 for r in numbers)
    else:
        p = PolynomialCoeffs(tuple(numbers))
        positive = _positive_roots(p)
    lower, upper = fransen_lohne_lower(p), reverse_upper(p)
    middle = abs(p.coefficients[-2])
    passed = lower <= middle * (1.0 + 1e-12) and middle <= upper
    out = _report(
        {"coefficients": list(p.coefficients), "from_roots": args.from_roots},
        lower,
        upper,
        residuals={"lower_gap": middle - lower, "upper_gap": upper - middle},
        value=middle,
        positive_roots=positive,
        passed=passed,
    )
    if not positive:
        return EXIT_INFEASIBLE, out
    return (EXIT_OK if passed else EXIT_VERIFY), out


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hgabounds", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("means", help="harmonic, geometric and arithmetic means of a sample")
    p.add_argument("sample", help="JSON or CSV file, or - for stdin")
    p.set_defaults(func=cmd_means)

    def weights(p):
        group = p.add_mutually_exclusive_group()
        group.add_argument("--weights", help="comma-separated weights")
        group.add_argument("--equal", type=int, metavar="N", help="N equal weights")

    for name, first, second, func in (
        ("bound-h", "a", "g", cmd_bound_h),
        ("bound-g", "a", "h", cmd_bound_g),
        ("bound-a", "h", "g", cmd_bound_a),
    ):
        p = sub.add_parser(name, help=f"sharp bounds from {first} and {second}")
        p.add_argument(f"--{first}", type=float, required=True)
        p.add_argument(f"--{second}", type=float, required=True)
        weights(p)
        p.set_defaults(func=func)

    p = sub.add_parser("simple", help="closed-form non-sharp bounds")
    for k in "agh":
        p.add_argument(f"--{k}", type=float)
    p.add_argument("--alpha", type=float, required=True, help="minimum weight")
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_simple)

    p = sub.add_parser("threshold", help="root of t exp(t + 1) = 1")
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("verify", help="check sharp bounds against the brute-force oracles")
    p.add_argument("--kind", choices=sorted(_KINDS), required=True, help="known pair: ga, ha, or hg (alias ag)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=500, help="random-search points per trial")
    p.add_argument("--tol", type=float, default=1e-6)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("trace-inv-bound", help="trace(A^-1) bound for an SPD matrix file")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("poly-bound", help="coefficient bounds for a polynomial with positive roots")
    p.add_argument("source", help="JSON list (inline or file): coefficients, descending")
    p.add_argument("--from-roots", action="store_true", help="treat the list as roots")
    p.set_defaults(func=cmd_poly)
    return parser


def _emit(out: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(out, indent=2, allow_nan=True))
        return
    def walk(prefix, value):
        if isinstance(value, dict):
            for k, v in value.items():
                walk(f"{prefix}.{k}" if prefix else k, v)
        else:
            print(f"{prefix}: {value}")
    walk("", out)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        status, out = args.func(args)
    except FormatError as exc:
        print(f"hgabounds: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except OracleError as exc:
        print(f"hgabounds: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except HGAError as exc:
        print(f"hgabounds: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    _emit(out, args.format)
    return status


if __name__ == "__main__":
    raise SystemExit(main())

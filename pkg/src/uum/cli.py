"""Command-line front end.

Exit status: 0 on success, 1 when verification fails or a cap is exceeded,
2 on parse, I/O or usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import secrets
import sys

from . import __version__
from .context import negate
from .discovery import (
    all_seeds,
    candidate_outbox,
    context_digest,
    make_extension,
    phi,
    psi,
    seed_report,
    verify_propositions,
)
from .errors import CapExceeded, UumError
from .evaluation import GenSpec, gen_random_context, gen_random_extension, run_sweep, sweep_csv
from .formats import read_context, write_context
from .lattice import DEFAULT_CAP, enumerate_concepts, format_concept, format_set, to_dot

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _VerificationFailed(Exception):
    pass


def default_cap() -> int:
    raw = os.environ.get("UUM_CAP")
    if not raw:
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        raise UumError(f"UUM_CAP must be an integer, got {raw!r}") from None


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2) + "\n"


def _context_json(ctx) -> dict:
    n = ctx.n_attributes
    return {
        "objects": list(ctx.object_names),
        "attributes": list(ctx.attribute_names),
        "rows": ["".join("X" if row >> m & 1 else "." for m in range(n)) for row in ctx.rows],
    }


def _grid(ctx) -> list[str]:
    """Small fixed-width cross table for terminal output."""
    width = max([len(n) for n in ctx.object_names] + [1])
    lines = [" " * width + " | " + " ".join(ctx.attribute_names)]
    for name, row in zip(ctx.object_names, ctx.rows):
        cells = [("X" if row >> m & 1 else ".").ljust(len(a)) for m, a in enumerate(ctx.attribute_names)]
        lines.append(name.ljust(width) + " | " + " ".join(cells).rstrip())
    return lines


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    seed = secrets.randbits(63)
    print(f"seed: {seed}", file=sys.stderr)
    return seed


def _lattice_output(ctx, lattice, args) -> str:
    if args.dot:
        with open(args.dot, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(to_dot(lattice, args.labels))
    if args.json:
        return _dump(
            {
                "input_digest": context_digest(ctx),
                "concept_count": len(lattice),
                "concepts": [
                    {"extent": ctx.object_names_of(c.extent), "intent": ctx.attribute_names_of(c.intent)}
                    for c in lattice
                ],
                "covers": [list(p) for p in lattice.covers],
            }
        )
    return "".join(format_concept(ctx, c) + "\n" for c in lattice)


# -- subcommands ---------------------------------------------------------------


def cmd_concepts(args) -> str:
    ctx = read_context(args.context, args.format)
    return _lattice_output(ctx, enumerate_concepts(ctx, args.cap), args)


def cmd_anticoncepts(args) -> str:
    neg = negate(read_context(args.context, args.format))
    return _lattice_output(neg, enumerate_concepts(neg, args.cap), args)


def cmd_negate(args) -> str:
    neg = negate(read_context(args.context, args.format))
    if args.json:
        return _dump(_context_json(neg))
    return write_context(neg, args.to)


def cmd_dot(args) -> str:
    ctx = read_context(args.context, args.format)
    return to_dot(enumerate_concepts(ctx, args.cap), args.labels)


def cmd_candidates(args) -> str:
    ctx = read_context(args.context, args.format)
    report = candidate_outbox(ctx, args.cap)
    if args.json:
        return _dump(report.to_dict())
    neg = report.negative
    lines = [f"# anti-concepts ranked by {report.heuristic}"]
    for r in report.ranked:
        lines.append(
            f"{r.rank}. {format_concept(neg, r.concept)}  score={r.score}  preconcepts={r.preconcept_count}"
        )
    return "\n".join(lines) + "\n"


def _extension(args):
    base = read_context(args.base, args.format)
    extended = read_context(args.extended, args.format)
    return make_extension(base, extended, args.allow_removals)


def cmd_reveal(args) -> str:
    ext = _extension(args)
    plus = ext.extended
    phi_rows = {
        name: plus.attribute_names_of(phi(ext, plus.objects(name))) for name in plus.object_names
    }
    psi_cols = {
        name: plus.object_names_of(psi(ext, plus.attributes(name))) for name in plus.attribute_names
    }
    if args.json:
        return _dump(
            {
                "phi": phi_rows,
                "psi": psi_cols,
                "discovery_context": _context_json(ext.discovery),
                "removals_present": ext.removals_present,
            }
        )
    lines = ["phi:"]
    lines += [f"  {g} -> {format_set(v)}" for g, v in phi_rows.items()]
    lines.append("psi:")
    lines += [f"  {m} -> {format_set(v)}" for m, v in psi_cols.items()]
    lines.append("discovery context:")
    lines += ["  " + ln for ln in _grid(ext.discovery)]
    return "\n".join(lines) + "\n"


def _verification_lines(report) -> list[str]:
    lines = []
    for name, r in report.results.items():
        status = "pass" if r.passed else "FAIL"
        line = f"  {name}: {status} ({r.checks} checks)"
        if r.witness is not None:
            line += f"  witness: {json.dumps(r.witness, ensure_ascii=False, sort_keys=True)}"
        lines.append(line)
    mode = "exhaustive" if report.exhaustive else f"sampled, rng seed {report.rng_seed}"
    verdict = "pass" if report.passed else "FAIL (" + ", ".join(report.failures()) + ")"
    lines.append(f"Props 1–6: {verdict} [{mode}]")
    return lines


def cmd_seeds(args) -> str:
    ext = _extension(args)
    seed = 0 if args.seed is None else args.seed
    report = seed_report(ext, args.cap, sample_budget=args.budget, rng_seed=seed)
    extra = all_seeds(ext, args.cap) if args.all else None
    base = ext.base
    if args.json:
        out = report.to_dict()
        if extra is not None:
            out["all_seeds"] = [
                {"objects": base.object_names_of(s.objects), "attributes": base.attribute_names_of(s.attributes)}
                for s in extra
            ]
        text = _dump(out)
    else:
        star = ext.discovery
        neg = report.anti_lattice.context
        lines = ["discovery context:"]
        lines += ["  " + ln for ln in _grid(star)]
        lines.append(f"seeds ({len(report.entries)}):")
        for e in report.entries:
            lines.append(f"  {format_set(base.object_names_of(e.seed.objects))} ; {format_set(base.attribute_names_of(e.seed.attributes))}")
            for k in e.anticipating:
                lines.append(f"    anticipates {format_concept(star, report.discovery_lattice[k])}")
            for k in e.containing:
                lines.append(f"    within anti-concept {format_concept(neg, report.anti_lattice[k])}")
        if extra is not None:
            lines.append(f"all seeds ({len(extra)}):")
            for s in extra:
                lines.append(f"  {format_set(base.object_names_of(s.objects))} ; {format_set(base.attribute_names_of(s.attributes))}")
        lines.extend(_verification_lines(report.verification))
        text = "\n".join(lines) + "\n"
    if not report.verification.passed:
        raise _VerificationFailed(text)
    return text


def cmd_verify(args) -> str:
    ext = _extension(args)
    seed = 0 if args.seed is None else args.seed
    report = verify_propositions(ext, args.budget, seed, args.cap)
    if args.json:
        text = _dump(
            {
                "passed": report.passed,
                "exhaustive": report.exhaustive,
                "rng_seed": report.rng_seed,
                "sample_budget": report.sample_budget,
                "propositions": report.to_dict(),
            }
        )
    else:
        text = "\n".join(_verification_lines(report)) + "\n"
    if not report.passed:
        raise _VerificationFailed(text)
    return text


def cmd_gen(args) -> str:
    seed = _resolve_seed(args)
    ctx = gen_random_context(GenSpec(args.objects, args.attributes, args.density, seed))
    if args.json:
        return _dump({"seed": seed, "context": _context_json(ctx)})
    return write_context(ctx, args.to)


def cmd_extend(args) -> str:
    base = read_context(args.context, args.format)
    seed = _resolve_seed(args)
    ext = gen_random_extension(base, args.new_objects, args.new_attributes, args.new_density, seed)
    if args.json:
        return _dump({"seed": seed, "context": _context_json(ext.extended)})
    return write_context(ext.extended, args.to)


def cmd_eval(args) -> str:
    seed = _resolve_seed(args)
    rows = run_sweep(
        args.trials,
        objects=args.objects,
        attributes=args.attributes,
        density=args.density,
        new_objects=args.new_objects,
        new_attributes=args.new_attributes,
        new_density=args.new_density,
        seed=seed,
        jobs=args.jobs,
        cap=args.cap,
    )
    return sweep_csv(rows)


# -- parser --------------------------------------------------------------------


def _int_list(text):
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _float_list(text):
    try:
        values = tuple(float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None
    if any(not 0.0 <= v <= 1.0 for v in values):
        raise argparse.ArgumentTypeError("densities must lie in [0, 1]")
    return values


def _probability(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError("density must lie in [0, 1]")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable JSON output")
    common.add_argument("--format", choices=("cxt", "csv"), help="input format (default: by file extension)")
    common.add_argument("--cap", type=int, default=None, help="maximum number of concepts/seeds (default 1000000, env UUM_CAP)")
    common.add_argument("--seed", type=int, default=None, help="RNG seed for randomized steps")
    common.add_argument("--allow-removals", action="store_true", help="accept extensions that drop old crosses")
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    common.add_argument("--dot", metavar="PATH", help="also write the Hasse diagram as DOT to PATH")
    common.add_argument("--labels", choices=("full", "reduced"), default="full", help="DOT node labelling")

    parser = argparse.ArgumentParser(prog="uum", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_text, inputs=("context",)):
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        for arg in inputs:
            p.add_argument(arg)
        p.set_defaults(func=func)
        return p

    add("concepts", cmd_concepts, "list all concepts in lectic order")
    p = add("negate", cmd_negate, "print the negated context")
    p.add_argument("--to", choices=("cxt", "csv"), default="cxt", help="output format")
    add("anticoncepts", cmd_anticoncepts, "list the concepts of the negated context")
    add("candidates", cmd_candidates, "rank anti-concepts as places to look for seeds")
    add("reveal", cmd_reveal, "revelation mappings and discovery context", ("base", "extended"))
    for name, func, help_text in (
        ("seeds", cmd_seeds, "seeds of an extension, with the concepts they anticipate"),
        ("verify", cmd_verify, "machine-check the revelation-mapping properties"),
    ):
        p = add(name, func, help_text, ("base", "extended"))
        p.add_argument("--budget", type=int, default=4096, help="subset pairs checked per property")
    seeds_parser = sub.choices["seeds"]
    seeds_parser.add_argument("--all", action="store_true", help="also list every seed (capped)")

    p = add("gen", cmd_gen, "generate a random context", ())
    p.add_argument("--objects", type=int, required=True)
    p.add_argument("--attributes", type=int, required=True)
    p.add_argument("--density", type=_probability, default=0.5)
    p.add_argument("--to", choices=("cxt", "csv"), default="cxt", help="output format")

    p = add("extend", cmd_extend, "grow a context with random new objects, attributes and crosses")
    p.add_argument("--new-objects", type=int, default=1)
    p.add_argument("--new-attributes", type=int, default=1)
    p.add_argument("--new-density", type=_probability, default=0.3)
    p.add_argument("--to", choices=("cxt", "csv"), default="cxt", help="output format")

    p = add("eval", cmd_eval, "seed-recall sweep over random extensions (CSV)", ())
    p.add_argument("--trials", type=int, default=10, help="trials per grid point")
    p.add_argument("--objects", type=_int_list, default=(8,))
    p.add_argument("--attributes", type=_int_list, default=(8,))
    p.add_argument("--density", type=_float_list, default=(0.5,))
    p.add_argument("--new-objects", type=_int_list, default=(2,))
    p.add_argument("--new-attributes", type=_int_list, default=(2,))
    p.add_argument("--new-density", type=_float_list, default=(0.3,))
    p.add_argument("--jobs", type=int, default=1, help="worker processes")

    add("dot", cmd_dot, "Hasse diagram of the concept lattice in DOT")
    return parser


def _emit(text: str, path) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


def main(argv=None) -> int:
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.cap is None:
            args.cap = default_cap()
        if args.cap < 0:
            raise UumError("--cap must be non-negative")
        _emit(args.func(args), args.out)
    except _VerificationFailed as exc:
        _emit(str(exc), args.out)
        return EXIT_FAIL
    except CapExceeded as exc:
        print(f"uum: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (UumError, OSError, ValueError) as exc:
        print(f"uum: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

"""CLI entry point for cat2chain."""

from __future__ import annotations

import argparse
import random
import sys
from collections.abc import Sequence
from pathlib import Path

from .catalog import random_reflexive_graph
from .chain import DegreeOutOfRangeError, betti, format_betti, reliable_top
from .chfunctor import (
    ch_category,
    ch_nat_transf,
    homotopy_transcript,
    normalized_homotopy,
    prism_decomposition,
)
from .config import load_config
from .documents import (
    SchemaError,
    load_category,
    load_functor,
    load_graph,
    load_magma,
    load_nat_transf,
    parse_vector,
    save_json,
)
from .fincat import CategoryError
from .nerve import check_two_coskeletal, format_simplex, nerve
from .output_paths import chain_output_filename, default_output_path, homotopy_report_filename
from .ratlinalg import format_vector
from .tools.report import generate_report, nerve_counts_table, save_report
from .twovect import (
    MAX_EXHAUSTIVE_SIZE,
    EckmannHiltonFailure,
    GraphError,
    MagmaError,
    NotComposableError,
    SweepSummary,
    diamond,
    eckmann_hilton_check,
    exhaustive_eckmann_hilton,
    sampled_eckmann_hilton,
    solve_composition,
)

EXIT_OK = 0
EXIT_FINDING = 1
EXIT_INPUT = 2

Config = dict[str, dict[str, object]]


def _log(message: str) -> None:
    print(f"[cat2chain] {message}", file=sys.stderr)


def _parse_args(argv: Sequence[str] | None = None) -> argparse.Namespace:
    """Parse CLI arguments."""
    parser = argparse.ArgumentParser(description="cat2chain: categories, nerves and chain complexes over Q")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--config", default=None, help="Path to TOML config file")
        return cmd

    cmd = add("validate", "Check the category axioms of one or more documents")
    cmd.add_argument("categories", nargs="+", help="Category JSON files")

    cmd = add("nerve", "Simplex counts of a truncated nerve")
    cmd.add_argument("category")
    cmd.add_argument("--max-dim", type=int, default=None)
    cmd.add_argument("--list", action="store_true", help="List every simplex")
    cmd.add_argument("--markdown", action="store_true", help="Print the counts as a Markdown table")

    cmd = add("chain", "Write the chain complex of a nerve as JSON")
    cmd.add_argument("category")
    cmd.add_argument("--max-dim", type=int, default=None)
    cmd.add_argument("--normalized", action="store_true")
    cmd.add_argument("--output", default=None, help="Output JSON path")

    cmd = add("homology", "Betti numbers over Q")
    cmd.add_argument("category")
    cmd.add_argument("--max-dim", type=int, default=None)
    cmd.add_argument("--normalized", action="store_true")

    cmd = add("coskeletal", "Unique-filler check in dimension 3 (and 4)")
    cmd.add_argument("category")
    cmd.add_argument("--max-dim", type=int, choices=[3, 4], default=None)

    cmd = add("diamond", "Compose two morphism vectors of a reflexive graph")
    cmd.add_argument("graph")
    cmd.add_argument("--f", dest="fmor", required=True, help="Vector such as (0,0,1,0)")
    cmd.add_argument("--g", dest="gmor", required=True, help="Vector such as (1,0,0,1)")

    cmd = add("solve-comp", "Solve the unit laws for a linear composition")
    cmd.add_argument("graph", nargs="?", default=None)
    cmd.add_argument("--random-graphs", type=int, default=None, help="Also check K generated graphs")
    cmd.add_argument("--seed", type=int, default=None)

    cmd = add("eh-check", "Eckmann-Hilton check on a magma pair or a sweep")
    cmd.add_argument("magma", nargs="?", default=None)
    cmd.add_argument("--exhaustive-size", type=int, default=None, help="Sweep carriers of size 1..k; sizes above 3 are sampled")
    cmd.add_argument("--samples", type=int, default=None, help="Random pairs on a larger carrier (default count from config)")
    cmd.add_argument("--sample-size", type=int, default=4, help="Carrier size for --samples")
    cmd.add_argument("--seed", type=int, default=None)
    cmd.add_argument("--no-progress", action="store_true")

    cmd = add("homotopy", "Verify the chain homotopy of a natural transformation")
    cmd.add_argument("source_category")
    cmd.add_argument("target_category")
    cmd.add_argument("functor_f")
    cmd.add_argument("functor_g")
    cmd.add_argument("alpha")
    cmd.add_argument("--max-dim", type=int, default=None)
    cmd.add_argument("--normalized", action="store_true", help="Also check the normalized complexes")
    cmd.add_argument(
        "--report", nargs="?", const="", default=None, help="Write a Markdown transcript (default path from config)"
    )

    return parser.parse_args(argv)


def _cmd_validate(args: argparse.Namespace, cfg: Config) -> int:
    status = EXIT_OK
    for path in args.categories:
        try:
            c = load_category(path)
        except SchemaError as exc:
            _log(f"input error: {exc}")
            status = EXIT_INPUT
            continue
        except CategoryError as exc:
            print(f"{path}: {exc.args[0]}")
            status = max(status, EXIT_FINDING)
            continue
        print(
            f"{path}: Ok ({len(c.objects)} objects, {len(c.morphisms)} morphisms, "
            f"{len(c.compose_table)} composites)"
        )
    return status


def _cmd_nerve(args: argparse.Namespace, cfg: Config) -> int:
    max_dim = args.max_dim if args.max_dim is not None else cfg["nerve"]["max_dim"]
    x = nerve(load_category(args.category), max_dim)
    if args.markdown:
        print(nerve_counts_table(x))
    else:
        print(f"counts: {x.counts()}")
        print(f"nondegenerate: {x.nondegenerate_counts()}")
    if args.list or cfg["nerve"]["list_simplices"]:
        for n in range(max_dim + 1):
            print(f"dimension {n}:")
            for k, s in enumerate(x.simplices[n]):
                print(f"  [{k}] {format_simplex(s)}")
    return EXIT_OK


def _cmd_chain(args: argparse.Namespace, cfg: Config) -> int:
    max_dim = args.max_dim if args.max_dim is not None else cfg["homology"]["max_dim"]
    normalized = args.normalized or cfg["homology"]["normalized"]
    result = ch_category(load_category(args.category), max_dim)
    complex_ = result.normalized if normalized else result.complex
    output = (
        Path(args.output)
        if args.output
        else default_output_path(cfg["output"]["data_dir"], args.category, chain_output_filename(normalized))
    )
    save_json(complex_.to_document(), output)
    print(f"Saved chain complex (dims {complex_.dims()}) to {output}")
    return EXIT_OK


def _cmd_homology(args: argparse.Namespace, cfg: Config) -> int:
    max_dim = args.max_dim if args.max_dim is not None else cfg["homology"]["max_dim"]
    normalized = args.normalized or cfg["homology"]["normalized"]
    result = ch_category(load_category(args.category), max_dim)
    complex_ = result.normalized if normalized else result.complex
    # Reports stop one degree below the library bound; that degree prints as "?".
    shown = reliable_top(complex_) - 1
    values = betti(complex_, shown) if shown >= 0 else []
    print(format_betti(values, shown + 1))
    return EXIT_OK


def _cmd_coskeletal(args: argparse.Namespace, cfg: Config) -> int:
    max_dim = args.max_dim if args.max_dim is not None else cfg["coskeletal"]["max_dim"]
    report = check_two_coskeletal(nerve(load_category(args.category), max_dim), check_dim4=max_dim >= 4)
    print(report.summary())
    return EXIT_OK if report.ok else EXIT_FINDING


def _cmd_diamond(args: argparse.Namespace, cfg: Config) -> int:
    g = load_graph(args.graph)
    gmor, fmor = parse_vector(args.gmor), parse_vector(args.fmor)
    for flag, vec in (("--g", gmor), ("--f", fmor)):
        if len(vec) != g.dim1:
            raise SchemaError(f"{flag} must have {g.dim1} entries, got {len(vec)}")
    print(format_vector(diamond(g, gmor, fmor)))
    return EXIT_OK


def _cmd_solve_comp(args: argparse.Namespace, cfg: Config) -> int:
    if args.graph is None and not args.random_graphs:
        raise SchemaError("solve-comp needs a graph document or --random-graphs")
    status = EXIT_OK
    if args.graph is not None:
        report = solve_composition(load_graph(args.graph))
        print(report.summary())
        if not (report.unique and report.equals_diamond):
            status = EXIT_FINDING
    if args.random_graphs:
        seed = args.seed if args.seed is not None else cfg["random"]["seed"]
        rng = random.Random(seed)
        for index in range(args.random_graphs):
            dim0 = rng.randint(1, 3)
            dim1 = rng.randint(dim0, 6)
            report = solve_composition(random_reflexive_graph(rng, dim0, dim1))
            print(f"graph {index} (dim0={dim0}, dim1={dim1}): {report.summary()}")
            if not (report.unique and report.equals_diamond):
                status = EXIT_FINDING
    return status


def _print_sampled(summary: SweepSummary) -> None:
    print(
        f"sampled size {summary.carrier_size}: {summary.pairs_checked} pairs, "
        f"{summary.interchange_pairs} satisfy interchange, {summary.confirmed} confirmed, "
        f"{summary.counterexamples} counterexamples"
    )


def _cmd_eh_check(args: argparse.Namespace, cfg: Config) -> int:
    eh_cfg = cfg["eckmann_hilton"]
    progress = bool(eh_cfg["progress"]) and not args.no_progress
    samples = args.samples if args.samples is not None else int(eh_cfg["samples"])
    seed = args.seed if args.seed is not None else cfg["random"]["seed"]
    rng = random.Random(seed)
    status = EXIT_OK
    if args.magma is not None:
        result = eckmann_hilton_check(load_magma(args.magma))
        print(result.summary())
        if not result.confirmed:
            status = EXIT_FINDING
    sweep = args.exhaustive_size
    if args.magma is None and sweep is None and args.samples is None:
        sweep = eh_cfg["exhaustive_size"]
    if sweep is not None:
        if sweep < 1:
            raise SchemaError("--exhaustive-size must be at least 1")
        for size in range(1, min(sweep, MAX_EXHAUSTIVE_SIZE) + 1):
            summary = exhaustive_eckmann_hilton(size, progress=progress)
            print(
                f"size {size}: {summary.pairs_checked} pairs, {summary.interchange_pairs} satisfy "
                f"interchange, {summary.confirmed} confirmed, {summary.counterexamples} counterexamples"
            )
            if summary.counterexamples:
                status = EXIT_FINDING
        for size in range(MAX_EXHAUSTIVE_SIZE + 1, sweep + 1):
            summary = sampled_eckmann_hilton(size, samples, rng, progress=progress)
            _print_sampled(summary)
            if summary.counterexamples:
                status = EXIT_FINDING
    if args.samples is not None:
        summary = sampled_eckmann_hilton(args.sample_size, samples, rng, progress=progress)
        _print_sampled(summary)
        if summary.counterexamples:
            status = EXIT_FINDING
    return status


def _cmd_homotopy(args: argparse.Namespace, cfg: Config) -> int:
    max_dim = args.max_dim if args.max_dim is not None else cfg["homology"]["max_dim"]
    c = load_category(args.source_category)
    d = load_category(args.target_category)
    f = load_functor(args.functor_f, c, d)
    g = load_functor(args.functor_g, c, d)
    alpha = load_nat_transf(args.alpha, f, g)
    source, target = ch_category(c, max_dim), ch_category(d, max_dim)
    h = ch_nat_transf(alpha, max_dim, source, target)

    transcript = homotopy_transcript(h)
    for row in transcript:
        print(f"degree {row.degree}: defect nonzero entries {row.defect_nonzero} -> {row.verdict}")
    normalized = None
    if args.normalized:
        normalized = homotopy_transcript(normalized_homotopy(h, source, target))
        for row in normalized:
            print(f"normalized degree {row.degree}: defect nonzero entries {row.defect_nonzero} -> {row.verdict}")
    prisms = prism_decomposition(alpha, h, source, target)
    for row in prisms:
        terms = " ".join(f"{'+' if coeff > 0 else '-'}{label}" for label, coeff in row.entries) or "0"
        print(f"h1({row.morphism}) = B - A with B = {row.b}, A = {row.a}: {terms}")

    if args.report is not None:
        report_path = (
            Path(args.report)
            if args.report
            else default_output_path(cfg["output"]["data_dir"], args.alpha, homotopy_report_filename())
        )
        save_report(generate_report(transcript, prisms, normalized), report_path)
        _log(f"Saved report to {report_path}")
    ok = all(row.verdict == "Ok" for row in transcript + (normalized or []))
    return EXIT_OK if ok else EXIT_FINDING


COMMANDS = {
    "validate": _cmd_validate,
    "nerve": _cmd_nerve,
    "chain": _cmd_chain,
    "homology": _cmd_homology,
    "coskeletal": _cmd_coskeletal,
    "diamond": _cmd_diamond,
    "solve-comp": _cmd_solve_comp,
    "eh-check": _cmd_eh_check,
    "homotopy": _cmd_homotopy,
}


def main(argv: Sequence[str] | None = None) -> int:
    """Run one verb; returns the process exit code."""
    args = _parse_args(argv)
    try:
        cfg = load_config(args.config)
    except (OSError, ValueError) as exc:
        _log(f"config error: {exc}")
        return EXIT_INPUT
    try:
        return COMMANDS[args.verb](args, cfg)
    except (SchemaError, OSError) as exc:
        _log(f"input error: {exc}")
        return EXIT_INPUT
    except EckmannHiltonFailure as exc:
        _log(f"internal error: {exc}")
        return EXIT_FINDING
    except (CategoryError, GraphError, MagmaError, NotComposableError, DegreeOutOfRangeError) as exc:
        _log(str(exc))
        return EXIT_FINDING
    except ValueError as exc:
        _log(f"invalid request: {exc}")
        return EXIT_FINDING


if __name__ == "__main__":
    raise SystemExit(main())

"""Run the cat2chain acceptance checks and print one verdict per check."""

from __future__ import annotations

import argparse
import random
import subprocess
import sys
from collections.abc import Callable
from pathlib import Path

from cat2chain import catalog
from cat2chain.chain import betti, verify_homotopy
from cat2chain.chfunctor import ch_category, ch_functor, ch_nat_transf, normalized_homotopy, prism_pair
from cat2chain.config import DEFAULT_CONFIG, load_config
from cat2chain.fincat import FinCategory, compose_functors, constant_functor
from cat2chain.nerve import check_two_coskeletal, nerve, nerve_of_functor
from cat2chain.twovect import (
    category_to_graph,
    exhaustive_eckmann_hilton,
    graph_to_category,
    solve_composition,
)

ROOT = Path(__file__).resolve().parents[1]

Check = Callable[[dict[str, dict[str, object]]], bool]


def _parse_args() -> argparse.Namespace:
    parser = argparse.ArgumentParser(description="Run cat2chain acceptance checks")
    parser.add_argument("--config", default=None, help="Path to TOML config")
    parser.add_argument("--only", nargs="*", default=None, help="Run only the named checks")
    return parser.parse_args()


def _named_categories() -> dict[str, FinCategory]:
    return {
        "walking arrow": catalog.walking_arrow(),
        "commutative square": catalog.commutative_square(),
        "discrete 3": catalog.discrete(3),
        "B(Z/2)": catalog.cyclic_group(2),
        "B(Z/3)": catalog.cyclic_group(3),
        "random 4-object poset": catalog.random_poset(4, random.Random(4)),
    }


def check_eckmann_hilton(cfg: dict[str, dict[str, object]]) -> bool:
    ok = True
    for size in (2, 3):
        summary = exhaustive_eckmann_hilton(size, progress=bool(cfg["eckmann_hilton"]["progress"]))
        print(f"  size {size}: {summary.interchange_pairs} interchange pairs, {summary.counterexamples} counterexamples")
        ok = ok and summary.counterexamples == 0
    return ok


def check_composition(cfg: dict[str, dict[str, object]]) -> bool:
    rng = random.Random(cfg["random"]["seed"])
    graphs = [catalog.example_graph()]
    for _ in range(int(cfg["random"]["graphs"])):
        dim0 = rng.randint(1, 3)
        graphs.append(catalog.random_reflexive_graph(rng, dim0, rng.randint(dim0, 6)))
    reports = [solve_composition(g) for g in graphs]
    print(f"  {len(reports)} graphs, {sum(r.unique and bool(r.equals_diamond) for r in reports)} unique and equal to diamond")
    return all(r.unique and r.equals_diamond for r in reports)


def check_round_trips(cfg: dict[str, dict[str, object]]) -> bool:
    rng = random.Random(cfg["random"]["seed"])
    graphs = [catalog.example_graph(), catalog.trivial_graph()]
    graphs += [catalog.random_reflexive_graph(rng, 2, 5) for _ in range(5)]
    return all(
        category_to_graph(graph_to_category(g)) == g
        and graph_to_category(category_to_graph(graph_to_category(g))) == graph_to_category(g)
        for g in graphs
    )


def check_boundaries(cfg: dict[str, dict[str, object]]) -> bool:
    ok = True
    for name, c in _named_categories().items():
        result = ch_category(c, 5)
        clean = not result.complex.square_defects() and not result.normalized.square_defects()
        print(f"  {name}: {'Ok' if clean else 'delta o delta != 0'}")
        ok = ok and clean
    return ok


def check_betti(cfg: dict[str, dict[str, object]]) -> bool:
    expected = {
        "walking arrow": [1, 0, 0, 0],
        "discrete 3": [3, 0, 0, 0],
        "B(Z/2)": [1, 0, 0, 0],
        "commutative square": [1, 0, 0, 0],
    }
    categories = _named_categories()
    ok = True
    for name, values in expected.items():
        got = betti(ch_category(categories[name], 5).complex, 3)
        print(f"  {name}: {got}")
        ok = ok and got == values
    return ok


def check_coskeletal(cfg: dict[str, dict[str, object]]) -> bool:
    ok = all(check_two_coskeletal(nerve(c, 3)).ok for c in _named_categories().values())
    mutilated = nerve(catalog.total_order(3), 3)
    top = mutilated.index_of(3, ("0<1", "1<2", "2<3"))
    report = check_two_coskeletal(mutilated.without_simplex(3, top))
    print(f"  mutilated fixture: {report.summary()}")
    return ok and bool(report.missing)


def check_homotopies(cfg: dict[str, dict[str, object]]) -> bool:
    trunc = int(cfg["homology"]["max_dim"])
    f, _, alpha = catalog.arrow_to_square_functors()
    triples = [(f.source, f.target, alpha)]
    rng = random.Random(cfg["random"]["seed"])
    for _ in range(5):
        c, d, _, _, a = catalog.random_transformation_triple(rng)
        triples.append((c, d, a))
    ok = True
    for c, d, a in triples:
        source, target = ch_category(c, trunc), ch_category(d, trunc)
        h = ch_nat_transf(a, trunc, source, target)
        ok = ok and verify_homotopy(h).ok and verify_homotopy(normalized_homotopy(h, source, target)).ok

    source, target = ch_category(f.source, trunc), ch_category(f.target, trunc)
    h1 = ch_nat_transf(alpha, trunc, source, target).component(1)
    column = source.index(1, ("f",))
    b, a_term = prism_pair(alpha, "f")
    entries = {r: h1[r, column] for r in range(h1.rows) if h1[r, column]}
    print(f"  {len(triples)} transformations; h1(f) has {len(entries)} nonzero entries")
    return ok and entries == {target.index(2, b): 1, target.index(2, a_term): -1}


def check_functoriality(cfg: dict[str, dict[str, object]]) -> bool:
    f, g, _ = catalog.arrow_to_square_functors()
    collapse = constant_functor(f.target, catalog.terminal(), "*")
    arrow, square, point = (ch_category(x, 4) for x in (f.source, f.target, collapse.target))
    ok = True
    for functor in (f, g):
        composite = compose_functors(collapse, functor)
        ok = ok and ch_functor(composite, 4, arrow, point) == ch_functor(collapse, 4, square, point).compose(
            ch_functor(functor, 4, arrow, square)
        )
        ok = ok and nerve_of_functor(composite, 4) == nerve_of_functor(collapse, 4).compose(
            nerve_of_functor(functor, 4)
        )
    return ok


def check_nerve_counts(cfg: dict[str, dict[str, object]]) -> bool:
    arrow = nerve(catalog.walking_arrow(), 3)
    bz2 = nerve(catalog.cyclic_group(2), 4)
    print(f"  walking arrow {arrow.counts()}, B(Z/2) {bz2.counts()} / {bz2.nondegenerate_counts()}")
    return (
        arrow.counts() == [2, 3, 4, 5]
        and bz2.counts() == [1, 2, 4, 8, 16]
        and bz2.nondegenerate_counts() == [1, 1, 1, 1, 1]
    )


def check_determinism(cfg: dict[str, dict[str, object]]) -> bool:
    cmd = [sys.executable, "-m", "cat2chain.cli", "homology", str(ROOT / "data" / "commutative_square.json")]
    runs = [subprocess.run(cmd, capture_output=True, check=True).stdout for _ in range(2)]
    print(f"  {runs[0].decode('utf-8').strip()}")
    return runs[0] == runs[1]


CHECKS: dict[str, Check] = {
    "eckmann-hilton": check_eckmann_hilton,
    "composition": check_composition,
    "round-trips": check_round_trips,
    "boundaries": check_boundaries,
    "betti": check_betti,
    "coskeletal": check_coskeletal,
    "homotopies": check_homotopies,
    "functoriality": check_functoriality,
    "nerve-counts": check_nerve_counts,
    "determinism": check_determinism,
}


def main() -> None:
    args = _parse_args()

    cfg = DEFAULT_CONFIG
    if args.config:
        cfg = load_config(args.config)

    selected = args.only or list(CHECKS)
    unknown = sorted(set(selected) - set(CHECKS))
    if unknown:
        raise SystemExit(f"Unknown check(s): {', '.join(unknown)}")

    failed = []
    for name in selected:
        print(f"{name}:")
        ok = CHECKS[name](cfg)
        print(f"  -> {'PASS' if ok else 'FAIL'}")
        if not ok:
            failed.append(name)
    if failed:
        raise SystemExit(f"Failed: {', '.join(failed)}")
    print("All checks passed")


if __name__ == "__main__":
    main()

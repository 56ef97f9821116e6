from __future__ import annotations

import random
from pathlib import Path

import pytest

from cat2chain import catalog
from cat2chain.documents import load_graph, load_magma
from cat2chain.ratlinalg import Matrix, Vector, vector
from cat2chain.twovect import (
    GraphError,
    GraphMorphism,
    MagmaError,
    MagmaPair,
    NotComposableError,
    ReflexiveVectGraph,
    arrow_part,
    category_to_graph,
    diamond,
    eckmann_hilton_check,
    exhaustive_eckmann_hilton,
    graph_to_category,
    interchange_witness,
    morphism_preserves_diamond,
    sampled_eckmann_hilton,
    solve_composition,
    unital_tables,
    verify_two_vect,
)

DATA = Path(__file__).resolve().parents[1] / "data"


def test_graph_document_matches_catalog() -> None:
    assert load_graph(DATA / "example_graph.json") == catalog.example_graph()


def test_arrow_part_and_diamond() -> None:
    g = catalog.example_graph()
    assert arrow_part(g, vector([1, 2, 3, 4])) == vector([0, 0, 3, 4])
    assert diamond(g, vector([1, 0, 0, 1]), vector([0, 0, 1, 0])) == vector([0, 0, 1, 1])


def test_diamond_rejects_non_composable_pair() -> None:
    g = catalog.example_graph()
    with pytest.raises(NotComposableError, match="Not composable") as excinfo:
        diamond(g, vector([0, 0, 0, 0]), vector([1, 0, 0, 0]))
    assert excinfo.value.source_of_g == vector([0, 0])
    assert excinfo.value.target_of_f == vector([1, 0])


def test_diamond_rejects_wrong_dimension() -> None:
    with pytest.raises(ValueError, match="Dimension mismatch"):
        arrow_part(catalog.example_graph(), vector([1, 2]))


def test_graph_requires_reflexive_identities() -> None:
    one = Matrix.identity(1)
    with pytest.raises(GraphError, match="s o i"):
        ReflexiveVectGraph(1, 1, Matrix.from_rows([[2]]), one, one)
    with pytest.raises(GraphError, match="must be"):
        ReflexiveVectGraph(1, 2, one, one, one)


def test_unit_laws_force_the_diamond_composition() -> None:
    report = solve_composition(catalog.example_graph())
    assert report.unique
    assert report.equals_diamond is True
    assert report.summary() == "Unique; equals diamond: yes"
    assert report.space is not None
    assert verify_two_vect(report.space) == []


def test_trivial_graph_composition() -> None:
    report = solve_composition(catalog.trivial_graph())
    assert report.summary() == "Unique; equals diamond: yes"


def test_random_graphs_have_a_unique_composition() -> None:
    rng = random.Random(0)
    for _ in range(20):
        dim0 = rng.randint(1, 3)
        g = catalog.random_reflexive_graph(rng, dim0, rng.randint(dim0, 6))
        report = solve_composition(g)
        assert report.unique, report.summary()
        assert report.equals_diamond is True
        assert verify_two_vect(graph_to_category(g)) == []


def test_graph_morphisms_preserve_diamond() -> None:
    g = catalog.example_graph()
    ident = GraphMorphism(g, g, Matrix.identity(2), Matrix.identity(4))
    assert morphism_preserves_diamond(ident)
    doubled = GraphMorphism(g, g, Matrix.identity(2).scale(2), Matrix.identity(4).scale(2))
    assert morphism_preserves_diamond(doubled)
    with pytest.raises(GraphError, match="commute with s"):
        GraphMorphism(g, g, Matrix.identity(2), Matrix.zeros(4, 4))


def test_eckmann_hilton_confirms_cyclic_addition() -> None:
    result = eckmann_hilton_check(load_magma(DATA / "z3_add.json"))
    assert result.confirmed
    assert result.summary() == "Confirmed: operations coincide and commute; unit 0"
    assert eckmann_hilton_check(catalog.cyclic_magma(4)).confirmed


def test_left_absorbing_magma_breaks_interchange() -> None:
    p = load_magma(DATA / "left_absorbing.json")
    assert p == catalog.left_absorbing_magma()
    assert interchange_witness(p) == ("e", "a", "b", "e")
    result = eckmann_hilton_check(p)
    assert not result.confirmed
    assert result.summary() == "InterchangeViolation: (e + a) o (b + e) != e o b + a o e"


def test_magma_units_are_checked() -> None:
    table = {(a, b): a for a in ("0", "1") for b in ("0", "1")}
    with pytest.raises(MagmaError, match="not a two-sided unit"):
        MagmaPair(("0", "1"), table, table, "0", "0")
    with pytest.raises(MagmaError, match="not in the carrier"):
        MagmaPair(("0", "1"), table, table, "2", "0")


def test_unital_tables_enumeration() -> None:
    assert len(list(unital_tables(("0", "1"), "0"))) == 2
    assert len(list(unital_tables(("0", "1", "2"), "1"))) == 81


@pytest.mark.parametrize("size", [1, 2, 3])
def test_exhaustive_sweep_has_no_counterexamples(size: int) -> None:
    summary = exhaustive_eckmann_hilton(size)
    assert summary.counterexamples == 0
    assert summary.interchange_pairs == summary.confirmed > 0


def test_exhaustive_sweep_size_two_counts() -> None:
    summary = exhaustive_eckmann_hilton(2)
    assert summary.pairs_checked == 16
    assert summary.interchange_pairs == 4


def test_exhaustive_sweep_rejects_large_carriers() -> None:
    with pytest.raises(ValueError, match="sizes 1 to 3"):
        exhaustive_eckmann_hilton(4)


def test_sampled_sweep_is_seeded() -> None:
    first = sampled_eckmann_hilton(4, 200, random.Random(0))
    second = sampled_eckmann_hilton(4, 200, random.Random(0))
    assert first == second
    assert first.counterexamples == 0


def test_graph_and_category_round_trips() -> None:
    rng = random.Random(4)
    graphs = [catalog.example_graph(), catalog.trivial_graph()]
    graphs += [catalog.random_reflexive_graph(rng, 2, 4) for _ in range(3)]
    for g in graphs:
        c = graph_to_category(g)
        assert category_to_graph(c) == g
        assert graph_to_category(category_to_graph(c)) == c


def _random_vector(rng: random.Random, size: int) -> Vector:
    return vector(rng.randint(-3, 3) for _ in range(size))


def _composable_after(g: ReflexiveVectGraph, f: Vector, rng: random.Random) -> Vector:
    """A random morphism whose source is ``t(f)``."""
    h = _random_vector(rng, g.dim1)
    shift = g.ident(g.target(f))
    return tuple(a + b for a, b in zip(arrow_part(g, h), shift, strict=True))


def _random_graphs(seed: int, count: int) -> list[ReflexiveVectGraph]:
    rng = random.Random(seed)
    graphs = []
    for _ in range(count):
        dim0 = rng.randint(1, 3)
        graphs.append(catalog.random_reflexive_graph(rng, dim0, rng.randint(dim0, 6)))
    return graphs


def test_morphism_splits_into_arrow_part_and_identity() -> None:
    rng = random.Random(11)
    for g in [catalog.example_graph(), *_random_graphs(11, 10)]:
        f = _random_vector(rng, g.dim1)

        rebuilt = tuple(a + b for a, b in zip(arrow_part(g, f), g.ident(g.source(f)), strict=True))

        assert rebuilt == f
        assert not any(g.source(arrow_part(g, f)))


def test_arrow_part_is_additive_under_diamond() -> None:
    rng = random.Random(12)
    for g in [catalog.example_graph(), *_random_graphs(12, 10)]:
        f = _random_vector(rng, g.dim1)
        gm = _composable_after(g, f, rng)

        composite = diamond(g, gm, f)

        expected = tuple(a + b for a, b in zip(arrow_part(g, f), arrow_part(g, gm), strict=True))
        assert arrow_part(g, composite) == expected
        assert g.source(composite) == g.source(f)
        assert g.target(composite) == g.target(gm)


def test_diamond_is_associative_on_composable_triples() -> None:
    rng = random.Random(13)
    for g in [catalog.example_graph(), *_random_graphs(13, 10)]:
        f = _random_vector(rng, g.dim1)
        gm = _composable_after(g, f, rng)
        h = _composable_after(g, gm, rng)

        assert diamond(g, h, diamond(g, gm, f)) == diamond(g, diamond(g, h, gm), f)


def test_zero_graph_round_trip() -> None:
    g = catalog.zero_graph()

    c = graph_to_category(g)

    assert category_to_graph(c) == g
    assert graph_to_category(category_to_graph(c)) == c
    assert c.pullback_basis == ()
    assert verify_two_vect(c) == []


def test_round_trips_on_generated_graphs() -> None:
    for g in _random_graphs(20, 20):
        c = graph_to_category(g)

        assert category_to_graph(c) == g
        assert graph_to_category(category_to_graph(c)) == c

from __future__ import annotations

import random
from pathlib import Path
from types import MappingProxyType

import pytest

from cat2chain import catalog
from cat2chain.documents import load_category
from cat2chain.fincat import (
    CategoryError,
    FinCategory,
    Morphism,
    category_to_document,
    category_violations,
    check_associativity_brute_force,
    compose_functors,
    identity_functor,
    identity_transformation,
    validate_category,
    validate_functor,
    validate_nat_transf,
    vertical_compose,
)

DATA = Path(__file__).resolve().parents[1] / "data"


def _two_parallel_arrows() -> FinCategory:
    return catalog._category(["0", "1"], [("u", "0", "1"), ("v", "0", "1")])


def test_walking_arrow_is_valid_and_fills_unit_composites() -> None:
    c = load_category(DATA / "walking_arrow.json")
    assert c.objects == ("x", "y")
    assert len(c.morphisms) == 3
    assert c.compose("f", "id_x") == "f"
    assert c.compose("id_y", "f") == "f"
    assert c.hom("x", "y") == ["f"]
    assert c == catalog.walking_arrow()


def test_catalog_categories_validate() -> None:
    for c in (
        catalog.terminal(),
        catalog.empty(),
        catalog.discrete(3),
        catalog.commutative_square(),
        catalog.cyclic_group(3),
        catalog.total_order(3),
    ):
        assert category_violations(c) == []
        assert validate_category(category_to_document(c)) == c


def test_broken_unit_law_is_reported() -> None:
    with pytest.raises(CategoryError, match="Invalid category") as excinfo:
        load_category(DATA / "broken_unit_law.json")
    kinds = {v.kind for v in excinfo.value.violations}
    assert "unit_law" in kinds


def test_missing_composite_is_reported() -> None:
    raw = category_to_document(catalog.commutative_square())
    raw["compose"] = [e for e in raw["compose"] if e["g"] != "b"]  # type: ignore[index, union-attr]
    with pytest.raises(CategoryError) as excinfo:
        validate_category(raw)
    assert any(v.kind == "missing_composite" and v.witness == ("b", "a") for v in excinfo.value.violations)


def test_conflicting_composite_is_reported() -> None:
    raw = category_to_document(catalog.cyclic_group(2))
    raw["compose"].append({"g": "g", "f": "g", "result": "g"})  # type: ignore[union-attr]
    with pytest.raises(CategoryError, match="conflicting_composite"):
        validate_category(raw)


def test_non_associative_table_is_found_by_both_checks() -> None:
    ids = ("e", "a", "b")
    table = {("e", m): m for m in ids} | {(m, "e"): m for m in ids}
    table |= {("a", "a"): "b", ("a", "b"): "a", ("b", "a"): "a", ("b", "b"): "a"}
    c = FinCategory(
        objects=("*",),
        morphisms=tuple(Morphism(m, "*", "*") for m in ids),
        identity=MappingProxyType({"*": "e"}),
        compose_table=MappingProxyType(table),
    )
    structured = [v.witness for v in category_violations(c) if v.kind == "associativity"]
    brute = check_associativity_brute_force(c)
    assert ("a", "a", "b") in brute
    assert sorted(structured) == sorted(brute)


def test_idempotent_monoid_is_a_category() -> None:
    c = load_category(DATA / "idempotent.json")
    assert c.compose("g", "g") == "g"
    assert check_associativity_brute_force(c) == []


def test_poset_rejects_cycles() -> None:
    with pytest.raises(ValueError, match="antisymmetric"):
        catalog.poset(["a", "b"], [("a", "b"), ("b", "a")])


def test_functor_validation_reports_composite_preservation() -> None:
    square = catalog.commutative_square()
    arrow = catalog.walking_arrow()
    f, _, _ = catalog.arrow_to_square_functors()
    assert f.mor_map["f"] == "a"
    with pytest.raises(CategoryError, match="src_tgt_preservation"):
        validate_functor(
            {"objects": {"x": "0", "y": "1"}, "morphisms": {"id_x": "id_0", "id_y": "id_1", "f": "b"}},
            arrow,
            square,
        )


def test_naturality_violation_is_reported() -> None:
    arrow = catalog.walking_arrow()
    parallel = _two_parallel_arrows()
    objects = {"x": "0", "y": "1"}
    f = validate_functor({"objects": objects, "morphisms": {"id_x": "id_0", "id_y": "id_1", "f": "u"}}, arrow, parallel)
    g = validate_functor({"objects": objects, "morphisms": {"id_x": "id_0", "id_y": "id_1", "f": "v"}}, arrow, parallel)
    with pytest.raises(CategoryError, match="naturality"):
        validate_nat_transf({"components": {"x": "id_0", "y": "id_1"}}, f, g)


def test_component_boundary_is_checked() -> None:
    f, g, _ = catalog.arrow_to_square_functors()
    with pytest.raises(CategoryError, match="component_boundary"):
        validate_nat_transf({"components": {"x": "a", "y": "b"}}, f, g)


def test_functor_composition_and_identities() -> None:
    f, _, _ = catalog.arrow_to_square_functors()
    square = f.target
    assert compose_functors(identity_functor(square), f) == f
    assert compose_functors(f, identity_functor(f.source)) == f
    with pytest.raises(ValueError, match="boundary mismatch"):
        compose_functors(f, f)


def test_vertical_composition_of_random_transformations() -> None:
    rng = random.Random(7)
    for _ in range(5):
        _, _, f, g, alpha = catalog.random_transformation_triple(rng)
        composite = vertical_compose(identity_transformation(g), alpha)
        assert dict(composite.components) == dict(alpha.components)
        composite = vertical_compose(alpha, identity_transformation(f))
        assert dict(composite.components) == dict(alpha.components)

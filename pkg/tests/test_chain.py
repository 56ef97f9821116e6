from __future__ import annotations

import random
from types import MappingProxyType

import pytest

from cat2chain import catalog
from cat2chain.chain import (
    BasedVectorSpace,
    ChainComplex,
    ChainComplexError,
    DegreeOutOfRangeError,
    alternating_complex,
    betti,
    format_betti,
    free_simplicial_vector_space,
    graph_matrix,
    identity_chain_map,
    normalization_map,
    reliable_top,
    verify_chain_map,
    verify_homotopy,
    zero_homotopy,
)
from cat2chain.chfunctor import ch_category
from cat2chain.fincat import FinCategory
from cat2chain.nerve import nerve
from cat2chain.ratlinalg import Matrix


def test_graph_matrix_places_ones_by_table() -> None:
    assert graph_matrix((1, 0, 1), 2) == Matrix.from_rows([[0, 1, 0], [1, 0, 1]])


def test_walking_arrow_boundary() -> None:
    complex_ = alternating_complex(free_simplicial_vector_space(nerve(catalog.walking_arrow(), 2)))
    assert complex_.spaces[0].basis_labels == ("x", "y")
    assert complex_.boundary(1) == Matrix.from_rows([[-1, 0, 0], [1, 0, 0]])
    assert complex_.square_defects() == []
    assert complex_.boundary(0).shape == (0, 2)
    assert complex_.boundary(3).shape == (4, 0)


@pytest.mark.parametrize(
    ("category", "expected"),
    [
        (catalog.walking_arrow(), [1, 0, 0, 0]),
        (catalog.discrete(3), [3, 0, 0, 0]),
        (catalog.cyclic_group(2), [1, 0, 0, 0]),
        (catalog.commutative_square(), [1, 0, 0, 0]),
    ],
)
def test_betti_numbers_at_truncation_five(category: FinCategory, expected: list[int]) -> None:
    result = ch_category(category, 5)
    assert betti(result.complex, 3) == expected
    assert betti(result.normalized, 3) == expected


def test_betti_of_terminal_category() -> None:
    assert betti(ch_category(catalog.terminal(), 4).complex, 2) == [1, 0, 0]


def test_betti_refuses_undetermined_degrees() -> None:
    complex_ = ch_category(catalog.walking_arrow(), 4).complex
    assert reliable_top(complex_) == 3
    assert betti(complex_, 3) == [1, 0, 0, 0]
    with pytest.raises(DegreeOutOfRangeError, match="reliable up to degree 3"):
        betti(complex_, 4)
    with pytest.warns(UserWarning, match="not determined"):
        assert len(betti(complex_, 4, strict=False)) == 5
    with pytest.raises(DegreeOutOfRangeError, match="outside"):
        betti(complex_, 5, strict=False)


def test_format_betti() -> None:
    assert format_betti([1, 0, 0], 3) == "b0=1 b1=0 b2=0 (b3=?)"
    assert format_betti([3]) == "b0=3"


def test_normalized_complex_drops_degenerate_chains() -> None:
    result = ch_category(catalog.walking_arrow(), 3)
    assert result.normalized.dims() == [2, 1, 0, 0]
    assert result.normalized.spaces[1].basis_labels == ("(f)",)
    projection = normalization_map(result.complex, result.degenerate)
    assert verify_chain_map(projection).ok


def test_cyclic_group_normalized_dims() -> None:
    result = ch_category(catalog.cyclic_group(2), 4)
    assert result.normalized.dims() == [1, 1, 1, 1, 1]
    assert result.complex.dims() == [1, 2, 4, 8, 16]


def test_square_defect_is_reported() -> None:
    spaces = tuple(BasedVectorSpace((f"v{n}",)) for n in range(3))
    one = Matrix.identity(1)
    bad = ChainComplex(spaces, MappingProxyType({1: one, 2: one}))
    assert bad.square_defects() == [2]
    with pytest.raises(ChainComplexError, match="degree"):
        bad.verify()


def test_boundary_shapes_are_checked() -> None:
    spaces = (BasedVectorSpace(("a",)), BasedVectorSpace(("b", "c")))
    with pytest.raises(ValueError, match="boundary in degree 1"):
        ChainComplex(spaces, MappingProxyType({1: Matrix.zeros(2, 1)}))


def test_chain_complex_document_round_trip() -> None:
    complex_ = ch_category(catalog.commutative_square(), 3).complex
    doc = complex_.to_document()
    assert doc["top"] == 3
    assert ChainComplex.from_document(doc) == complex_


def test_identity_map_and_zero_homotopy() -> None:
    complex_ = ch_category(catalog.cyclic_group(2), 3).complex
    ident = identity_chain_map(complex_)
    assert verify_chain_map(ident).ok
    assert ident.compose(ident) == ident
    verdict = verify_homotopy(zero_homotopy(ident, ident))
    assert verdict.ok
    assert str(verdict) == "Ok"


def test_based_space_labels_are_unique() -> None:
    with pytest.raises(ValueError, match="unique"):
        BasedVectorSpace(("a", "a"))


@pytest.mark.parametrize(
    "category",
    [
        catalog.walking_arrow(),
        catalog.commutative_square(),
        catalog.discrete(3),
        catalog.cyclic_group(2),
        catalog.cyclic_group(3),
        catalog.random_poset(4, random.Random(5)),
    ],
)
def test_boundaries_square_to_zero_at_truncation_five(category: FinCategory) -> None:
    result = ch_category(category, 5)
    assert result.complex.square_defects() == []
    assert result.normalized.square_defects() == []


def test_cyclic_group_normalized_boundaries_alternate() -> None:
    normalized = ch_category(catalog.cyclic_group(2), 5).normalized

    assert normalized.dims() == [1, 1, 1, 1, 1, 1]
    for n in range(1, 6):
        assert normalized.boundary(n) == Matrix.from_rows([[0 if n % 2 else 2]])


def test_terminal_category_boundaries() -> None:
    complex_ = ch_category(catalog.terminal(), 4).complex

    for n in range(1, 5):
        assert complex_.boundary(n) == Matrix.from_rows([[0 if n % 2 else 1]])


def test_boundary_of_a_composable_pair() -> None:
    f, g = catalog.order_morphism("0", "1"), catalog.order_morphism("1", "2")
    gf = catalog.order_morphism("0", "2")
    result = ch_category(catalog.total_order(2), 2)

    column = result.complex.boundary(2).column(result.index(2, (f, g)))

    nonzero = {k: v for k, v in enumerate(column) if v}
    assert nonzero == {result.index(1, (g,)): 1, result.index(1, (gf,)): -1, result.index(1, (f,)): 1}

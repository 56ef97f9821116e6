"""The composite Ch = alternating complex o free vector space o nerve.

Categories go to chain complexes, functors to chain maps and natural
transformations to chain homotopies built from the prism decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chain import (
    ChainComplex,
    ChainHomotopy,
    ChainMap,
    SimplicialVectorSpace,
    Verdict,
    alternating_complex,
    free_simplicial_vector_space,
    graph_matrix,
    homotopy_defects,
    normalize,
    normalize_chain_map,
    normalize_homotopy,
    verify_homotopy,
)
from .fincat import FinCategory, Functor, NatTransf, vertical_compose
from .nerve import SimplicialSetTrunc, Simplex, format_simplex, is_degenerate_chain, nerve, nerve_of_functor
from .ratlinalg import Matrix


@dataclass(frozen=True, eq=False)
class ChResult:
    category: FinCategory
    truncation: int
    nerve: SimplicialSetTrunc
    free: SimplicialVectorSpace
    complex: ChainComplex
    normalized: ChainComplex
    degenerate: tuple[tuple[bool, ...], ...]

    def index(self, n: int, simplex: Simplex) -> int:
        """Basis position of a chain (or object id in degree 0)."""
        return self.nerve.index_of(n, simplex)


def ch_category(c: FinCategory, trunc: int) -> ChResult:
    if trunc < 2:
        raise ValueError("truncation must be at least 2")
    n_c = nerve(c, trunc)
    free = free_simplicial_vector_space(n_c)
    complex_ = alternating_complex(free)
    degenerate = tuple(
        tuple(is_degenerate_chain(c, s) for s in n_c.simplices[n]) for n in range(trunc + 1)
    )
    return ChResult(c, trunc, n_c, free, complex_, normalize(complex_, degenerate), degenerate)


def ch_functor(
    f: Functor, trunc: int, source: ChResult | None = None, target: ChResult | None = None
) -> ChainMap:
    """Degree n is the linearized ``N(F)[n]``."""
    source = source or ch_category(f.source, trunc)
    target = target or ch_category(f.target, trunc)
    induced = nerve_of_functor(f, trunc, source.nerve, target.nerve)
    return ChainMap(
        source.complex,
        target.complex,
        tuple(graph_matrix(table, target.nerve.count(n)) for n, table in enumerate(induced.components)),
    )


def prism_terms(a: NatTransf, simplex: Simplex) -> list[tuple[int, tuple[str, ...]]]:
    """Signed (n+1)-chains ``F f_1 .. F f_i, alpha_{x_i}, G f_{i+1} .. G f_n``."""
    F, G = a.source, a.target
    if isinstance(simplex, str):
        return [(1, (a.components[simplex],))]
    chain = tuple(simplex)  # type: ignore[arg-type]
    c = F.source
    vertices = [c.src(chain[0])] + [c.tgt(m) for m in chain]
    terms = []
    for i in range(len(chain) + 1):
        term = (
            tuple(F.mor_map[m] for m in chain[:i])
            + (a.components[vertices[i]],)
            + tuple(G.mor_map[m] for m in chain[i:])
        )
        terms.append((-1 if i % 2 else 1, term))
    return terms


def prism_pair(a: NatTransf, f: str) -> tuple[tuple[str, str], tuple[str, str]]:
    """``(B, A)`` for a morphism ``f: x -> y``: ``B = (alpha_x, G f)``, ``A = (F f, alpha_y)``."""
    (_, b), (_, a_term) = prism_terms(a, (f,))
    return b, a_term  # type: ignore[return-value]


def _homotopy_component(a: NatTransf, n: int, source: ChResult, target: ChResult) -> Matrix:
    rows, cols = target.nerve.count(n + 1), source.nerve.count(n)
    entries = [[Fraction(0)] * cols for _ in range(rows)]
    for col, simplex in enumerate(source.nerve.simplices[n]):
        for sign, term in prism_terms(a, simplex):
            entries[target.index(n + 1, term)][col] += sign
    return Matrix.from_rows(entries, cols=cols)


def ch_nat_transf(
    a: NatTransf, trunc: int, source: ChResult | None = None, target: ChResult | None = None
) -> ChainHomotopy:
    """Homotopy ``h`` with ``delta h + h delta = Ch(G) - Ch(F)`` in every degree below ``trunc``."""
    if trunc < 2:
        raise ValueError("truncation must be at least 2")
    source = source or ch_category(a.source.source, trunc)
    target = target or ch_category(a.source.target, trunc)
    ch_f = ch_functor(a.source, trunc, source, target)
    ch_g = ch_functor(a.target, trunc, source, target)
    return ChainHomotopy(
        ch_g, ch_f, tuple(_homotopy_component(a, n, source, target) for n in range(trunc))
    )


def normalized_homotopy(h: ChainHomotopy, source: ChResult, target: ChResult) -> ChainHomotopy:
    return normalize_homotopy(h, source.degenerate, target.degenerate)


def normalized_chain_map(m: ChainMap, source: ChResult, target: ChResult) -> ChainMap:
    return normalize_chain_map(m, source.degenerate, target.degenerate)


def vertical_composition_defect(alpha: NatTransf, beta: NatTransf, trunc: int) -> Verdict:
    """Check ``Ch(beta . alpha) - (Ch(alpha) + Ch(beta))`` is a cycle for ``delta h + h delta``."""
    source = ch_category(alpha.source.source, trunc)
    target = ch_category(alpha.source.target, trunc)
    composite = ch_nat_transf(vertical_compose(beta, alpha), trunc, source, target)
    first = ch_nat_transf(alpha, trunc, source, target)
    second = ch_nat_transf(beta, trunc, source, target)
    difference = tuple(
        composite.components[n] - first.components[n] - second.components[n] for n in range(trunc)
    )
    return verify_homotopy(ChainHomotopy(composite.f, composite.f, difference))


@dataclass(frozen=True)
class TranscriptRow:
    degree: int
    defect_nonzero: int
    verdict: str


def homotopy_transcript(h: ChainHomotopy) -> list[TranscriptRow]:
    return [
        TranscriptRow(n, defect.nonzero_count(), "Ok" if defect.is_zero() else "Violation")
        for n, defect in homotopy_defects(h)
    ]


@dataclass(frozen=True)
class PrismRow:
    morphism: str
    b: str
    a: str
    entries: tuple[tuple[str, int], ...]


def prism_decomposition(a: NatTransf, h: ChainHomotopy, source: ChResult, target: ChResult) -> list[PrismRow]:
    """``h_1`` on each morphism next to its ``B - A`` reading."""
    rows: list[PrismRow] = []
    component = h.component(1)
    labels = target.complex.spaces[2].basis_labels
    for col, simplex in enumerate(source.nerve.simplices[1]):
        (f,) = simplex  # type: ignore[misc]
        b, a_term = prism_pair(a, f)
        nonzero = tuple(
            (labels[r], int(component[r, col])) for r in range(component.rows) if component[r, col]
        )
        rows.append(PrismRow(f, format_simplex(b), format_simplex(a_term), nonzero))
    return rows

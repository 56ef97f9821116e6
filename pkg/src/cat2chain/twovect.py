"""Reflexive graphs internal to Vect, 2-vector spaces and the Eckmann-Hilton checker."""

from __future__ import annotations

import itertools
import random
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType

from tqdm import tqdm

from .ratlinalg import (
    AffineSolution,
    Matrix,
    SolutionKind,
    Vector,
    format_vector,
    kernel_basis,
    solve_affine,
)


class GraphError(ValueError):
    """Raised for malformed reflexive graphs or graph morphisms."""


class NotComposableError(ValueError):
    """Raised when ``s(g) != t(f)``; carries both boundary vectors."""

    def __init__(self, source_of_g: Vector, target_of_f: Vector) -> None:
        self.source_of_g = source_of_g
        self.target_of_f = target_of_f
        super().__init__(
            f"Not composable: s(g) = {format_vector(source_of_g)} but t(f) = {format_vector(target_of_f)}"
        )


@dataclass(frozen=True)
class ReflexiveVectGraph:
    """``s, t: C1 -> C0`` and ``i: C0 -> C1`` with ``s i = t i = id``."""

    dim0: int
    dim1: int
    s: Matrix
    t: Matrix
    i: Matrix

    def __post_init__(self) -> None:
        if self.s.shape != (self.dim0, self.dim1) or self.t.shape != (self.dim0, self.dim1):
            raise GraphError(f"s and t must be {self.dim0}x{self.dim1}")
        if self.i.shape != (self.dim1, self.dim0):
            raise GraphError(f"i must be {self.dim1}x{self.dim0}")
        ident = Matrix.identity(self.dim0)
        if self.s @ self.i != ident:
            raise GraphError("s o i must be the identity on C0")
        if self.t @ self.i != ident:
            raise GraphError("t o i must be the identity on C0")

    def source(self, f: Sequence[Fraction]) -> Vector:
        return self.s.apply(f)

    def target(self, f: Sequence[Fraction]) -> Vector:
        return self.t.apply(f)

    def ident(self, x: Sequence[Fraction]) -> Vector:
        return self.i.apply(x)


def _check_dim(g: ReflexiveVectGraph, f: Sequence[Fraction]) -> None:
    if len(f) != g.dim1:
        raise ValueError(f"Dimension mismatch: expected a vector of length {g.dim1}, got {len(f)}")


def arrow_part(g: ReflexiveVectGraph, f: Sequence[Fraction]) -> Vector:
    """``f - i(s(f))``: the morphism translated to start at 0."""
    _check_dim(g, f)
    base = g.ident(g.source(f))
    return tuple(a - b for a, b in zip(f, base, strict=True))


def diamond(g: ReflexiveVectGraph, gmor: Sequence[Fraction], fmor: Sequence[Fraction]) -> Vector:
    """``g <> f = f^ + g^ + i(s(f))``, defined when ``s(g) = t(f)``."""
    _check_dim(g, gmor)
    _check_dim(g, fmor)
    sg, tf = g.source(gmor), g.target(fmor)
    if sg != tf:
        raise NotComposableError(sg, tf)
    f_hat = arrow_part(g, fmor)
    g_hat = arrow_part(g, gmor)
    base = g.ident(g.source(fmor))
    return tuple(a + b + c for a, b, c in zip(f_hat, g_hat, base, strict=True))


def _pullback_constraint(g: ReflexiveVectGraph) -> Matrix:
    """``(g, f) |-> s(g) - t(f)`` on ``C1 (+) C1``."""
    return g.s.hstack(-g.t)


def pullback_basis(g: ReflexiveVectGraph) -> list[Vector]:
    return kernel_basis(_pullback_constraint(g))


def diamond_on_pairs(g: ReflexiveVectGraph) -> Matrix:
    """The linear map ``(g, f) |-> g + f - i s g`` on ``C1 (+) C1``.

    On the pullback it agrees with ``g <> f``.
    """
    return (Matrix.identity(g.dim1) - g.i @ g.s).hstack(Matrix.identity(g.dim1))


def _pullback_matrix(g: ReflexiveVectGraph, basis: Sequence[Vector]) -> Matrix:
    return Matrix.from_columns(basis, rows=2 * g.dim1)


@dataclass(frozen=True)
class TwoVectSpace:
    """A reflexive graph with a linear composition on the pullback.

    ``compose`` is expressed in the coordinates of ``pullback_basis``.
    """

    graph: ReflexiveVectGraph
    pullback_basis: tuple[Vector, ...]
    compose: Matrix

    def coordinates(self, gmor: Sequence[Fraction], fmor: Sequence[Fraction]) -> Vector:
        pair = tuple(gmor) + tuple(fmor)
        basis = _pullback_matrix(self.graph, self.pullback_basis)
        result = solve_affine([(basis, pair)], unknowns=len(self.pullback_basis))
        if result.kind is not SolutionKind.UNIQUE or result.solution is None:
            raise NotComposableError(self.graph.source(gmor), self.graph.target(fmor))
        return result.solution

    def compose_pair(self, gmor: Sequence[Fraction], fmor: Sequence[Fraction]) -> Vector:
        return self.compose.apply(self.coordinates(gmor, fmor))


def diamond_matrix(g: ReflexiveVectGraph, basis: Sequence[Vector] | None = None) -> Matrix:
    """The ``<>`` composition in pullback coordinates."""
    basis = pullback_basis(g) if basis is None else basis
    return diamond_on_pairs(g) @ _pullback_matrix(g, basis)


@dataclass(frozen=True)
class CompositionReport:
    """Outcome of solving the unit laws for a linear composition."""

    solution: AffineSolution
    space: TwoVectSpace | None
    equals_diamond: bool | None

    @property
    def unique(self) -> bool:
        return self.solution.kind is SolutionKind.UNIQUE

    def summary(self) -> str:
        text = str(self.solution)
        if self.equals_diamond is not None:
            text += f"; equals diamond: {'yes' if self.equals_diamond else 'no'}"
        return text


def _unit_law_pairs(g: ReflexiveVectGraph) -> list[tuple[Vector, Vector]]:
    """``(f, i s f) -> f`` and ``(i t f, f) -> f`` for every basis vector ``f``."""
    pairs: list[tuple[Vector, Vector]] = []
    for j in range(g.dim1):
        f = tuple(Fraction(int(k == j)) for k in range(g.dim1))
        pairs.append((f + g.ident(g.source(f)), f))
        pairs.append((g.ident(g.target(f)) + f, f))
    return pairs


def solve_composition(g: ReflexiveVectGraph) -> CompositionReport:
    """Solve for every linear composition obeying the unit laws.

    The unknown is the ``dim1 x k`` compose matrix in pullback coordinates,
    flattened row-major. Only the unit laws are imposed.
    """
    basis = pullback_basis(g)
    k = len(basis)
    unknowns = g.dim1 * k
    basis_matrix = _pullback_matrix(g, basis)

    constraints: list[tuple[Matrix, Vector]] = []
    for pair, value in _unit_law_pairs(g):
        coords = solve_affine([(basis_matrix, pair)], unknowns=k).solution
        assert coords is not None
        rows = [[Fraction(0)] * unknowns for _ in range(g.dim1)]
        for a in range(g.dim1):
            for b in range(k):
                rows[a][a * k + b] = coords[b]
        constraints.append((Matrix.from_rows(rows, cols=unknowns), value))

    solution = solve_affine(constraints, unknowns=unknowns)
    if solution.kind is not SolutionKind.UNIQUE or solution.solution is None:
        return CompositionReport(solution, None, None)

    compose = Matrix(g.dim1, k, solution.solution) if k else Matrix.zeros(g.dim1, 0)
    space = TwoVectSpace(g, tuple(basis), compose)
    return CompositionReport(solution, space, compose == diamond_matrix(g, basis))


def graph_to_category(g: ReflexiveVectGraph) -> TwoVectSpace:
    basis = pullback_basis(g)
    return TwoVectSpace(g, tuple(basis), diamond_matrix(g, basis))


def category_to_graph(c: TwoVectSpace) -> ReflexiveVectGraph:
    return c.graph


def verify_two_vect(c: TwoVectSpace) -> list[str]:
    """Check every 2-vector-space axiom on bases; returns the failures."""
    g = c.graph
    failures: list[str] = []
    constraint = _pullback_constraint(g)
    for index, v in enumerate(c.pullback_basis):
        if any(constraint.apply(v)):
            failures.append(f"pullback basis vector {index} is not composable")
    if c.compose.shape != (g.dim1, len(c.pullback_basis)):
        return failures + ["compose matrix has the wrong shape"]

    for pair, value in _unit_law_pairs(g):
        gmor, fmor = pair[: g.dim1], pair[g.dim1 :]
        if c.compose_pair(gmor, fmor) != value:
            failures.append(f"unit law fails on {format_vector(value)}")

    for v in c.pullback_basis:
        gmor, fmor = v[: g.dim1], v[g.dim1 :]
        result = c.compose.apply(c.coordinates(gmor, fmor))
        if g.source(result) != g.source(fmor):
            failures.append(f"source of composite differs from s(f) on {format_vector(v)}")
        if g.target(result) != g.target(gmor):
            failures.append(f"target of composite differs from t(g) on {format_vector(v)}")

    zero = Matrix.zeros(g.dim0, g.dim1)
    triple = g.s.hstack(-g.t).hstack(zero).vstack(zero.hstack(g.s).hstack(-g.t))
    for v in kernel_basis(triple):
        h, gm, f = v[: g.dim1], v[g.dim1 : 2 * g.dim1], v[2 * g.dim1 :]
        left = c.compose_pair(h, c.compose_pair(gm, f))
        right = c.compose_pair(c.compose_pair(h, gm), f)
        if left != right:
            failures.append(f"associativity fails on {format_vector(v)}")
    return failures


@dataclass(frozen=True)
class GraphMorphism:
    """Linear ``f0: C0 -> D0`` and ``f1: C1 -> D1`` commuting with s, t and i."""

    source: ReflexiveVectGraph
    target: ReflexiveVectGraph
    f0: Matrix
    f1: Matrix

    def __post_init__(self) -> None:
        src, tgt = self.source, self.target
        if self.f0.shape != (tgt.dim0, src.dim0) or self.f1.shape != (tgt.dim1, src.dim1):
            raise GraphError("graph morphism components have the wrong shape")
        if tgt.s @ self.f1 != self.f0 @ src.s:
            raise GraphError("graph morphism does not commute with s")
        if tgt.t @ self.f1 != self.f0 @ src.t:
            raise GraphError("graph morphism does not commute with t")
        if self.f1 @ src.i != tgt.i @ self.f0:
            raise GraphError("graph morphism does not commute with i")


def morphism_preserves_diamond(m: GraphMorphism) -> bool:
    """Every reflexive-graph morphism is a functor for the ``<>`` compositions."""
    src, tgt = m.source, m.target
    for v in pullback_basis(src):
        gmor, fmor = v[: src.dim1], v[src.dim1 :]
        image = m.f1.apply(diamond(src, gmor, fmor))
        if image != diamond(tgt, m.f1.apply(gmor), m.f1.apply(fmor)):
            return False
    return True


class MagmaError(ValueError):
    """Raised when a magma pair's tables are not total or its units fail."""


class EckmannHiltonFailure(RuntimeError):
    """An interchange-satisfying pair that does not collapse to one commutative operation."""


Table = Mapping[tuple[str, str], str]


@dataclass(frozen=True)
class MagmaPair:
    carrier: tuple[str, ...]
    op1: Table
    op2: Table
    unit1: str
    unit2: str

    def __post_init__(self) -> None:
        elements = set(self.carrier)
        if len(elements) != len(self.carrier):
            raise MagmaError("carrier elements must be unique")
        for name, table, unit in (("op1", self.op1, self.unit1), ("op2", self.op2, self.unit2)):
            if unit not in elements:
                raise MagmaError(f"{name} unit {unit!r} is not in the carrier")
            for a, b in itertools.product(self.carrier, repeat=2):
                value = table.get((a, b))
                if value is None:
                    raise MagmaError(f"{name} is not total: missing ({a}, {b})")
                if value not in elements:
                    raise MagmaError(f"{name}({a}, {b}) = {value!r} is not in the carrier")
            for a in self.carrier:
                if table[(unit, a)] != a or table[(a, unit)] != a:
                    raise MagmaError(f"{unit} is not a two-sided unit for {name}")


@dataclass(frozen=True)
class EckmannHiltonResult:
    confirmed: bool
    unit: str | None = None
    witness: tuple[str, str, str, str] | None = None

    def summary(self) -> str:
        if self.confirmed:
            return f"Confirmed: operations coincide and commute; unit {self.unit}"
        a, b, c, d = self.witness or ("?", "?", "?", "?")
        return f"InterchangeViolation: ({a} + {b}) o ({c} + {d}) != {a} o {c} + {b} o {d}"


def interchange_witness(p: MagmaPair) -> tuple[str, str, str, str] | None:
    """First quadruple breaking ``(a + b) o (c + d) = a o c + b o d``."""
    plus, circ = p.op1, p.op2
    for a, b, c, d in itertools.product(p.carrier, repeat=4):
        if circ[(plus[(a, b)], plus[(c, d)])] != plus[(circ[(a, c)], circ[(b, d)])]:
            return a, b, c, d
    return None


def eckmann_hilton_check(p: MagmaPair) -> EckmannHiltonResult:
    witness = interchange_witness(p)
    if witness is not None:
        return EckmannHiltonResult(False, witness=witness)
    if p.unit1 != p.unit2:
        raise EckmannHiltonFailure(f"interchange holds but units differ: {p.unit1} != {p.unit2}")
    for a, b in itertools.product(p.carrier, repeat=2):
        if p.op1[(a, b)] != p.op2[(a, b)]:
            raise EckmannHiltonFailure(f"interchange holds but operations differ at ({a}, {b})")
        if p.op1[(a, b)] != p.op1[(b, a)]:
            raise EckmannHiltonFailure(f"interchange holds but ({a}, {b}) does not commute")
    return EckmannHiltonResult(True, unit=p.unit1)


def unital_tables(carrier: Sequence[str], unit: str) -> Iterator[Table]:
    """Every total binary table on ``carrier`` with ``unit`` as two-sided unit."""
    others = [x for x in carrier if x != unit]
    cells = list(itertools.product(others, repeat=2))
    for values in itertools.product(carrier, repeat=len(cells)):
        table: dict[tuple[str, str], str] = {}
        for x in carrier:
            table[(unit, x)] = x
            table[(x, unit)] = x
        table.update(zip(cells, values, strict=True))
        yield MappingProxyType(table)


@dataclass(frozen=True)
class SweepSummary:
    carrier_size: int
    pairs_checked: int
    interchange_pairs: int
    confirmed: int

    @property
    def counterexamples(self) -> int:
        return self.interchange_pairs - self.confirmed


MAX_EXHAUSTIVE_SIZE = 3


def _carrier(size: int) -> tuple[str, ...]:
    return tuple(str(k) for k in range(size))


def exhaustive_eckmann_hilton(size: int, *, progress: bool = False) -> SweepSummary:
    """Check every pair of unital tables, for every choice of the two units."""
    if size < 1 or size > MAX_EXHAUSTIVE_SIZE:
        raise ValueError(f"exhaustive Eckmann-Hilton sweeps support carrier sizes 1 to {MAX_EXHAUSTIVE_SIZE}")
    carrier = _carrier(size)
    tables = {unit: list(unital_tables(carrier, unit)) for unit in carrier}
    configurations = list(itertools.product(carrier, repeat=2))
    checked = holding = confirmed = 0
    for unit1, unit2 in tqdm(configurations, desc=f"Eckmann-Hilton size {size}", disable=not progress):
        for op1 in tables[unit1]:
            for op2 in tables[unit2]:
                checked += 1
                result = eckmann_hilton_check(MagmaPair(carrier, op1, op2, unit1, unit2))
                if result.witness is None:
                    holding += 1
                    confirmed += int(result.confirmed)
    return SweepSummary(size, checked, holding, confirmed)


def _random_unital_table(carrier: Sequence[str], unit: str, rng: random.Random) -> Table:
    table: dict[tuple[str, str], str] = {}
    for a, b in itertools.product(carrier, repeat=2):
        if a == unit:
            table[(a, b)] = b
        elif b == unit:
            table[(a, b)] = a
        else:
            table[(a, b)] = rng.choice(carrier)
    return MappingProxyType(table)


def sampled_eckmann_hilton(
    size: int, samples: int, rng: random.Random, *, progress: bool = False
) -> SweepSummary:
    """Random unital table pairs for carriers too large to enumerate."""
    carrier = _carrier(size)
    holding = confirmed = 0
    for _ in tqdm(range(samples), desc=f"Eckmann-Hilton sampled size {size}", disable=not progress):
        unit1, unit2 = rng.choice(carrier), rng.choice(carrier)
        op1 = _random_unital_table(carrier, unit1, rng)
        # Reuse op1 half the time when the units agree.
        op2 = op1 if unit1 == unit2 and rng.random() < 0.5 else _random_unital_table(carrier, unit2, rng)
        result = eckmann_hilton_check(MagmaPair(carrier, op1, op2, unit1, unit2))
        if result.witness is None:
            holding += 1
            confirmed += int(result.confirmed)
    return SweepSummary(size, samples, holding, confirmed)

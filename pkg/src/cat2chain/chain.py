"""Chain complexes over Q: free simplicial vector spaces, alternating and
normalized complexes, Betti numbers, chain maps and chain homotopies.

Degrees run from 0 to ``top``; boundaries outside ``1..top`` are zero maps of
the right shape, so identities can be checked uniformly at the edges.
"""

from __future__ import annotations

import warnings
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from types import MappingProxyType

from .nerve import SimplicialSetTrunc, format_simplex
from .ratlinalg import Matrix, format_rational, rank

Flags = Sequence[Sequence[bool]]


class ChainComplexError(ValueError):
    """A boundary composite is not zero."""


class DegreeOutOfRangeError(ValueError):
    """Homology requested in a degree the truncation does not determine."""


@dataclass(frozen=True)
class BasedVectorSpace:
    basis_labels: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(set(self.basis_labels)) != len(self.basis_labels):
            raise ValueError("basis labels must be unique")

    @property
    def dimension(self) -> int:
        return len(self.basis_labels)

    def index(self, label: str) -> int:
        return self.basis_labels.index(label)


@dataclass(frozen=True, eq=False)
class SimplicialVectorSpace:
    simplicial_set: SimplicialSetTrunc
    spaces: tuple[BasedVectorSpace, ...]
    face_matrices: Mapping[tuple[int, int], Matrix]
    degeneracy_matrices: Mapping[tuple[int, int], Matrix]


def graph_matrix(table: Sequence[int], rows: int) -> Matrix:
    """0/1 matrix of a function between finite sets: column j has a 1 in row ``table[j]``."""
    cols = len(table)
    entries = [0] * (rows * cols)
    for j, target in enumerate(table):
        entries[target * cols + j] = 1
    return Matrix.from_rows([entries[r * cols : (r + 1) * cols] for r in range(rows)], cols=cols)


def free_simplicial_vector_space(s: SimplicialSetTrunc) -> SimplicialVectorSpace:
    spaces = tuple(
        BasedVectorSpace(tuple(format_simplex(x) for x in s.simplices[n])) for n in range(s.max_dim + 1)
    )
    faces = {key: graph_matrix(table, s.count(key[0] - 1)) for key, table in s.faces.items()}
    degeneracies = {key: graph_matrix(table, s.count(key[0] + 1)) for key, table in s.degeneracies.items()}
    return SimplicialVectorSpace(s, spaces, MappingProxyType(faces), MappingProxyType(degeneracies))


@dataclass(frozen=True, eq=False)
class ChainComplex:
    spaces: tuple[BasedVectorSpace, ...]
    boundaries: Mapping[int, Matrix]

    def __post_init__(self) -> None:
        for n in range(1, self.top + 1):
            matrix = self.boundaries.get(n)
            expected = (self.dim(n - 1), self.dim(n))
            if matrix is None or matrix.shape != expected:
                raise ValueError(f"boundary in degree {n} must be a {expected[0]}x{expected[1]} matrix")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChainComplex):
            return NotImplemented
        return self.spaces == other.spaces and dict(self.boundaries) == dict(other.boundaries)

    @property
    def top(self) -> int:
        return len(self.spaces) - 1

    def dim(self, n: int) -> int:
        return self.spaces[n].dimension if 0 <= n <= self.top else 0

    def dims(self) -> list[int]:
        return [space.dimension for space in self.spaces]

    def boundary(self, n: int) -> Matrix:
        """``delta_n``; the zero map outside ``1..top``."""
        if 1 <= n <= self.top:
            return self.boundaries[n]
        return Matrix.zeros(self.dim(n - 1), self.dim(n))

    def square_defects(self) -> list[int]:
        """Degrees n with ``delta_{n-1} delta_n != 0``."""
        return [n for n in range(2, self.top + 1) if not (self.boundary(n - 1) @ self.boundary(n)).is_zero()]

    def verify(self) -> None:
        bad = self.square_defects()
        if bad:
            raise ChainComplexError(f"delta o delta != 0 in degree(s) {', '.join(map(str, bad))}")

    def to_document(self) -> dict[str, object]:
        return {
            "top": self.top,
            "bases": [list(space.basis_labels) for space in self.spaces],
            "boundaries": [
                {
                    "degree": n,
                    "shape": list(self.boundaries[n].shape),
                    "rows": [[format_rational(v) for v in row] for row in self.boundaries[n].to_rows()],
                }
                for n in range(1, self.top + 1)
            ],
        }

    @classmethod
    def from_document(cls, doc: Mapping[str, object]) -> ChainComplex:
        bases = doc["bases"]
        spaces = tuple(BasedVectorSpace(tuple(str(label) for label in labels)) for labels in bases)  # type: ignore[union-attr]
        boundaries: dict[int, Matrix] = {}
        for entry in doc.get("boundaries", []):  # type: ignore[union-attr]
            rows, cols = entry["shape"]
            matrix = Matrix.from_rows(entry["rows"], cols=cols)
            if matrix.rows != rows:
                raise ValueError(f"boundary in degree {entry['degree']} has {matrix.rows} rows, expected {rows}")
            boundaries[int(entry["degree"])] = matrix
        complex_ = cls(spaces, MappingProxyType(boundaries))
        complex_.verify()
        return complex_


def alternating_complex(sv: SimplicialVectorSpace) -> ChainComplex:
    """``delta_n = sum_{i=0}^{n} (-1)^i d_i``."""
    top = len(sv.spaces) - 1
    boundaries: dict[int, Matrix] = {}
    for n in range(1, top + 1):
        total = Matrix.zeros(sv.spaces[n - 1].dimension, sv.spaces[n].dimension)
        for i in range(n + 1):
            face = sv.face_matrices[(n, i)]
            total = total + face if i % 2 == 0 else total - face
        boundaries[n] = total
    complex_ = ChainComplex(sv.spaces, MappingProxyType(boundaries))
    complex_.verify()
    return complex_


def _kept(flags: Sequence[bool]) -> list[int]:
    return [k for k, degenerate in enumerate(flags) if not degenerate]


def _projection(flags: Sequence[bool]) -> Matrix:
    return Matrix.selection(_kept(flags), len(flags))


def normalize(c: ChainComplex, degenerate: Flags) -> ChainComplex:
    """Quotient by the span of degenerate basis elements."""
    if len(degenerate) != c.top + 1:
        raise ValueError("need degeneracy flags for every degree")
    spaces = tuple(
        BasedVectorSpace(tuple(c.spaces[n].basis_labels[k] for k in _kept(degenerate[n])))
        for n in range(c.top + 1)
    )
    boundaries = {
        n: _projection(degenerate[n - 1]) @ c.boundary(n) @ _projection(degenerate[n]).transpose()
        for n in range(1, c.top + 1)
    }
    normalized = ChainComplex(spaces, MappingProxyType(boundaries))
    normalized.verify()
    return normalized


@dataclass(frozen=True, eq=False)
class ChainMap:
    source: ChainComplex
    target: ChainComplex
    components: tuple[Matrix, ...]

    def __post_init__(self) -> None:
        if len(self.components) != min(self.source.top, self.target.top) + 1:
            raise ValueError("chain map needs one component per shared degree")
        for n, component in enumerate(self.components):
            if component.shape != (self.target.dim(n), self.source.dim(n)):
                raise ValueError(f"chain map component {n} has shape {component.shape}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChainMap):
            return NotImplemented
        return self.components == other.components

    @property
    def top(self) -> int:
        return len(self.components) - 1

    def component(self, n: int) -> Matrix:
        if 0 <= n <= self.top:
            return self.components[n]
        return Matrix.zeros(self.target.dim(n), self.source.dim(n))

    def compose(self, first: ChainMap) -> ChainMap:
        """Return ``self o first`` degreewise."""
        top = min(self.top, first.top)
        return ChainMap(
            first.source, self.target, tuple(self.components[n] @ first.components[n] for n in range(top + 1))
        )


def identity_chain_map(c: ChainComplex) -> ChainMap:
    return ChainMap(c, c, tuple(Matrix.identity(c.dim(n)) for n in range(c.top + 1)))


def normalization_map(c: ChainComplex, degenerate: Flags) -> ChainMap:
    """Projection of ``c`` onto its normalized complex."""
    normalized = normalize(c, degenerate)
    return ChainMap(c, normalized, tuple(_projection(flags) for flags in degenerate))


@dataclass(frozen=True, eq=False)
class ChainHomotopy:
    """``alpha_n: source[n] -> target[n+1]`` with ``f_n - g_n = delta alpha_n + alpha_{n-1} delta``."""

    f: ChainMap
    g: ChainMap
    components: tuple[Matrix, ...]

    def __post_init__(self) -> None:
        if self.f.source != self.g.source:
            raise ValueError("homotopic maps must share a source")
        for n, component in enumerate(self.components):
            expected = (self.f.target.dim(n + 1), self.f.source.dim(n))
            if component.shape != expected:
                raise ValueError(f"homotopy component {n} has shape {component.shape}, expected {expected}")

    def component(self, n: int) -> Matrix:
        if 0 <= n < len(self.components):
            return self.components[n]
        return Matrix.zeros(self.f.target.dim(n + 1), self.f.source.dim(n))


def zero_homotopy(f: ChainMap, g: ChainMap) -> ChainHomotopy:
    return ChainHomotopy(
        f, g, tuple(Matrix.zeros(f.target.dim(n + 1), f.source.dim(n)) for n in range(f.top))
    )


@dataclass(frozen=True)
class Verdict:
    ok: bool
    degree: int | None = None
    defect: Matrix | None = None

    def __str__(self) -> str:
        return "Ok" if self.ok else f"Violation(degree {self.degree})"


def verify_chain_map(m: ChainMap) -> Verdict:
    for n in range(1, m.top + 1):
        defect = m.target.boundary(n) @ m.component(n) - m.component(n - 1) @ m.source.boundary(n)
        if not defect.is_zero():
            return Verdict(False, n, defect)
    return Verdict(True)


def homotopy_defects(h: ChainHomotopy) -> list[tuple[int, Matrix]]:
    """Per degree, ``f_n - g_n - (delta alpha_n + alpha_{n-1} delta_n)``."""
    src, tgt = h.f.source, h.f.target
    out: list[tuple[int, Matrix]] = []
    for n in range(len(h.components)):
        expected = h.f.component(n) - h.g.component(n)
        actual = tgt.boundary(n + 1) @ h.component(n) + h.component(n - 1) @ src.boundary(n)
        out.append((n, expected - actual))
    return out


def verify_homotopy(h: ChainHomotopy) -> Verdict:
    for n, defect in homotopy_defects(h):
        if not defect.is_zero():
            return Verdict(False, n, defect)
    return Verdict(True)


def normalize_chain_map(m: ChainMap, source_flags: Flags, target_flags: Flags) -> ChainMap:
    """Induced map on normalized complexes; ``m`` must send degenerate to degenerate."""
    source = normalize(m.source, source_flags)
    target = normalize(m.target, target_flags)
    return ChainMap(
        source,
        target,
        tuple(
            _projection(target_flags[n]) @ m.components[n] @ _projection(source_flags[n]).transpose()
            for n in range(m.top + 1)
        ),
    )


def normalize_homotopy(h: ChainHomotopy, source_flags: Flags, target_flags: Flags) -> ChainHomotopy:
    f = normalize_chain_map(h.f, source_flags, target_flags)
    g = normalize_chain_map(h.g, source_flags, target_flags)
    return ChainHomotopy(
        f,
        g,
        tuple(
            _projection(target_flags[n + 1]) @ h.components[n] @ _projection(source_flags[n]).transpose()
            for n in range(len(h.components))
        ),
    )


def reliable_top(c: ChainComplex) -> int:
    """Highest degree whose Betti number the truncation determines; ``delta_{top+1}`` is unknown."""
    return c.top - 1


def betti(c: ChainComplex, up_to: int, *, strict: bool = True) -> list[int]:
    """``b_n = dim ker delta_n - rank delta_{n+1}`` for ``n = 0..up_to``.

    Degrees above ``reliable_top`` raise unless ``strict`` is False, in which
    case they are computed with a warning.
    """
    if up_to < 0 or up_to > c.top:
        raise DegreeOutOfRangeError(f"degree {up_to} is outside 0..{c.top}")
    if up_to > reliable_top(c):
        if strict:
            raise DegreeOutOfRangeError(
                f"Betti numbers are reliable up to degree {reliable_top(c)} at truncation {c.top}"
            )
        warnings.warn(
            f"Betti numbers above degree {reliable_top(c)} are not determined by truncation {c.top}",
            stacklevel=2,
        )
    ranks = [rank(c.boundary(n)) for n in range(up_to + 2)]
    return [c.dim(n) - ranks[n] - ranks[n + 1] for n in range(up_to + 1)]


def format_betti(values: Sequence[int], unknown_degree: int | None = None) -> str:
    text = " ".join(f"b{n}={b}" for n, b in enumerate(values))
    if unknown_degree is not None:
        text = f"{text} (b{unknown_degree}=?)".lstrip()
    return text

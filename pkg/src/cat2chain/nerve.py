"""Truncated simplicial sets, nerves of finite categories and 2-coskeletality."""

from __future__ import annotations

from collections.abc import Hashable, Mapping, Sequence
from dataclasses import dataclass, field
from types import MappingProxyType

from .fincat import FinCategory, Functor

Simplex = Hashable
FaceKey = tuple[int, int]


@dataclass(frozen=True, eq=False)
class SimplicialSetTrunc:
    """Simplicial set truncated at ``max_dim``.

    ``faces[(n, i)]`` maps the index of each n-simplex to the index of its
    i-th face; ``degeneracies[(n, i)]`` maps n-simplices to (n+1)-simplices.
    Degeneracy tables may be absent for a hand-built set, in which case the
    identities involving them are not checked.
    """

    max_dim: int
    simplices: tuple[tuple[Simplex, ...], ...]
    faces: Mapping[FaceKey, tuple[int, ...]]
    degeneracies: Mapping[FaceKey, tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if len(self.simplices) != self.max_dim + 1:
            raise ValueError(f"expected simplices for dimensions 0..{self.max_dim}")
        for n in range(1, self.max_dim + 1):
            for i in range(n + 1):
                table = self.faces.get((n, i))
                if table is None or len(table) != len(self.simplices[n]):
                    raise ValueError(f"face map d_{i} on dimension {n} is missing or has the wrong size")
        index = tuple({s: k for k, s in enumerate(level)} for level in self.simplices)
        object.__setattr__(self, "_index", index)

    def count(self, n: int) -> int:
        return len(self.simplices[n])

    def counts(self) -> list[int]:
        return [len(level) for level in self.simplices]

    def index_of(self, n: int, simplex: Simplex) -> int:
        return self._index[n][simplex]  # type: ignore[attr-defined]

    def face(self, n: int, i: int, k: int) -> int:
        return self.faces[(n, i)][k]

    def boundary(self, n: int, k: int) -> tuple[int, ...]:
        return tuple(self.faces[(n, i)][k] for i in range(n + 1))

    def degenerate_flags(self, n: int) -> tuple[bool, ...]:
        """True for simplices in the image of some degeneracy."""
        flags = [False] * self.count(n)
        if n == 0:
            return tuple(flags)
        for i in range(n):
            for target in self.degeneracies.get((n - 1, i), ()):
                flags[target] = True
        return tuple(flags)

    def nondegenerate_counts(self) -> list[int]:
        return [flags.count(False) for flags in map(self.degenerate_flags, range(self.max_dim + 1))]

    def without_simplex(self, n: int, k: int) -> SimplicialSetTrunc:
        """Delete a nondegenerate top-dimensional simplex."""
        if n != self.max_dim:
            raise ValueError("only top-dimensional simplices can be deleted")
        if self.degenerate_flags(n)[k]:
            raise ValueError("cannot delete a degenerate simplex")
        remap = {old: new for new, old in enumerate(j for j in range(self.count(n)) if j != k)}
        simplices = list(self.simplices)
        simplices[n] = tuple(s for j, s in enumerate(self.simplices[n]) if j != k)
        faces = {
            key: (tuple(v for j, v in enumerate(table) if j != k) if key[0] == n else table)
            for key, table in self.faces.items()
        }
        degeneracies = {
            key: (tuple(remap[v] for v in table) if key[0] == n - 1 else table)
            for key, table in self.degeneracies.items()
        }
        return SimplicialSetTrunc(
            self.max_dim, tuple(simplices), MappingProxyType(faces), MappingProxyType(degeneracies)
        )


def simplicial_identity_violations(x: SimplicialSetTrunc) -> list[str]:
    """Check the face, degeneracy and mixed identities inside the truncation."""
    failures: list[str] = []
    d, s = x.faces, x.degeneracies
    for n in range(2, x.max_dim + 1):
        for j in range(1, n + 1):
            for i in range(j):
                for k in range(x.count(n)):
                    if d[(n - 1, i)][d[(n, j)][k]] != d[(n - 1, j - 1)][d[(n, i)][k]]:
                        failures.append(f"d_{i} d_{j} != d_{j - 1} d_{i} on simplex {n}:{k}")
    for n in range(x.max_dim - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                if (n, j) not in s or (n + 1, i) not in s or (n, i) not in s or (n + 1, j + 1) not in s:
                    continue
                for k in range(x.count(n)):
                    if s[(n + 1, i)][s[(n, j)][k]] != s[(n + 1, j + 1)][s[(n, i)][k]]:
                        failures.append(f"s_{i} s_{j} != s_{j + 1} s_{i} on simplex {n}:{k}")
    for n in range(x.max_dim):
        for j in range(n + 1):
            if (n, j) not in s:
                continue
            up = s[(n, j)]
            for i in range(n + 2):
                for k in range(x.count(n)):
                    lhs = d[(n + 1, i)][up[k]]
                    if i in (j, j + 1):
                        rhs = k
                    elif i < j:
                        if n == 0 or (n - 1, j - 1) not in s:
                            continue
                        rhs = s[(n - 1, j - 1)][d[(n, i)][k]]
                    else:
                        if n == 0 or (n - 1, j) not in s:
                            continue
                        rhs = s[(n - 1, j)][d[(n, i - 1)][k]]
                    if lhs != rhs:
                        failures.append(f"d_{i} s_{j} identity fails on simplex {n}:{k}")
    return failures


def composable_chains(c: FinCategory, n: int) -> list[tuple[str, ...]]:
    """All chains ``x0 -f1-> x1 -> ... -fn-> xn``, sorted lexicographically."""
    chains: list[tuple[str, ...]] = [(m.id,) for m in c.morphisms]
    for _ in range(n - 1):
        chains = [chain + (g,) for chain in chains for g in c.outgoing(c.tgt(chain[-1]))]
    return sorted(chains)


def _chain_vertex(c: FinCategory, chain: tuple[str, ...], i: int) -> str:
    return c.src(chain[i]) if i < len(chain) else c.tgt(chain[-1])


def chain_face(c: FinCategory, chain: tuple[str, ...], i: int) -> Simplex:
    """``d_i``: drop the first or last morphism, or compose the i-th and (i+1)-th."""
    n = len(chain)
    if n == 1:
        return c.tgt(chain[0]) if i == 0 else c.src(chain[0])
    if i == 0:
        return chain[1:]
    if i == n:
        return chain[:-1]
    return chain[: i - 1] + (c.compose(chain[i], chain[i - 1]),) + chain[i + 1 :]


def chain_degeneracy(c: FinCategory, simplex: Simplex, i: int) -> tuple[str, ...]:
    """``s_i``: insert the identity of the i-th vertex at position i."""
    if isinstance(simplex, str):
        return (c.identity[simplex],)
    chain = tuple(simplex)  # type: ignore[arg-type]
    return chain[:i] + (c.identity[_chain_vertex(c, chain, i)],) + chain[i:]


def nerve(c: FinCategory, max_dim: int) -> SimplicialSetTrunc:
    """The nerve truncated at ``max_dim``; 0-simplices are object ids, n-simplices are chains."""
    if max_dim < 0:
        raise ValueError("max_dim must be non-negative")
    levels: list[tuple[Simplex, ...]] = [tuple(sorted(c.objects))]
    for n in range(1, max_dim + 1):
        levels.append(tuple(composable_chains(c, n)) if c.morphisms else ())
    index = [{s: k for k, s in enumerate(level)} for level in levels]

    faces: dict[FaceKey, tuple[int, ...]] = {}
    for n in range(1, max_dim + 1):
        for i in range(n + 1):
            faces[(n, i)] = tuple(index[n - 1][chain_face(c, chain, i)] for chain in levels[n])  # type: ignore[arg-type]
    degeneracies: dict[FaceKey, tuple[int, ...]] = {}
    for n in range(max_dim):
        for i in range(n + 1):
            degeneracies[(n, i)] = tuple(index[n + 1][chain_degeneracy(c, s, i)] for s in levels[n])

    return SimplicialSetTrunc(
        max_dim, tuple(levels), MappingProxyType(faces), MappingProxyType(degeneracies)
    )


def is_degenerate_chain(c: FinCategory, simplex: Simplex) -> bool:
    """A chain is degenerate iff one of its morphisms is an identity."""
    if isinstance(simplex, str):
        return False
    return any(c.is_identity(m) for m in simplex)  # type: ignore[union-attr]


def format_simplex(simplex: Simplex) -> str:
    if isinstance(simplex, str):
        return simplex
    return "(" + ", ".join(simplex) + ")"  # type: ignore[arg-type]


@dataclass(frozen=True, eq=False)
class SimplicialMap:
    """Per-dimension index maps between truncated simplicial sets."""

    source: SimplicialSetTrunc
    target: SimplicialSetTrunc
    components: tuple[tuple[int, ...], ...]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialMap):
            return NotImplemented
        return self.components == other.components

    def compose(self, first: SimplicialMap) -> SimplicialMap:
        """Return ``self o first``."""
        if first.target.counts() != self.source.counts():
            raise ValueError("simplicial map boundary mismatch")
        return SimplicialMap(
            first.source,
            self.target,
            tuple(
                tuple(mine[v] for v in theirs)
                for mine, theirs in zip(self.components, first.components, strict=True)
            ),
        )

    def violations(self) -> list[str]:
        failures: list[str] = []
        src, tgt = self.source, self.target
        top = min(src.max_dim, tgt.max_dim, len(self.components) - 1)
        for n in range(1, top + 1):
            for i in range(n + 1):
                for k in range(src.count(n)):
                    if tgt.face(n, i, self.components[n][k]) != self.components[n - 1][src.face(n, i, k)]:
                        failures.append(f"map does not commute with d_{i} on simplex {n}:{k}")
        for n in range(top):
            for i in range(n + 1):
                if (n, i) not in src.degeneracies or (n, i) not in tgt.degeneracies:
                    continue
                for k in range(src.count(n)):
                    lhs = tgt.degeneracies[(n, i)][self.components[n][k]]
                    if lhs != self.components[n + 1][src.degeneracies[(n, i)][k]]:
                        failures.append(f"map does not commute with s_{i} on simplex {n}:{k}")
        return failures


def nerve_of_functor(
    f: Functor,
    max_dim: int,
    source_nerve: SimplicialSetTrunc | None = None,
    target_nerve: SimplicialSetTrunc | None = None,
) -> SimplicialMap:
    """``N(F)``: apply F to every chain."""
    src = source_nerve or nerve(f.source, max_dim)
    tgt = target_nerve or nerve(f.target, max_dim)
    components: list[tuple[int, ...]] = [
        tuple(tgt.index_of(0, f.obj_map[x]) for x in src.simplices[0])
    ]
    for n in range(1, max_dim + 1):
        components.append(
            tuple(
                tgt.index_of(n, tuple(f.mor_map[m] for m in chain))  # type: ignore[union-attr]
                for chain in src.simplices[n]
            )
        )
    return SimplicialMap(src, tgt, tuple(components))


@dataclass(frozen=True)
class CoskeletalReport:
    """Boundaries (as tuples of face labels) with no filler or several."""

    dims_checked: tuple[int, ...]
    missing: tuple[tuple[str, ...], ...] = ()
    nonunique: tuple[tuple[str, ...], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.missing and not self.nonunique

    def summary(self) -> str:
        if self.ok:
            return f"Ok (dimensions {', '.join(map(str, self.dims_checked))})"
        lines = [f"MissingFiller{boundary}" for boundary in self.missing]
        lines += [f"NonUniqueFiller{boundary}" for boundary in self.nonunique]
        return "\n".join(lines)


def compatible_boundaries(x: SimplicialSetTrunc, k: int) -> list[tuple[int, ...]]:
    """Tuples ``(t_0..t_k)`` of (k-1)-simplices with ``d_i t_j = d_{j-1} t_i`` for i < j."""
    lower = k - 1
    faces_of = [x.boundary(lower, t) for t in range(x.count(lower))]
    results: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...]) -> None:
        j = len(prefix)
        if j == k + 1:
            results.append(prefix)
            return
        required = [(i, faces_of[prefix[i]][j - 1]) for i in range(j)]
        for t in range(x.count(lower)):
            if all(faces_of[t][i] == value for i, value in required):
                extend(prefix + (t,))

    extend(())
    return results


def check_two_coskeletal(x: SimplicialSetTrunc, *, check_dim4: bool = False) -> CoskeletalReport:
    """Every compatible boundary in dimension 3 (and optionally 4) has exactly one filler."""
    if x.max_dim < 3:
        raise ValueError("2-coskeletality needs simplices up to dimension 3")
    dims = (3, 4) if check_dim4 and x.max_dim >= 4 else (3,)
    missing: list[tuple[str, ...]] = []
    nonunique: list[tuple[str, ...]] = []
    for k in dims:
        fillers: dict[tuple[int, ...], int] = {}
        for t in range(x.count(k)):
            key = x.boundary(k, t)
            fillers[key] = fillers.get(key, 0) + 1
        for boundary in compatible_boundaries(x, k):
            labels = tuple(format_simplex(x.simplices[k - 1][t]) for t in boundary)
            found = fillers.get(boundary, 0)
            if found == 0:
                missing.append(labels)
            elif found > 1:
                nonunique.append(labels)
    return CoskeletalReport(dims, tuple(missing), tuple(nonunique))


def nerve_counts(x: SimplicialSetTrunc) -> dict[int, tuple[int, int]]:
    """Dimension -> (all simplices, nondegenerate simplices)."""
    nondegenerate = x.nondegenerate_counts()
    return {n: (x.count(n), nondegenerate[n]) for n in range(x.max_dim + 1)}


def simplex_labels(x: SimplicialSetTrunc, n: int) -> Sequence[str]:
    return [format_simplex(s) for s in x.simplices[n]]

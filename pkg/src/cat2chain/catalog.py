"""Standard small categories, graphs and magmas, plus seeded random generators."""

from __future__ import annotations

import itertools
import random
from collections.abc import Iterable, Sequence
from types import MappingProxyType

from .fincat import (
    FinCategory,
    Functor,
    NatTransf,
    category_to_document,
    validate_category,
    validate_functor,
    validate_nat_transf,
)
from .ratlinalg import Matrix
from .twovect import MagmaPair, ReflexiveVectGraph


def _category(objects: Sequence[str], arrows: Iterable[tuple[str, str, str]],
              compose: Iterable[tuple[str, str, str]] = ()) -> FinCategory:
    """Build from non-identity arrows ``(id, src, tgt)``; identities are ``id_<object>``."""
    identities = {x: f"id_{x}" for x in objects}
    morphisms = [{"id": ident, "src": x, "tgt": x} for x, ident in identities.items()]
    morphisms += [{"id": m, "src": s, "tgt": t} for m, s, t in arrows]
    return validate_category(
        {
            "objects": list(objects),
            "morphisms": morphisms,
            "identities": identities,
            "compose": [{"g": g, "f": f, "result": h} for g, f, h in compose],
        }
    )


def terminal() -> FinCategory:
    return _category(["*"], [])


def empty() -> FinCategory:
    return _category([], [])


def discrete(k: int) -> FinCategory:
    return _category([f"x{j}" for j in range(k)], [])


def walking_arrow() -> FinCategory:
    """``x -f-> y``."""
    return _category(["x", "y"], [("f", "x", "y")])


def commutative_square() -> FinCategory:
    """Objects 0..3, edges a: 0->1, b: 1->3, c: 0->2, d: 2->3 and the diagonal b.a = d.c."""
    return _category(
        ["0", "1", "2", "3"],
        [("a", "0", "1"), ("b", "1", "3"), ("c", "0", "2"), ("d", "2", "3"), ("diag", "0", "3")],
        [("b", "a", "diag"), ("d", "c", "diag")],
    )


def _power(k: int) -> str:
    return "e" if k == 0 else ("g" if k == 1 else f"g{k}")


def cyclic_group(n: int) -> FinCategory:
    """One-object category B(Z/n) with morphisms e, g, g2, ..."""
    if n < 1:
        raise ValueError("group order must be positive")
    ids = [_power(k) for k in range(n)]
    return validate_category(
        {
            "objects": ["*"],
            "morphisms": [{"id": m, "src": "*", "tgt": "*"} for m in ids],
            "identities": {"*": "e"},
            "compose": [
                {"g": _power(a), "f": _power(b), "result": _power((a + b) % n)}
                for a, b in itertools.product(range(n), repeat=2)
            ],
        }
    )


def order_morphism(a: str, b: str) -> str:
    """Morphism id for ``a <= b`` in a catalog poset."""
    return f"id_{a}" if a == b else f"{a}<{b}"


def poset(elements: Sequence[str], relations: Iterable[tuple[str, str]]) -> FinCategory:
    """Thin category of the reflexive-transitive closure of ``relations``."""
    below = {x: {x} for x in elements}
    for a, b in relations:
        if a not in below or b not in below:
            raise ValueError(f"relation ({a}, {b}) mentions an unknown element")
        below[b].add(a)
    changed = True
    while changed:
        changed = False
        for x in elements:
            closure = set().union(*(below[y] for y in below[x]))
            if closure != below[x]:
                below[x] = closure
                changed = True
    for a, b in itertools.combinations(elements, 2):
        if a in below[b] and b in below[a]:
            raise ValueError(f"relations are not antisymmetric: {a} and {b}")
    pairs = [(a, b) for b in elements for a in sorted(below[b]) if a != b]
    arrows = [(order_morphism(a, b), a, b) for a, b in pairs]
    compose = [
        (order_morphism(b, c), order_morphism(a, b), order_morphism(a, c))
        for a, b in pairs
        for b2, c in pairs
        if b2 == b
    ]
    return _category(list(elements), arrows, compose)


def total_order(n: int) -> FinCategory:
    """The poset ``[n] = {0 < 1 < ... < n}``."""
    elements = [str(k) for k in range(n + 1)]
    return poset(elements, zip(elements, elements[1:]))


def to_document(c: FinCategory) -> dict[str, object]:
    return category_to_document(c)


def random_poset(n: int, rng: random.Random, density: float = 0.4) -> FinCategory:
    """Relations only go from lower to higher index, so the listing order is a linear extension."""
    elements = [f"p{k}" for k in range(n)]
    relations = [(a, b) for a, b in itertools.combinations(elements, 2) if rng.random() < density]
    return poset(elements, relations)


def _monotone_object_map(source: FinCategory, target: FinCategory, rng: random.Random) -> list[int]:
    return sorted(rng.randrange(len(target.objects)) for _ in source.objects)


def _poset_functor(source: FinCategory, target: FinCategory, values: Sequence[int]) -> Functor:
    obj_map = {x: target.objects[v] for x, v in zip(source.objects, values, strict=True)}
    mor_map = {m.id: order_morphism(obj_map[m.src], obj_map[m.tgt]) for m in source.morphisms}
    return validate_functor({"objects": obj_map, "morphisms": mor_map}, source, target)


def random_monotone_functor(source: FinCategory, target: FinCategory, rng: random.Random) -> Functor:
    """``source`` must list its objects in a linear extension; ``target`` is a catalog total order."""
    return _poset_functor(source, target, _monotone_object_map(source, target, rng))


def random_transformation_triple(
    rng: random.Random, max_objects: int = 5
) -> tuple[FinCategory, FinCategory, Functor, Functor, NatTransf]:
    """``(C, D, F, G, alpha)`` with ``alpha: F => G``; G is the pointwise max of F and another map."""
    if max_objects < 2:
        raise ValueError("max_objects must be at least 2")
    c = random_poset(rng.randint(1, max_objects), rng)
    d = total_order(rng.randint(1, max_objects - 1))
    f_values = _monotone_object_map(c, d, rng)
    h_values = _monotone_object_map(c, d, rng)
    g_values = [max(a, b) for a, b in zip(f_values, h_values, strict=True)]
    f = _poset_functor(c, d, f_values)
    g = _poset_functor(c, d, g_values)
    components = {x: order_morphism(f.obj_map[x], g.obj_map[x]) for x in c.objects}
    alpha = validate_nat_transf({"components": components}, f, g)
    return c, d, f, g, alpha


def arrow_to_square_functors() -> tuple[Functor, Functor, NatTransf]:
    """F picks the top edge ``a``, G the bottom edge ``d``; alpha has components ``c`` and ``b``."""
    c, d = walking_arrow(), commutative_square()
    f = validate_functor(
        {"objects": {"x": "0", "y": "1"}, "morphisms": {"id_x": "id_0", "id_y": "id_1", "f": "a"}}, c, d
    )
    g = validate_functor(
        {"objects": {"x": "2", "y": "3"}, "morphisms": {"id_x": "id_2", "id_y": "id_3", "f": "d"}}, c, d
    )
    alpha = validate_nat_transf({"components": {"x": "c", "y": "b"}}, f, g)
    return f, g, alpha


def example_graph() -> ReflexiveVectGraph:
    """Q^4 over Q^2: s(a,b,c,d) = (a,b), t(a,b,c,d) = (a+c, b+d), i(a,b) = (a,b,0,0)."""
    return ReflexiveVectGraph(
        dim0=2,
        dim1=4,
        s=Matrix.from_rows([[1, 0, 0, 0], [0, 1, 0, 0]]),
        t=Matrix.from_rows([[1, 0, 1, 0], [0, 1, 0, 1]]),
        i=Matrix.from_rows([[1, 0], [0, 1], [0, 0], [0, 0]]),
    )


def trivial_graph() -> ReflexiveVectGraph:
    one = Matrix.identity(1)
    return ReflexiveVectGraph(1, 1, one, one, one)


def zero_graph() -> ReflexiveVectGraph:
    return ReflexiveVectGraph(0, 0, Matrix.zeros(0, 0), Matrix.zeros(0, 0), Matrix.zeros(0, 0))


def random_reflexive_graph(rng: random.Random, dim0: int, dim1: int, bound: int = 3) -> ReflexiveVectGraph:
    """``i`` the standard inclusion, ``s`` and ``t`` of the form ``[I | random block]``."""
    if dim1 < dim0:
        raise ValueError("dim1 must be at least dim0")
    extra = dim1 - dim0

    def block() -> Matrix:
        rows = [
            [int(r == c) for c in range(dim0)] + [rng.randint(-bound, bound) for _ in range(extra)]
            for r in range(dim0)
        ]
        return Matrix.from_rows(rows, cols=dim1)

    inclusion = Matrix.from_rows(
        [[int(r == c) for c in range(dim0)] for r in range(dim1)], cols=dim0
    )
    return ReflexiveVectGraph(dim0, dim1, block(), block(), inclusion)


def cyclic_magma(n: int) -> MagmaPair:
    """Addition mod n used for both operations."""
    carrier = tuple(str(k) for k in range(n))
    table = MappingProxyType({(str(a), str(b)): str((a + b) % n) for a in range(n) for b in range(n)})
    return MagmaPair(carrier, table, table, "0", "0")


def left_absorbing_magma() -> MagmaPair:
    """``{e, a, b}`` with ``x . y = x`` whenever ``x != e``."""
    carrier = ("e", "a", "b")
    table = MappingProxyType({(x, y): (y if x == "e" else x) for x in carrier for y in carrier})
    return MagmaPair(carrier, table, table, "e", "e")

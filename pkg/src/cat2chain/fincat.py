"""Finite categories given by total composition tables, functors and natural transformations."""

from __future__ import annotations

import itertools
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from types import MappingProxyType


@dataclass(frozen=True)
class Violation:
    """One failed axiom instance, with the ids that witness it."""

    kind: str
    witness: tuple[str, ...]
    detail: str = ""

    def __str__(self) -> str:
        text = f"{self.kind}({', '.join(self.witness)})"
        return f"{text}: {self.detail}" if self.detail else text


class CategoryError(ValueError):
    """Raised by the validators; carries every violation found."""

    def __init__(self, what: str, violations: Sequence[Violation]) -> None:
        self.violations = list(violations)
        lines = "\n".join(f"  - {v}" for v in self.violations)
        super().__init__(f"Invalid {what}: {len(self.violations)} violation(s)\n{lines}")


@dataclass(frozen=True)
class Morphism:
    id: str
    src: str
    tgt: str


@dataclass(frozen=True, eq=False)
class FinCategory:
    objects: tuple[str, ...]
    morphisms: tuple[Morphism, ...]
    identity: Mapping[str, str]
    compose_table: Mapping[tuple[str, str], str]

    def __post_init__(self) -> None:
        object.__setattr__(self, "_by_id", {m.id: m for m in self.morphisms})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinCategory):
            return NotImplemented
        return (
            set(self.objects) == set(other.objects)
            and set(self.morphisms) == set(other.morphisms)
            and dict(self.identity) == dict(other.identity)
            and dict(self.compose_table) == dict(other.compose_table)
        )

    def morphism(self, mor_id: str) -> Morphism:
        try:
            return self._by_id[mor_id]  # type: ignore[attr-defined]
        except KeyError as exc:
            raise KeyError(f"Unknown morphism: {mor_id}") from exc

    def src(self, mor_id: str) -> str:
        return self.morphism(mor_id).src

    def tgt(self, mor_id: str) -> str:
        return self.morphism(mor_id).tgt

    def is_identity(self, mor_id: str) -> bool:
        m = self.morphism(mor_id)
        return m.src == m.tgt and self.identity.get(m.src) == mor_id

    def compose(self, g: str, f: str) -> str:
        """Return ``g o f``; raises when the pair is not composable."""
        if self.src(g) != self.tgt(f):
            raise ValueError(f"Morphisms not composable: {g} o {f}")
        return self.compose_table[(g, f)]

    def outgoing(self, obj: str) -> list[str]:
        return sorted(m.id for m in self.morphisms if m.src == obj)

    def hom(self, x: str, y: str) -> list[str]:
        return sorted(m.id for m in self.morphisms if m.src == x and m.tgt == y)

    def composable_pairs(self) -> list[tuple[str, str]]:
        return [
            (g.id, f.id) for f in self.morphisms for g in self.morphisms if g.src == f.tgt
        ]


def _require_list(raw: Mapping[str, object], key: str, what: str) -> list[object]:
    value = raw.get(key)
    if not isinstance(value, list):
        raise CategoryError(what, [Violation("schema", (key,), "expected a list")])
    return value


def validate_category(raw: Mapping[str, object]) -> FinCategory:
    """Parse a category document and check every axiom instance.

    Composites involving identities may be omitted; they are filled in by the
    unit laws. Raises CategoryError listing every violation.
    """
    if not isinstance(raw, Mapping):
        raise CategoryError("category", [Violation("schema", ("document",), "expected an object")])
    violations: list[Violation] = []

    objects = [str(o) for o in _require_list(raw, "objects", "category")]
    seen: set[str] = set()
    for obj in objects:
        if obj in seen:
            violations.append(Violation("duplicate_object", (obj,)))
        seen.add(obj)

    morphisms: list[Morphism] = []
    mor_ids: set[str] = set()
    for entry in _require_list(raw, "morphisms", "category"):
        if not isinstance(entry, Mapping) or not {"id", "src", "tgt"} <= set(entry):
            violations.append(Violation("schema", ("morphisms",), f"bad entry {entry!r}"))
            continue
        m = Morphism(str(entry["id"]), str(entry["src"]), str(entry["tgt"]))
        if m.id in mor_ids:
            violations.append(Violation("duplicate_morphism", (m.id,)))
            continue
        for end in (m.src, m.tgt):
            if end not in seen:
                violations.append(Violation("unknown_object", (m.id, end)))
        mor_ids.add(m.id)
        morphisms.append(m)
    by_id = {m.id: m for m in morphisms}

    raw_identities = raw.get("identities", {})
    if not isinstance(raw_identities, Mapping):
        raise CategoryError("category", [Violation("schema", ("identities",), "expected an object")])
    identity: dict[str, str] = {}
    for obj in objects:
        ident = raw_identities.get(obj)
        if ident is None:
            violations.append(Violation("missing_identity", (obj,)))
            continue
        ident = str(ident)
        m = by_id.get(ident)
        if m is None or m.src != obj or m.tgt != obj:
            violations.append(Violation("identity_mismatch", (obj, ident), "identity must be an endomorphism"))
            continue
        identity[obj] = ident

    table: dict[tuple[str, str], str] = {}
    raw_compose = raw.get("compose", [])
    if not isinstance(raw_compose, list):
        raise CategoryError("category", [Violation("schema", ("compose",), "expected a list")])
    for entry in raw_compose:
        if not isinstance(entry, Mapping) or not {"g", "f", "result"} <= set(entry):
            violations.append(Violation("schema", ("compose",), f"bad entry {entry!r}"))
            continue
        g, f, h = str(entry["g"]), str(entry["f"]), str(entry["result"])
        if g not in by_id or f not in by_id or h not in by_id:
            violations.append(Violation("unknown_morphism", (g, f, h)))
            continue
        if by_id[g].src != by_id[f].tgt:
            violations.append(Violation("composite_not_composable", (g, f)))
            continue
        if (g, f) in table and table[(g, f)] != h:
            violations.append(Violation("conflicting_composite", (g, f), f"{table[(g, f)]} vs {h}"))
            continue
        table[(g, f)] = h

    # Unit-law inference for omitted identity composites.
    for m in morphisms:
        left = identity.get(m.tgt)
        right = identity.get(m.src)
        if left is not None:
            table.setdefault((left, m.id), m.id)
        if right is not None:
            table.setdefault((m.id, right), m.id)

    if violations:
        raise CategoryError("category", violations)

    category = FinCategory(
        objects=tuple(objects),
        morphisms=tuple(morphisms),
        identity=MappingProxyType(dict(identity)),
        compose_table=MappingProxyType(dict(table)),
    )
    violations = category_violations(category)
    if violations:
        raise CategoryError("category", violations)
    return category


def category_violations(c: FinCategory) -> list[Violation]:
    """Check totality, src/tgt compatibility, unit laws and associativity."""
    violations: list[Violation] = []
    table = c.compose_table
    for (g, f), h in table.items():
        if c.src(h) != c.src(f) or c.tgt(h) != c.tgt(g):
            violations.append(Violation("src_tgt_mismatch", (g, f), f"result {h}"))
    for g, f in c.composable_pairs():
        if (g, f) not in table:
            violations.append(Violation("missing_composite", (g, f)))
    for m in c.morphisms:
        right = c.identity[m.src]
        left = c.identity[m.tgt]
        if table.get((m.id, right), m.id) != m.id:
            violations.append(Violation("unit_law", (m.id, "right"), f"{m.id} o {right} = {table[(m.id, right)]}"))
        if table.get((left, m.id), m.id) != m.id:
            violations.append(Violation("unit_law", (m.id, "left"), f"{left} o {m.id} = {table[(left, m.id)]}"))
    if any(v.kind in {"missing_composite", "src_tgt_mismatch"} for v in violations):
        return violations
    for f in c.morphisms:
        for g in c.morphisms:
            if g.src != f.tgt:
                continue
            gf = table[(g.id, f.id)]
            for h in c.morphisms:
                if h.src != g.tgt:
                    continue
                if table[(h.id, gf)] != table[(table[(h.id, g.id)], f.id)]:
                    violations.append(Violation("associativity", (h.id, g.id, f.id)))
    return violations


def check_associativity_brute_force(c: FinCategory) -> list[tuple[str, str, str]]:
    """Independent scan over every ordered triple of morphisms."""
    failures: list[tuple[str, str, str]] = []
    ids = [m.id for m in c.morphisms]
    for h, g, f in itertools.product(ids, repeat=3):
        if c.src(h) != c.tgt(g) or c.src(g) != c.tgt(f):
            continue
        if c.compose(h, c.compose(g, f)) != c.compose(c.compose(h, g), f):
            failures.append((h, g, f))
    return failures


def category_to_document(c: FinCategory) -> dict[str, object]:
    """Serialize to the category JSON schema (identity composites omitted)."""
    identity_ids = set(c.identity.values())
    return {
        "objects": list(c.objects),
        "morphisms": [{"id": m.id, "src": m.src, "tgt": m.tgt} for m in c.morphisms],
        "identities": dict(c.identity),
        "compose": [
            {"g": g, "f": f, "result": h}
            for (g, f), h in sorted(c.compose_table.items())
            if g not in identity_ids and f not in identity_ids
        ],
    }


@dataclass(frozen=True, eq=False)
class Functor:
    source: FinCategory
    target: FinCategory
    obj_map: Mapping[str, str]
    mor_map: Mapping[str, str]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Functor):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and dict(self.obj_map) == dict(other.obj_map)
            and dict(self.mor_map) == dict(other.mor_map)
        )

    def on_object(self, x: str) -> str:
        return self.obj_map[x]

    def on_morphism(self, f: str) -> str:
        return self.mor_map[f]


def functor_violations(f: Functor) -> list[Violation]:
    violations: list[Violation] = []
    src, tgt = f.source, f.target
    target_objects = set(tgt.objects)
    for x in src.objects:
        if x not in f.obj_map:
            violations.append(Violation("object_map_missing", (x,)))
        elif f.obj_map[x] not in target_objects:
            violations.append(Violation("object_map_unknown", (x, f.obj_map[x])))
    target_ids = {m.id for m in tgt.morphisms}
    for m in src.morphisms:
        image = f.mor_map.get(m.id)
        if image is None:
            violations.append(Violation("morphism_map_missing", (m.id,)))
        elif image not in target_ids:
            violations.append(Violation("morphism_map_unknown", (m.id, image)))
    if violations:
        return violations

    for m in src.morphisms:
        image = f.mor_map[m.id]
        if tgt.src(image) != f.obj_map[m.src] or tgt.tgt(image) != f.obj_map[m.tgt]:
            violations.append(Violation("src_tgt_preservation", (m.id, image)))
    for x in src.objects:
        if f.mor_map[src.identity[x]] != tgt.identity[f.obj_map[x]]:
            violations.append(Violation("identity_preservation", (x,)))
    if violations:
        return violations
    for g, h in src.composable_pairs():
        lhs = f.mor_map[src.compose(g, h)]
        rhs = tgt.compose(f.mor_map[g], f.mor_map[h])
        if lhs != rhs:
            violations.append(
                Violation("composite_preservation", (g, h), f"F({g} o {h}) = {lhs} but F({g}) o F({h}) = {rhs}")
            )
    return violations


def validate_functor(raw: Mapping[str, object], source: FinCategory, target: FinCategory) -> Functor:
    """Build a functor from ``{"objects": {...}, "morphisms": {...}}`` and check it."""
    obj_map = raw.get("objects", {}) if isinstance(raw, Mapping) else None
    mor_map = raw.get("morphisms", {}) if isinstance(raw, Mapping) else None
    if not isinstance(obj_map, Mapping) or not isinstance(mor_map, Mapping):
        raise CategoryError("functor", [Violation("schema", ("document",), "objects/morphisms must be objects")])
    functor = Functor(
        source=source,
        target=target,
        obj_map=MappingProxyType({str(k): str(v) for k, v in obj_map.items()}),
        mor_map=MappingProxyType({str(k): str(v) for k, v in mor_map.items()}),
    )
    violations = functor_violations(functor)
    if violations:
        raise CategoryError("functor", violations)
    return functor


def identity_functor(c: FinCategory) -> Functor:
    return Functor(
        c,
        c,
        MappingProxyType({x: x for x in c.objects}),
        MappingProxyType({m.id: m.id for m in c.morphisms}),
    )


def constant_functor(source: FinCategory, target: FinCategory, obj: str) -> Functor:
    ident = target.identity[obj]
    return Functor(
        source,
        target,
        MappingProxyType({x: obj for x in source.objects}),
        MappingProxyType({m.id: ident for m in source.morphisms}),
    )


def compose_functors(g: Functor, f: Functor) -> Functor:
    """Return ``g o f``."""
    if f.target != g.source:
        raise ValueError("Functor boundary mismatch: target of f is not the source of g")
    return Functor(
        f.source,
        g.target,
        MappingProxyType({x: g.obj_map[y] for x, y in f.obj_map.items()}),
        MappingProxyType({m: g.mor_map[n] for m, n in f.mor_map.items()}),
    )


@dataclass(frozen=True, eq=False)
class NatTransf:
    source: Functor
    target: Functor
    components: Mapping[str, str]

    def component(self, x: str) -> str:
        return self.components[x]


def nat_transf_violations(a: NatTransf) -> list[Violation]:
    F, G = a.source, a.target
    violations: list[Violation] = []
    if F.source != G.source or F.target != G.target:
        return [Violation("boundary_mismatch", ("F", "G"), "functors must share source and target")]
    D = F.target
    target_ids = {m.id for m in D.morphisms}
    for x in F.source.objects:
        comp = a.components.get(x)
        if comp is None:
            violations.append(Violation("component_missing", (x,)))
        elif comp not in target_ids:
            violations.append(Violation("component_unknown", (x, comp)))
        elif D.src(comp) != F.obj_map[x] or D.tgt(comp) != G.obj_map[x]:
            violations.append(
                Violation("component_boundary", (x, comp), f"expected {F.obj_map[x]} -> {G.obj_map[x]}")
            )
    if violations:
        return violations
    for m in F.source.morphisms:
        lhs = D.compose(G.mor_map[m.id], a.components[m.src])
        rhs = D.compose(a.components[m.tgt], F.mor_map[m.id])
        if lhs != rhs:
            violations.append(
                Violation("naturality", (m.id,), f"G({m.id}) o alpha_{m.src} = {lhs} but alpha_{m.tgt} o F({m.id}) = {rhs}")
            )
    return violations


def validate_nat_transf(raw: Mapping[str, object], source: Functor, target: Functor) -> NatTransf:
    """Build ``alpha: source => target`` from ``{"components": {...}}`` and check it."""
    components = raw.get("components") if isinstance(raw, Mapping) else None
    if not isinstance(components, Mapping):
        raise CategoryError("natural transformation", [Violation("schema", ("components",), "expected an object")])
    alpha = NatTransf(source, target, MappingProxyType({str(k): str(v) for k, v in components.items()}))
    violations = nat_transf_violations(alpha)
    if violations:
        raise CategoryError("natural transformation", violations)
    return alpha


def identity_transformation(f: Functor) -> NatTransf:
    return NatTransf(f, f, MappingProxyType({x: f.target.identity[y] for x, y in f.obj_map.items()}))


def vertical_compose(beta: NatTransf, alpha: NatTransf) -> NatTransf:
    """Componentwise ``(beta . alpha)_x = beta_x o alpha_x``."""
    if alpha.target != beta.source:
        raise ValueError("Transformation boundary mismatch: alpha's target is not beta's source")
    D = alpha.source.target
    return NatTransf(
        alpha.source,
        beta.target,
        MappingProxyType({x: D.compose(beta.components[x], alpha.components[x]) for x in alpha.components}),
    )

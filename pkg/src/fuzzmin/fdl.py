"""Fuzzy interpretations and everything built on them: feature sets,
concept/role expressions with their semantics, crisp bisimulation checking,
the quotient construction, minimization, pruning of unreachable elements,
and satisfaction of assertions and terminological axioms.
"""

from __future__ import annotations

import json
import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .algebra import Algebra, Degree
from .errors import FeatureError, UsageError
from .graph import FuzzyGraph
from .partition import Partition
from .refine import compcb

FEATURE_NAMES = ("baaz", "comp", "union", "star", "test", "inverse", "universal", "nominal")

_COMPARE = {">=": operator.ge, ">": operator.gt, "<=": operator.le, "<": operator.lt}


@dataclass(frozen=True)
class FeatureSet:
    """Enabled optional constructors.  The crisping projection (baaz) is
    always available and cannot be switched off."""

    comp: bool = False
    union: bool = False
    star: bool = False
    test: bool = False
    inverse: bool = False
    universal: bool = False
    nominal: bool = False

    baaz = True  # mandatory

    @classmethod
    def from_names(cls, names: Iterable[str]) -> "FeatureSet":
        names = list(names)
        unknown = [n for n in names if n not in FEATURE_NAMES]
        if unknown:
            raise UsageError(f"unknown features {unknown}; valid: {list(FEATURE_NAMES)}")
        if "baaz" not in names:
            raise UsageError('feature list must include "baaz"')
        chosen = set(names)
        return cls(**{name: name in chosen for name in FEATURE_NAMES if name != "baaz"})

    @classmethod
    def full(cls) -> "FeatureSet":
        return cls.from_names(list(FEATURE_NAMES))

    def names(self) -> list[str]:
        enabled = ["baaz"]
        enabled += [n for n in FEATURE_NAMES if n != "baaz" and getattr(self, n)]
        return enabled

    def with_universal(self) -> "FeatureSet":
        return self if self.universal else FeatureSet.from_names(self.names() + ["universal"])


# --- concept and role expressions -----------------------------------------

class ConceptNode:
    __slots__ = ()


class RoleNode:
    __slots__ = ()


@dataclass(frozen=True)
class ConstantConcept(ConceptNode):
    value: Fraction


@dataclass(frozen=True)
class ConceptName(ConceptNode):
    name: str


@dataclass(frozen=True)
class Nominal(ConceptNode):
    individual: str


@dataclass(frozen=True)
class BaazConcept(ConceptNode):
    child: ConceptNode


@dataclass(frozen=True)
class NotConcept(ConceptNode):
    child: ConceptNode


@dataclass(frozen=True)
class AndConcept(ConceptNode):
    left: ConceptNode
    right: ConceptNode


@dataclass(frozen=True)
class OrConcept(ConceptNode):
    left: ConceptNode
    right: ConceptNode


@dataclass(frozen=True)
class ImpliesConcept(ConceptNode):
    left: ConceptNode
    right: ConceptNode


@dataclass(frozen=True)
class ForallConcept(ConceptNode):
    role: RoleNode
    child: ConceptNode


@dataclass(frozen=True)
class ExistsConcept(ConceptNode):
    role: RoleNode
    child: ConceptNode


@dataclass(frozen=True)
class RoleName(RoleNode):
    name: str


@dataclass(frozen=True)
class InverseRole(RoleNode):
    child: RoleNode


@dataclass(frozen=True)
class ComposeRole(RoleNode):
    left: RoleNode
    right: RoleNode


@dataclass(frozen=True)
class UnionRole(RoleNode):
    left: RoleNode
    right: RoleNode


@dataclass(frozen=True)
class StarRole(RoleNode):
    child: RoleNode


@dataclass(frozen=True)
class TestRole(RoleNode):
    concept: ConceptNode


@dataclass(frozen=True)
class UniversalRole(RoleNode):
    pass


def check_features(node, phi: FeatureSet) -> None:
    """Raise FeatureError if the expression uses a constructor outside phi."""
    if isinstance(node, Nominal) and not phi.nominal:
        raise FeatureError("nominal {a} requires feature 'nominal'")
    if isinstance(node, InverseRole) and not phi.inverse:
        raise FeatureError("role inverse '-' requires feature 'inverse'")
    if isinstance(node, ComposeRole) and not phi.comp:
        raise FeatureError("role composition ';' requires feature 'comp'")
    if isinstance(node, UnionRole) and not phi.union:
        raise FeatureError("role union '|' requires feature 'union'")
    if isinstance(node, StarRole) and not phi.star:
        raise FeatureError("role closure '*' requires feature 'star'")
    if isinstance(node, TestRole) and not phi.test:
        raise FeatureError("role test '?' requires feature 'test'")
    if isinstance(node, UniversalRole) and not phi.universal:
        raise FeatureError("universal role 'U' requires feature 'universal'")
    for attr in ("child", "left", "right", "role", "concept"):
        sub = getattr(node, attr, None)
        if sub is not None:
            check_features(sub, phi)


# --- assertions and axioms --------------------------------------------------

@dataclass(frozen=True)
class ConceptAssertion:
    concept: ConceptNode
    individual: str
    op: str  # one of >=, >, <=, <
    degree: Degree

    def __post_init__(self):
        if self.op not in _COMPARE:
            raise UsageError(f"bad comparison {self.op!r}")


@dataclass(frozen=True)
class RoleAssertion:
    role: RoleNode
    a: str
    b: str
    op: str
    degree: Degree

    def __post_init__(self):
        if self.op not in _COMPARE:
            raise UsageError(f"bad comparison {self.op!r}")


@dataclass(frozen=True)
class SameAssertion:
    a: str
    b: str


@dataclass(frozen=True)
class DistinctAssertion:
    a: str
    b: str


@dataclass(frozen=True)
class TBoxAxiom:
    """left is subsumed by right, to a degree bounded by `degree`."""

    left: ConceptNode
    right: ConceptNode
    op: str  # >= or >
    degree: Degree

    def __post_init__(self):
        if self.op not in (">=", ">"):
            raise UsageError(f"axiom comparison must be >= or >, got {self.op!r}")


# --- interpretations ---------------------------------------------------------

class Interpretation:
    """A finite fuzzy interpretation over a shared algebra.

    Concept assignments default to bottom for unlisted elements; role
    assignments are sparse and hold strictly positive degrees only.
    Treated as immutable after construction.
    """

    def __init__(
        self,
        algebra: Algebra,
        domain: Sequence[str],
        individuals: Mapping[str, str] | None = None,
        concepts: Mapping[str, Mapping[str, Degree]] | None = None,
        roles: Mapping[str, Iterable[tuple[str, str, Degree]]] | None = None,
    ):
        if not domain:
            raise UsageError("interpretation domain must be non-empty")
        self.algebra = algebra
        self.names: tuple[str, ...] = tuple(domain)
        if len(set(self.names)) != len(self.names):
            raise UsageError("duplicate element names in domain")
        self._id = {name: i for i, name in enumerate(self.names)}
        self.n = len(self.names)

        self.individuals: dict[str, int] = {}
        for a, elem in (individuals or {}).items():
            self.individuals[a] = self.element_id(elem)
        self.individual_names: tuple[str, ...] = tuple(sorted(self.individuals))

        self._concepts: dict[str, dict[int, Degree]] = {}
        for cname, assignment in (concepts or {}).items():
            table: dict[int, Degree] = {}
            for elem, degree in assignment.items():
                degree = algebra.parse_degree(degree)
                if degree != algebra.bottom:
                    table[self.element_id(elem)] = degree
            self._concepts[cname] = table
        self.concept_names: tuple[str, ...] = tuple(sorted(self._concepts))

        self._roles: dict[str, dict[tuple[int, int], Degree]] = {}
        for rname, instances in (roles or {}).items():
            table2: dict[tuple[int, int], Degree] = {}
            for entry in instances:
                if len(entry) != 3:
                    raise UsageError(f"role instance {entry!r} must be [from, to, degree]")
                src, tgt, degree = entry
                degree = algebra.parse_degree(degree)
                if degree == algebra.bottom:
                    raise UsageError(
                        f"role instance {rname}({src},{tgt}) has degree 0; omit zero instances"
                    )
                key = (self.element_id(src), self.element_id(tgt))
                if key in table2:
                    raise UsageError(f"duplicate role instance {rname}({src},{tgt})")
                table2[key] = degree
            self._roles[rname] = table2
        self.role_names: tuple[str, ...] = tuple(sorted(self._roles))

        vocab = [("concept", n) for n in self.concept_names]
        vocab += [("role", n) for n in self.role_names]
        vocab += [("individual", n) for n in self.individual_names]
        by_name: dict[str, str] = {}
        for kind, name in vocab:
            if name in by_name:
                raise UsageError(f"name {name!r} used both as {by_name[name]} and {kind}")
            by_name[name] = kind
        self._basic_out_cache: dict[tuple[str, bool], tuple] = {}

    def element_id(self, name: str) -> int:
        try:
            return self._id[name]
        except KeyError:
            raise UsageError(f"unknown element or individual {name!r}") from None

    def individual_element(self, a: str) -> int:
        try:
            return self.individuals[a]
        except KeyError:
            raise UsageError(f"unknown individual {a!r}") from None

    def concept_degree(self, cname: str, x: int) -> Degree:
        if cname not in self._concepts:
            raise UsageError(f"unknown concept name {cname!r}")
        return self._concepts[cname].get(x, self.algebra.bottom)

    def role_degree(self, rname: str, x: int, y: int) -> Degree:
        if rname not in self._roles:
            raise UsageError(f"unknown role name {rname!r}")
        return self._roles[rname].get((x, y), self.algebra.bottom)

    def role_instances(self, rname: str) -> Mapping[tuple[int, int], Degree]:
        if rname not in self._roles:
            raise UsageError(f"unknown role name {rname!r}")
        return self._roles[rname]

    def basic_out(self, rname: str, inverted: bool) -> tuple[tuple[tuple[int, Degree], ...], ...]:
        """Per-element successor lists of a basic role (a role name or its
        inverse): positive-degree edges only, cached."""
        key = (rname, inverted)
        cached = self._basic_out_cache.get(key)
        if cached is None:
            acc: list[list[tuple[int, Degree]]] = [[] for _ in range(self.n)]
            for (x, y), degree in sorted(self.role_instances(rname).items()):
                if inverted:
                    acc[y].append((x, degree))
                else:
                    acc[x].append((y, degree))
            cached = tuple(tuple(lst) for lst in acc)
            self._basic_out_cache[key] = cached
        return cached

    def basic_role_keys(self, phi: FeatureSet) -> list[tuple[str, bool]]:
        keys = [(r, False) for r in self.role_names]
        if phi.inverse:
            keys += [(r, True) for r in self.role_names]
        return keys


def _check_signatures(i1: Interpretation, i2: Interpretation) -> None:
    for attr in ("concept_names", "role_names", "individual_names"):
        if getattr(i1, attr) != getattr(i2, attr):
            raise UsageError(
                f"signature mismatch: {attr} differ "
                f"({getattr(i1, attr)} vs {getattr(i2, attr)})"
            )
    if type(i1.algebra) is not type(i2.algebra) or getattr(i1.algebra, "name", None) != getattr(i2.algebra, "name", None):
        raise UsageError("interpretations use different algebras")


def _const_degree(algebra: Algebra, value) -> Degree:
    if isinstance(value, Fraction):
        return algebra.degree_from_fraction(value)
    return algebra.check(value)


# --- semantics ---------------------------------------------------------------

def eval_role(i: Interpretation, role: RoleNode, phi: FeatureSet) -> list[list[Degree]]:
    """Degree matrix of a complex role over the whole domain."""
    check_features(role, phi)
    return _role_matrix(i, role, phi)


def _role_matrix(i: Interpretation, role: RoleNode, phi: FeatureSet) -> list[list[Degree]]:
    alg = i.algebra
    bottom, top = alg.bottom, alg.top
    n = i.n
    if isinstance(role, RoleName):
        rows = [[bottom] * n for _ in range(n)]
        for (x, y), degree in i.role_instances(role.name).items():
            rows[x][y] = degree
        return rows
    if isinstance(role, UniversalRole):
        return [[top] * n for _ in range(n)]
    if isinstance(role, InverseRole):
        child = _role_matrix(i, role.child, phi)
        return [[child[y][x] for y in range(n)] for x in range(n)]
    if isinstance(role, UnionRole):
        left = _role_matrix(i, role.left, phi)
        right = _role_matrix(i, role.right, phi)
        return [[max(left[x][y], right[x][y]) for y in range(n)] for x in range(n)]
    if isinstance(role, ComposeRole):
        left = _role_matrix(i, role.left, phi)
        right = _role_matrix(i, role.right, phi)
        rows = [[bottom] * n for _ in range(n)]
        for x in range(n):
            lrow = left[x]
            out = rows[x]
            for z in range(n):
                lv = lrow[z]
                if lv == bottom:
                    continue
                rrow = right[z]
                for y in range(n):
                    rv = rrow[y]
                    if rv == bottom:
                        continue
                    cand = alg.tnorm(lv, rv)
                    if cand > out[y]:
                        out[y] = cand
        return rows
    if isinstance(role, StarRole):
        # closure over the (max, tnorm) semiring; path degrees never grow
        # along a path, so cycles cannot improve anything and one
        # all-intermediates sweep with a top diagonal is exact
        rows = [list(r) for r in _role_matrix(i, role.child, phi)]
        for x in range(n):
            rows[x][x] = top
        for k in range(n):
            krow = rows[k]
            for x in range(n):
                xk = rows[x][k]
                if xk == bottom:
                    continue
                xrow = rows[x]
                for y in range(n):
                    ky = krow[y]
                    if ky == bottom:
                        continue
                    cand = alg.tnorm(xk, ky)
                    if cand > xrow[y]:
                        xrow[y] = cand
        return rows
    if isinstance(role, TestRole):
        values = _concept_values(i, role.concept, phi)
        rows = [[bottom] * n for _ in range(n)]
        for x in range(n):
            rows[x][x] = values[x]
        return rows
    raise UsageError(f"unknown role node {role!r}")


def eval_concept(i: Interpretation, concept: ConceptNode, phi: FeatureSet) -> list[Degree]:
    """Degree of a concept at every domain element, in domain order."""
    check_features(concept, phi)
    return _concept_values(i, concept, phi)


def _concept_values(i: Interpretation, concept: ConceptNode, phi: FeatureSet) -> list[Degree]:
    alg = i.algebra
    n = i.n
    if isinstance(concept, ConstantConcept):
        value = _const_degree(alg, concept.value)
        return [value] * n
    if isinstance(concept, ConceptName):
        return [i.concept_degree(concept.name, x) for x in range(n)]
    if isinstance(concept, Nominal):
        elem = i.individual_element(concept.individual)
        return [alg.top if x == elem else alg.bottom for x in range(n)]
    if isinstance(concept, BaazConcept):
        return [alg.baaz(v) for v in _concept_values(i, concept.child, phi)]
    if isinstance(concept, NotConcept):
        return [alg.neg(v) for v in _concept_values(i, concept.child, phi)]
    if isinstance(concept, (AndConcept, OrConcept, ImpliesConcept)):
        left = _concept_values(i, concept.left, phi)
        right = _concept_values(i, concept.right, phi)
        op = {
            AndConcept: alg.tnorm,
            OrConcept: alg.snorm,
            ImpliesConcept: alg.residuum,
        }[type(concept)]
        return [op(left[x], right[x]) for x in range(n)]
    if isinstance(concept, ForallConcept):
        rows = _role_matrix(i, concept.role, phi)
        child = _concept_values(i, concept.child, phi)
        return [
            min(alg.residuum(rows[x][y], child[y]) for y in range(n))
            for x in range(n)
        ]
    if isinstance(concept, ExistsConcept):
        rows = _role_matrix(i, concept.role, phi)
        child = _concept_values(i, concept.child, phi)
        bottom = alg.bottom
        out = []
        for x in range(n):
            best = bottom
            row = rows[x]
            for y in range(n):
                if row[y] == bottom:
                    continue
                cand = alg.tnorm(row[y], child[y])
                if cand > best:
                    best = cand
            out.append(best)
        return out
    raise UsageError(f"unknown concept node {concept!r}")


# --- bisimulations -----------------------------------------------------------

@dataclass(frozen=True)
class BisimReport:
    ok: bool
    condition: int | None = None
    witness: tuple[str, ...] | None = None
    detail: str = ""

    def __str__(self) -> str:
        if self.ok:
            return "pass"
        where = ",".join(self.witness or ())
        return f"condition ({self.condition}) violated at ({where})"


def is_bisimulation(
    i1: Interpretation,
    i2: Interpretation,
    z: Iterable[tuple[int, int]],
    phi: FeatureSet,
) -> BisimReport:
    """Check the crisp bisimulation conditions for a relation between two
    interpretations over the same signature.

    Numbering used in reports: (9) concept-name agreement, (10) forth and
    (11) back over every basic role, (13) nominal agreement when nominals
    are enabled, (14) totality and (15) surjectivity of non-empty
    relations when the universal role is enabled.
    """
    _check_signatures(i1, i2)
    pairs = sorted(set(z))
    for x, xp in pairs:
        if not (0 <= x < i1.n and 0 <= xp < i2.n):
            raise UsageError(f"relation pair ({x},{xp}) outside the two domains")

    def fail(cond: int, x: int, xp: int, detail: str) -> BisimReport:
        return BisimReport(False, cond, (i1.names[x], i2.names[xp]), detail)

    for x, xp in pairs:
        for cname in i1.concept_names:
            d1, d2 = i1.concept_degree(cname, x), i2.concept_degree(cname, xp)
            if d1 != d2:
                return fail(9, x, xp, f"{cname} differs: {d1} vs {d2}")

    zset = set(pairs)
    for rname, inverted in i1.basic_role_keys(phi):
        out1 = i1.basic_out(rname, inverted)
        out2 = i2.basic_out(rname, inverted)
        shown = rname + ("-" if inverted else "")
        for x, xp in pairs:
            for y, degree in out1[x]:
                if not any(dp >= degree and (y, yp) in zset for yp, dp in out2[xp]):
                    return fail(10, x, xp, f"no matching {shown}-successor for {i1.names[y]}")
            for yp, degree_p in out2[xp]:
                if not any(d >= degree_p and (y, yp) in zset for y, d in out1[x]):
                    return fail(11, x, xp, f"no matching {shown}-successor for {i2.names[yp]}")

    if phi.nominal:
        for x, xp in pairs:
            for a in i1.individual_names:
                if (x == i1.individuals[a]) != (xp == i2.individuals[a]):
                    return fail(13, x, xp, f"nominal {a} distinguishes the pair")

    if phi.universal and pairs:
        left = {x for x, _ in pairs}
        right = {xp for _, xp in pairs}
        if len(left) < i1.n:
            x = min(set(range(i1.n)) - left)
            return BisimReport(False, 14, (i1.names[x],), "element unmatched on the left")
        if len(right) < i2.n:
            xp = min(set(range(i2.n)) - right)
            return BisimReport(False, 15, (i2.names[xp],), "element unmatched on the right")

    return BisimReport(True)


def largest_bisimulation(
    i1: Interpretation, i2: Interpretation, phi: FeatureSet
) -> set[tuple[int, int]]:
    """Greatest relation satisfying the bisimulation conditions, by fixpoint
    refinement of the full pair set.

    When the universal role is enabled and the fixpoint is not total and
    surjective, the empty relation is returned: any non-empty bisimulation
    would have to be total and surjective, and all candidates are subsets
    of the fixpoint.
    """
    _check_signatures(i1, i2)
    keep: set[tuple[int, int]] = set()
    for x in range(i1.n):
        for xp in range(i2.n):
            if any(
                i1.concept_degree(c, x) != i2.concept_degree(c, xp)
                for c in i1.concept_names
            ):
                continue
            if phi.nominal and any(
                (x == i1.individuals[a]) != (xp == i2.individuals[a])
                for a in i1.individual_names
            ):
                continue
            keep.add((x, xp))

    basics = i1.basic_role_keys(phi)
    outs = [(i1.basic_out(r, inv), i2.basic_out(r, inv)) for r, inv in basics]
    changed = True
    while changed:
        changed = False
        for x, xp in sorted(keep):
            ok = True
            for out1, out2 in outs:
                if not all(
                    any(dp >= d and (y, yp) in keep for yp, dp in out2[xp])
                    for y, d in out1[x]
                ):
                    ok = False
                    break
                if not all(
                    any(d >= dp and (y, yp) in keep for y, d in out1[x])
                    for yp, dp in out2[xp]
                ):
                    ok = False
                    break
            if not ok:
                keep.discard((x, xp))
                changed = True

    if phi.universal and keep:
        if {x for x, _ in keep} != set(range(i1.n)) or {xp for _, xp in keep} != set(range(i2.n)):
            return set()
    return keep


# --- minimization ------------------------------------------------------------

def interpretation_to_graph(i: Interpretation, phi: FeatureSet) -> FuzzyGraph:
    """Encode an interpretation as a fuzzy graph for partition refinement.

    Vertex labels are the concept names (plus, with nominals enabled, one
    crisp label per individual name); edge labels are the role names
    (plus, with inverses enabled, a reversed copy labelled `r-`).
    """
    vertex_labels: dict[str, dict[str, Degree]] = {}
    for cname in i.concept_names:
        for x in range(i.n):
            degree = i.concept_degree(cname, x)
            if degree != i.algebra.bottom:
                vertex_labels.setdefault(i.names[x], {})[cname] = degree
    if phi.nominal:
        for a in i.individual_names:
            vertex_labels.setdefault(i.names[i.individuals[a]], {})[a] = i.algebra.top

    edges: list[tuple[str, str, str, Degree]] = []
    edge_labels = set(i.role_names)
    for rname in i.role_names:
        for (x, y), degree in i.role_instances(rname).items():
            edges.append((i.names[x], rname, i.names[y], degree))
    if phi.inverse:
        for rname in i.role_names:
            reversed_label = rname + "-"
            if reversed_label in edge_labels:
                raise UsageError(
                    f"role name {reversed_label!r} collides with the inverse label of {rname!r}"
                )
            for (x, y), degree in i.role_instances(rname).items():
                edges.append((i.names[y], reversed_label, i.names[x], degree))

    return FuzzyGraph(i.algebra, i.names, vertex_labels, edges)


def block_name(members: Iterable[str]) -> str:
    return "{" + ",".join(sorted(members)) + "}"


def quotient(i: Interpretation, p: Partition, g: FuzzyGraph | None = None) -> Interpretation:
    """Collapse each partition block to one element.

    Concept degrees come from an arbitrary block member and role degrees
    are the largest degree from any member into the target block; both are
    well defined when p is the stable partition computed for i's graph
    encoding.
    """
    if p.n != i.n or (g is not None and g.n != i.n):
        raise UsageError("partition does not cover the interpretation domain")
    member_lists = p.to_names(i.names)
    domain = [block_name(members) for members in member_lists]
    elem_to_block: dict[int, int] = {}
    for bi, members in enumerate(member_lists):
        for name in members:
            elem_to_block[i.element_id(name)] = bi

    individuals = {a: domain[elem_to_block[x]] for a, x in i.individuals.items()}
    concepts = {
        cname: {
            domain[bi]: i.concept_degree(cname, i.element_id(members[0]))
            for bi, members in enumerate(member_lists)
        }
        for cname in i.concept_names
    }
    roles: dict[str, dict[tuple[str, str], Degree]] = {}
    for rname in i.role_names:
        table: dict[tuple[str, str], Degree] = {}
        for (x, y), degree in i.role_instances(rname).items():
            key = (domain[elem_to_block[x]], domain[elem_to_block[y]])
            if degree > table.get(key, i.algebra.bottom):
                table[key] = degree
        roles[rname] = table

    return Interpretation(
        i.algebra,
        domain,
        individuals,
        concepts,
        {
            rname: [(src, tgt, degree) for (src, tgt), degree in table.items()]
            for rname, table in roles.items()
        },
    )


def minimize(i: Interpretation, phi: FeatureSet) -> Interpretation:
    """Quotient by the partition of the largest auto-bisimulation."""
    g = interpretation_to_graph(i, phi)
    p = compcb(g)
    return quotient(i, p, g)


def canonical_relation(
    i: Interpretation, p: Partition, reduced: Interpretation
) -> set[tuple[int, int]]:
    """The pairs (element, its block) between an interpretation and its quotient."""
    rel: set[tuple[int, int]] = set()
    for members in p.to_names(i.names):
        target = reduced.element_id(block_name(members))
        for name in members:
            rel.add((i.element_id(name), target))
    return rel


def prune_unreachable(i: Interpretation, phi: FeatureSet) -> Interpretation:
    """Drop every element not reachable from a named individual via
    positive-degree basic roles (inverse steps included when enabled)."""
    if not i.individual_names:
        raise UsageError("pruning needs at least one named individual")
    outs = [i.basic_out(r, inv) for r, inv in i.basic_role_keys(phi)]
    seen: set[int] = set()
    frontier = sorted({x for x in i.individuals.values()})
    seen.update(frontier)
    while frontier:
        nxt: list[int] = []
        for x in frontier:
            for out in outs:
                for y, _degree in out[x]:
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
        frontier = sorted(nxt)

    keep = [x for x in range(i.n) if x in seen]
    names = [i.names[x] for x in keep]
    kept = set(keep)
    concepts = {
        cname: {
            i.names[x]: degree
            for x, degree in i._concepts[cname].items()
            if x in kept
        }
        for cname in i.concept_names
    }
    roles = {
        rname: [
            (i.names[x], i.names[y], degree)
            for (x, y), degree in i.role_instances(rname).items()
            if x in kept and y in kept
        ]
        for rname in i.role_names
    }
    individuals = {a: i.names[x] for a, x in i.individuals.items()}
    return Interpretation(i.algebra, names, individuals, concepts, roles)


# --- satisfaction ------------------------------------------------------------

def satisfies(i: Interpretation, phi: FeatureSet, stmt) -> bool:
    """Whether the interpretation validates an assertion or axiom."""
    alg = i.algebra
    if isinstance(stmt, TBoxAxiom):
        compare = _COMPARE[stmt.op]
        bound = _const_degree(alg, stmt.degree)
        values = eval_concept(i, ImpliesConcept(stmt.left, stmt.right), phi)
        return all(compare(v, bound) for v in values)
    if isinstance(stmt, ConceptAssertion):
        compare = _COMPARE[stmt.op]
        bound = _const_degree(alg, stmt.degree)
        x = i.individual_element(stmt.individual)
        return compare(eval_concept(i, stmt.concept, phi)[x], bound)
    if isinstance(stmt, RoleAssertion):
        compare = _COMPARE[stmt.op]
        bound = _const_degree(alg, stmt.degree)
        x = i.individual_element(stmt.a)
        y = i.individual_element(stmt.b)
        return compare(eval_role(i, stmt.role, phi)[x][y], bound)
    if isinstance(stmt, SameAssertion):
        return i.individual_element(stmt.a) == i.individual_element(stmt.b)
    if isinstance(stmt, DistinctAssertion):
        return i.individual_element(stmt.a) != i.individual_element(stmt.b)
    raise UsageError(f"unknown statement {stmt!r}")


# --- JSON formats ------------------------------------------------------------

def interpretation_from_json(doc, algebra: Algebra) -> Interpretation:
    """Schema: {"domain": [names], "individuals": {a: name},
    "concepts": {A: {name: degree}}, "roles": {r: [[from, to, degree]]}}."""
    if not isinstance(doc, dict) or "domain" not in doc:
        raise UsageError("interpretation document must be a JSON object with a \"domain\" list")
    return Interpretation(
        algebra,
        doc["domain"],
        doc.get("individuals", {}),
        doc.get("concepts", {}),
        {r: [tuple(e) for e in entries] for r, entries in doc.get("roles", {}).items()},
    )


def interpretation_to_json(i: Interpretation) -> dict:
    fmt = i.algebra.format_degree
    return {
        "domain": list(i.names),
        "individuals": {a: i.names[x] for a, x in sorted(i.individuals.items())},
        "concepts": {
            cname: {
                i.names[x]: fmt(degree)
                for x, degree in sorted(i._concepts[cname].items())
            }
            for cname in i.concept_names
        },
        "roles": {
            rname: [
                [i.names[x], i.names[y], fmt(degree)]
                for (x, y), degree in sorted(i.role_instances(rname).items())
            ]
            for rname in i.role_names
        },
    }


def load_interpretation(path: str, algebra: Algebra) -> Interpretation:
    with open(path, "r", encoding="utf-8") as f:
        try:
            doc = json.load(f, parse_float=Fraction)
        except json.JSONDecodeError as exc:
            raise UsageError(f"{path}: invalid JSON: {exc}") from None
    return interpretation_from_json(doc, algebra)


def load_relation(path: str, i1: Interpretation, i2: Interpretation) -> set[tuple[int, int]]:
    """Load a relation as a JSON array of [left-name, right-name] pairs."""
    with open(path, "r", encoding="utf-8") as f:
        try:
            doc = json.load(f)
        except json.JSONDecodeError as exc:
            raise UsageError(f"{path}: invalid JSON: {exc}") from None
    if not isinstance(doc, list):
        raise UsageError(f"{path}: relation document must be a JSON array of pairs")
    pairs: set[tuple[int, int]] = set()
    for entry in doc:
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise UsageError(f"relation entry {entry!r} must be a [left, right] pair")
        pairs.add((i1.element_id(entry[0]), i2.element_id(entry[1])))
    return pairs

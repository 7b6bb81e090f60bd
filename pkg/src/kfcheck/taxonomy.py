"""Static taxonomy of metamodel kinds: labels, isa groups and satisfiability."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Iterable


@dataclass(frozen=True)
class Group:
    """One isa fan-out: ``children`` are subclasses of ``parent``.

    ``origin`` says which axiom group the generated formulas belong to.
    """

    parent: str
    children: tuple[str, ...]
    disjoint: bool = False
    complete: bool = False
    origin: str = "TAX-ENT"


@dataclass(frozen=True)
class TaxonomyCatalog:
    roots: tuple[str, ...]
    groups: tuple[Group, ...]
    # disjointness not expressed by a group, as (a, b, origin)
    extra_disjoint: tuple[tuple[str, str, str], ...] = ()

    @cached_property
    def nodes(self) -> frozenset[str]:
        out = set(self.roots)
        for grp in self.groups:
            out.add(grp.parent)
            out.update(grp.children)
        return frozenset(out)

    @cached_property
    def isa(self) -> frozenset[tuple[str, str]]:
        return frozenset((c, g.parent) for g in self.groups for c in g.children)

    @cached_property
    def parents(self) -> dict[str, tuple[str, ...]]:
        out: dict[str, list[str]] = {n: [] for n in self.nodes}
        for child, parent in sorted(self.isa):
            out[child].append(parent)
        return {k: tuple(v) for k, v in out.items()}

    @cached_property
    def ancestors(self) -> dict[str, frozenset[str]]:
        memo: dict[str, frozenset[str]] = {}

        def up(label: str, trail: tuple[str, ...]) -> frozenset[str]:
            if label in memo:
                return memo[label]
            if label in trail:
                raise ValueError(f"isa cycle through {label}")
            acc = {label}
            for p in self.parents[label]:
                acc |= up(p, trail + (label,))
            memo[label] = frozenset(acc)
            return memo[label]

        for n in self.nodes:
            up(n, ())
        return memo

    @cached_property
    def disjoint_pairs(self) -> frozenset[frozenset[str]]:
        pairs = set()
        for g in self.groups:
            if g.disjoint:
                for i, a in enumerate(g.children):
                    for b in g.children[i + 1:]:
                        pairs.add(frozenset((a, b)))
        for a, b, _ in self.extra_disjoint:
            pairs.add(frozenset((a, b)))
        return frozenset(pairs)

    def closure(self, labels: Iterable[str]) -> frozenset[str]:
        out: set[str] = set()
        for label in labels:
            out |= self.ancestors[label]
        return frozenset(out)

    def validate(self) -> None:
        """Raise ValueError if the catalog breaks its structural invariants."""
        self.ancestors  # cycle check
        for n in self.nodes:
            if n not in self.roots and not self.parents[n]:
                raise ValueError(f"label {n} has no parent and is not a root")
        for r in self.roots:
            if self.parents[r]:
                raise ValueError(f"root {r} has a parent")
        for a, b, _ in self.extra_disjoint:
            if a not in self.nodes or b not in self.nodes:
                raise ValueError(f"disjointness on unknown label {a}/{b}")


def _g(parent, children, disjoint=False, complete=False, origin="TAX-ENT"):
    return Group(parent, tuple(children.split()), disjoint, complete, origin)


def _c(parent, children, disjoint=False, complete=False):
    return _g(parent, children, disjoint, complete, origin="TAX-CON")


PUBLISHED = TaxonomyCatalog(
    roots=("Entity", "Dimension", "ValueRange", "ValueEnumeration", "Operator"),
    groups=(
        _g("Entity", "Relationship Role EntityType Constraint", True, True),
        _g("Relationship", "QualifiedRelationship"),
        _g("Relationship", "PartWhole AttributiveProperty Subsumption", True),
        _g("PartWhole", "SharedAggregate"),
        _g("SharedAggregate", "CompositeAggregate"),
        _g("AttributiveProperty", "Attribute CompositeAttribute DimensionalAttribute", True, True),
        _g("Attribute", "MultivaluedAttribute MappedTo", True),
        _g("EntityType", "ValueProperty DataType ObjectType Qualifier", True, True),
        _g("ValueProperty", "ValueType DimensionalValueType", True, True),
        _g("ObjectType", "WeakObjectType NestedObjectType AssociativeObjectType"),
        _g("PartWhole", "Part", origin="AGG-PART"),
        _c("Constraint", "CardinalityConstraint SubsetConstraint JoinConstraint "
           "UniquenessConstraint RelationshipConstraint DisjointnessConstraint "
           "EqualityConstraint ValueConstraint CompletenessConstraint "
           "ValueComparisonConstraint IdentificationConstraint MandatoryConstraint"),
        _c("CardinalityConstraint", "CompoundCardinalityConstraint "
           "AttributivePropertyCardinality ObjectTypeCardinality", True, True),
        _c("JoinConstraint", "JoinSubsetConstraint JoinEqualityConstraint "
           "JoinDisjointnessConstraint", True),
        _c("UniquenessConstraint", "InternalUniquenessConstraint "
           "ExternalUniquenessConstraint", True, True),
        _c("RelationshipConstraint", "Transitivity Antisymmetry Irreflexivity "
           "LocalReflexivity Symmetry", False, True),
        _c("Antisymmetry", "Asymmetry"),
        _c("Irreflexivity", "Asymmetry"),
        _c("Asymmetry", "Acyclicity"),
        _c("Irreflexivity", "Intransitivity"),
        _c("Intransitivity", "StronglyIntransitivity"),
        _c("LocalReflexivity", "GlobalReflexivity"),
        _c("LocalReflexivity", "PurelyReflexivity"),
        _c("DisjointnessConstraint", "DisjointRoles DisjointRelationships "
           "DisjointObjectTypes DisjointEntities", True, True),
        _c("DisjointRoles", "JoinDisjointnessConstraint"),
        _c("EqualityConstraint", "RoleEquality RelationshipEquality ObjectTypeEquality",
           True, True),
        _c("RoleEquality", "JoinEqualityConstraint"),
        _c("ValueConstraint", "ValueTypeConstraint RoleValueConstraint "
           "AttributeValueConstraint", True, True),
        _c("IdentificationConstraint", "ExternalIdentification InternalIdentification",
           True, True),
        _c("ExternalIdentification", "QualifiedIdentification WeakIdentification", True),
        _c("InternalIdentification", "SingleIdentification"),
        _c("MandatoryConstraint", "Mandatory DisjunctiveMandatory", True),
        _c("DisjunctiveMandatory", "InclusiveMandatory"),
    ),
    extra_disjoint=(
        ("QualifiedRelationship", "AttributiveProperty", "TAX-ENT"),
        ("QualifiedRelationship", "Subsumption", "TAX-ENT"),
        ("AttributiveProperty", "Subsumption", "TAX-ENT"),
    ),
)

KIND_LABELS: frozenset[str] = PUBLISHED.nodes


def _mutate_disjoint_relprops(cat: TaxonomyCatalog) -> TaxonomyCatalog:
    groups = tuple(
        replace(g, disjoint=True)
        if g.parent == "RelationshipConstraint" and len(g.children) > 1 else g
        for g in cat.groups
    )
    return replace(cat, groups=groups)


def _mutate_literal_mandatory(cat: TaxonomyCatalog) -> TaxonomyCatalog:
    extra = cat.extra_disjoint + (("MandatoryConstraint", "DisjunctiveMandatory", "TAX-CON"),)
    return replace(cat, extra_disjoint=extra)


MUTATIONS = {
    # the earlier {disjoint, complete} marking on relationship-constraint subtypes
    "disjoint-relprops": _mutate_disjoint_relprops,
    # parent/child disjointness for mandatory constraints, read literally
    "literal-mandatory": _mutate_literal_mandatory,
}


def mutated(names: Iterable[str], base: TaxonomyCatalog = PUBLISHED) -> TaxonomyCatalog:
    cat = base
    for name in names:
        try:
            cat = MUTATIONS[name](cat)
        except KeyError:
            raise ValueError(
                f"unknown mutation {name!r}; choose from {', '.join(sorted(MUTATIONS))}"
            ) from None
    return cat


@dataclass
class _Search:
    cat: TaxonomyCatalog
    complete_groups: list[Group] = field(default_factory=list)

    def __post_init__(self):
        self.complete_groups = [g for g in self.cat.groups if g.complete]

    def clash(self, kinds: frozenset[str]) -> bool:
        return any(pair <= kinds for pair in self.cat.disjoint_pairs)

    def run(self, kinds: frozenset[str]) -> bool:
        if self.clash(kinds):
            return False
        for g in self.complete_groups:
            if g.parent in kinds and not kinds.intersection(g.children):
                return any(self.run(kinds | self.cat.closure([c])) for c in g.children)
        return True


def taxonomy_satisfiability(cat: TaxonomyCatalog = PUBLISHED) -> dict[str, bool]:
    """Per label, whether one entity can carry it without breaking any group.

    Backtracks over the children of every complete group whose parent is
    present, pruning on disjointness clashes.
    """
    search = _Search(cat)
    return {label: search.run(cat.closure([label])) for label in sorted(cat.nodes)}

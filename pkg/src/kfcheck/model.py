"""In-memory conceptual model: entities with kind sets, typed links, attributes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Union

from .taxonomy import KIND_LABELS, PUBLISHED, TaxonomyCatalog


class ModelError(ValueError):
    """A structurally invalid model (not an axiom violation)."""


class UnknownKindError(ModelError):
    pass


class _Many:
    """Unbounded maximum; compares equal only to itself."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "many"

    def __reduce__(self):
        return (_Many, ())


MANY = _Many()

AttrValue = Union[int, _Many, str]

# predicate -> arity
LINK_ARITY: dict[str, int] = {
    "Contains": 2, "RolePlaying": 3, "ReifiedAs": 2, "Sub": 2, "Super": 2,
    "PartLink": 2, "WholeLink": 2, "DeclaredOn": 2, "HasComponent": 2,
    "DomainLink": 2, "RangeLink": 2, "DimensionalAttribution": 3,
    "DimensionalValueTyping": 3, "ExtUnique": 3, "Identifies": 2,
    "PartiallyIdentifies": 2, "HasStrong": 2, "CardR": 3, "CardO": 3,
    "Frequency": 3, "ConstrainingValues": 3, "HasType": 2, "First": 2,
    "Second": 2, "ComparisonOperatorOf": 2, "OnValueOfType": 2,
    "HasParticipant": 2, "Joining": 3, "ParticipatesIn": 2,
}
TERNARY = tuple(p for p, n in LINK_ARITY.items() if n == 3)

# admissible kinds per argument position (alternatives)
SIGNATURES: dict[str, tuple[tuple[str, ...], ...]] = {
    "Contains": (("Relationship",), ("Role",)),
    "RolePlaying": (("Role",), ("CardinalityConstraint",), ("EntityType",)),
    "ReifiedAs": (("Relationship",), ("NestedObjectType",)),
    "Sub": (("Subsumption",), ("Entity",)),
    "Super": (("Subsumption",), ("Entity",)),
    "PartLink": (("PartWhole",), ("AttributiveProperty", "DataType", "ObjectType")),
    "WholeLink": (("PartWhole",), ("CompositeAttribute", "DataType", "ObjectType")),
    "DeclaredOn": (("Constraint", "Qualifier"), ("Entity",)),
    "HasComponent": (("Qualifier",), ("DimensionalAttribute", "Attribute")),
    "DomainLink": (("AttributiveProperty", "ValueProperty"),
                   ("Relationship", "ObjectType", "ValueType")),
    "RangeLink": (("AttributiveProperty",), ("DataType",)),
    "DimensionalAttribution": (("Dimension",), ("DataType",), ("ObjectType", "Relationship")),
    "DimensionalValueTyping": (("Dimension",), ("DataType",), ("DimensionalValueType",)),
    "ExtUnique": (("ExternalUniquenessConstraint",), ("Role",), ("Relationship",)),
    "Identifies": (("IdentificationConstraint",), ("ObjectType",)),
    "PartiallyIdentifies": (("QualifiedIdentification",), ("QualifiedRelationship",)),
    "HasStrong": (("WeakObjectType",), ("ObjectType",)),
    "CardR": (("AttributiveProperty",), ("Relationship",), ("CardinalityConstraint",)),
    "CardO": (("AttributiveProperty",), ("ObjectType",), ("CardinalityConstraint",)),
    "Frequency": (("Relationship",), ("Role",), ("CompoundCardinalityConstraint",)),
    "ConstrainingValues": (("ValueConstraint",), ("ValueProperty", "Role", "Attribute"),
                           ("ValueEnumeration", "ValueRange")),
    "HasType": (("ValueRange",), ("DataType",)),
    "First": (("ValueComparisonConstraint", "RelationshipConstraint"), ("Role",)),
    "Second": (("ValueComparisonConstraint", "RelationshipConstraint"), ("Role",)),
    "ComparisonOperatorOf": (("ValueComparisonConstraint",), ("Operator",)),
    "OnValueOfType": (("ValueComparisonConstraint",), ("DataType",)),
    "HasParticipant": (("CompletenessConstraint", "DisjointEntities"), ("Entity",)),
    "Joining": (("Relationship",), ("JoinConstraint",), ("Role",)),
    "ParticipatesIn": (("Relationship", "Role"), ("JoinConstraint",)),
}
ATTR_PREDICATES = ("MinimumCardinality", "MaximumCardinality", "MinimumValue", "MaximumValue")
NOMINALS = ("Less", "Leq", "Eq", "Neq", "Geq", "Greater")


@dataclass(frozen=True, order=True)
class Link:
    pred: str
    args: tuple[str, ...]

    def __str__(self):
        return f"{self.pred}({', '.join(self.args)})"


def value_sort_key(v: AttrValue):
    if isinstance(v, bool):
        raise TypeError("bool is not an attribute value")
    if isinstance(v, int):
        return (0, v, "")
    if v is MANY:
        return (1, 0, "")
    return (2, 0, v)


def format_value(v: AttrValue) -> str:
    if v is MANY:
        return "many"
    if isinstance(v, int):
        return str(v)
    return '"' + v.replace("\\", "\\\\").replace('"', '\\"') + '"'


@dataclass(frozen=True)
class Attr:
    pred: str
    subject: str
    value: AttrValue

    def sort_key(self):
        return (self.pred, self.subject, value_sort_key(self.value))

    def __str__(self):
        return f"{self.pred}({self.subject}, {format_value(self.value)})"


class ModelGraph:
    """A finite instantiation of the metamodel.

    Entity ids double as display names. Nominal operators (``Less`` ...)
    are implicit constants usable as link arguments; they cannot be declared.
    Duplicate links or attributes collapse.
    """

    def __init__(
        self,
        entities: Mapping[str, Iterable[str]] | None = None,
        links: Iterable[Link | tuple] = (),
        attrs: Iterable[Attr | tuple] = (),
    ):
        self.entities: dict[str, frozenset[str]] = {
            e: frozenset(ks) for e, ks in (entities or {}).items()
        }
        for e in self.entities:
            if e in NOMINALS:
                raise ModelError(f"{e} is a reserved operator name")
        self.links: frozenset[Link] = frozenset(
            l if isinstance(l, Link) else Link(l[0], tuple(l[1:])) for l in links
        )
        self.attrs: frozenset[Attr] = frozenset(
            a if isinstance(a, Attr) else Attr(*a) for a in attrs
        )
        for l in self.links:
            arity = LINK_ARITY.get(l.pred)
            if arity is None:
                raise ModelError(f"unknown link predicate {l.pred}")
            if len(l.args) != arity:
                raise ModelError(f"{l.pred} takes {arity} arguments, got {len(l.args)}")
            for a in l.args:
                if a not in self.entities and a not in NOMINALS:
                    raise ModelError(f"link {l} references undeclared {a}")
        for a in self.attrs:
            if a.pred not in ATTR_PREDICATES:
                raise ModelError(f"unknown attribute {a.pred}")
            if a.subject not in self.entities:
                raise ModelError(f"attribute {a} on undeclared {a.subject}")
            v = a.value
            if isinstance(v, bool) or not (v is MANY or isinstance(v, (int, str))):
                raise ModelError(f"bad attribute value {v!r}")
            if isinstance(v, int) and v < 0:
                raise ModelError(f"negative bound in {a}")

    def __eq__(self, other):
        if not isinstance(other, ModelGraph):
            return NotImplemented
        return (self.entities == other.entities and self.links == other.links
                and self.attrs == other.attrs)

    def __hash__(self):
        return hash((frozenset(self.entities.items()), self.links, self.attrs))

    def __repr__(self):
        return (f"ModelGraph({len(self.entities)} entities, {len(self.links)} links, "
                f"{len(self.attrs)} attrs)")

    def kinds(self, x: str) -> frozenset[str]:
        if x in NOMINALS:
            return frozenset({"Operator"})
        return self.entities.get(x, frozenset())

    def sorted_links(self) -> list[Link]:
        return sorted(self.links)

    def sorted_attrs(self) -> list[Attr]:
        return sorted(self.attrs, key=Attr.sort_key)

    def max_contains(self) -> int:
        counts: dict[str, int] = {}
        for l in self.links:
            if l.pred == "Contains":
                counts[l.args[0]] = counts.get(l.args[0], 0) + 1
        return max(counts.values(), default=0)


def kind_closure(g: ModelGraph, cat: TaxonomyCatalog = PUBLISHED) -> ModelGraph:
    """Close every entity's kinds upward under isa. Idempotent."""
    closed = {}
    for e, ks in g.entities.items():
        unknown = sorted(k for k in ks if k not in cat.nodes)
        if unknown:
            raise UnknownKindError(f"entity {e}: unknown kind {unknown[0]}")
        closed[e] = cat.closure(ks)
    return ModelGraph(closed, g.links, g.attrs)


def most_specific(kinds: Iterable[str], cat: TaxonomyCatalog = PUBLISHED) -> list[str]:
    """Kinds not implied by another kind in the set."""
    kinds = set(kinds)
    implied = set()
    for k in kinds:
        implied |= cat.ancestors[k] - {k}
    return sorted(kinds - implied)


_PARTICIPANT_REL = ("Sub", "Super", "PartLink", "WholeLink")
_PARTICIPANT_CON = ("First", "Second")


def derive_participants(g: ModelGraph) -> frozenset[tuple[str, str]]:
    """Derived ``Participant``: Sub/Super/Part/Whole from relationships,
    First/Second from value-comparison and relationship constraints."""
    out = set()
    for l in g.links:
        x, *rest = l.args
        if l.pred in _PARTICIPANT_REL and "Relationship" in g.kinds(x):
            out.add((x, rest[0]))
        elif l.pred in _PARTICIPANT_CON:
            ks = g.kinds(x)
            if "ValueComparisonConstraint" in ks or "RelationshipConstraint" in ks:
                out.add((x, rest[0]))
    return frozenset(out)


__all__ = [
    "ATTR_PREDICATES", "Attr", "KIND_LABELS", "LINK_ARITY", "Link", "MANY",
    "ModelError", "ModelGraph", "NOMINALS", "SIGNATURES", "TERNARY", "UnknownKindError",
    "derive_participants", "format_value", "kind_closure", "most_specific",
]

"""OWL 2 functional-syntax export of the metamodel schema and of user models.

Ternary predicates are reified. Four of them get a fresh class ``<P>R``
under ``ReifiedNAry`` with numbered properties ``<p>1`` .. ``<p>3``. The
other five already have a participant that occurs in exactly one tuple (the
constraint or value type the tuple describes). That participant's class
becomes the reified class, so no new class is introduced.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field

from .axioms import STAR, catalog
from .model import (LINK_ARITY, MANY, NOMINALS, SIGNATURES,
                    TERNARY, ModelGraph, kind_closure, most_specific)
from .taxonomy import PUBLISHED, TaxonomyCatalog

BASE_IRI = "http://example.org/kf"

# ternary predicate -> (argument position, class) when already reified
SIMPLIFIED = {
    "ExtUnique": (0, "ExternalUniquenessConstraint"),
    "DimensionalValueTyping": (2, "DimensionalValueType"),
    "Frequency": (2, "CompoundCardinalityConstraint"),
    "ConstrainingValues": (0, "ValueConstraint"),
    "Joining": (1, "JoinConstraint"),
}
FULL_FORM = tuple(p for p in TERNARY if p not in SIMPLIFIED)

_SUBCLASS, _DISJOINT, _PROPERTY, _ASSERTION = range(4)
_SECTION_OF = {"SubClassOf": _SUBCLASS, "EquivalentClasses": _SUBCLASS,
               "DisjointClasses": _DISJOINT, "DisjointUnion": _DISJOINT}


def reified_class(pred: str) -> str:
    return SIMPLIFIED[pred][1] if pred in SIMPLIFIED else pred + "R"


def numbered(pred: str, i: int) -> str:
    return pred[0].lower() + pred[1:] + str(i)


class ExportRefused(Exception):
    def __init__(self, violations):
        self.violations = violations
        ids = sorted({v.axiom_id for v in violations})
        super().__init__(f"model has {len(violations)} C2 violations: {', '.join(ids)}")


@dataclass
class OwlDocument:
    iri: str = BASE_IRI
    declarations: set[tuple[str, str]] = field(default_factory=set)
    axioms: set[tuple[int, str]] = field(default_factory=set)
    comments: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    # individual name -> model element it stands for
    origin: dict[str, str] = field(default_factory=dict)

    def declare(self, kind: str, name: str) -> str:
        self.declarations.add((kind, name))
        return f":{name}"

    def add(self, text: str, section: int | None = None):
        if section is None:
            section = _SECTION_OF.get(text.split("(", 1)[0], _PROPERTY)
        self.axioms.add((section, text))

    def ordered_axioms(self) -> list[str]:
        return [t for _, t in sorted(self.axioms)]

    def render(self) -> str:
        lines = [
            f"Prefix(:=<{self.iri}#>)",
            "Prefix(owl:=<http://www.w3.org/2002/07/owl#>)",
            "Prefix(rdf:=<http://www.w3.org/1999/02/22-rdf-syntax-ns#>)",
            "Prefix(rdfs:=<http://www.w3.org/2000/01/rdf-schema#>)",
            "Prefix(xsd:=<http://www.w3.org/2001/XMLSchema#>)",
            "",
            f"Ontology(<{self.iri}>",
        ]
        lines += [f"Annotation(rdfs:comment {_literal(c)})" for c in self.comments]
        lines += [f"Declaration({k}(:{n}))" for k, n in sorted(self.declarations)]
        lines += self.ordered_axioms()
        lines.append(")")
        return "\n".join(lines) + "\n"

    def counts(self) -> dict[str, int]:
        kinds = Counter(k for k, _ in self.declarations)
        return {
            "classes": kinds["Class"],
            "object_properties": kinds["ObjectProperty"],
            "data_properties": kinds["DataProperty"],
            "individuals": kinds["NamedIndividual"],
            "axioms": len(self.axioms),
            "annotations": len(self.comments),
        }

    def lint(self) -> list[str]:
        """Names used but not declared, and numbered properties used off their class."""
        declared = {n for _, n in self.declarations}
        problems = []
        numbered_props = {numbered(p, i): p for p in TERNARY for i in (1, 2, 3)}
        for text in self.ordered_axioms():
            bare = re.sub(r'"(?:[^"\\]|\\.)*"', '""', text)
            for name in re.findall(r"(?<![\w:]):([A-Za-z_]\w*)", bare):
                if name not in declared:
                    problems.append(f"undeclared :{name} in {text}")
            m = re.match(r"ObjectPropertyDomain\(:(\w+) (.+)\)$", text)
            if m and m.group(1) in numbered_props:
                if m.group(2) != f":{reified_class(numbered_props[m.group(1)])}":
                    problems.append(f"numbered property with foreign domain: {text}")
        return problems


def _literal(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _class_expr(alternatives) -> str:
    if len(alternatives) == 1:
        return f":{alternatives[0]}"
    return "ObjectUnionOf(" + " ".join(f":{a}" for a in sorted(alternatives)) + ")"


# ------------------------------------------------------------------ reification

@dataclass
class ReificationReport:
    classes: list[str] = field(default_factory=list)
    properties: list[str] = field(default_factory=list)
    simplified: list[str] = field(default_factory=list)

    @property
    def empty(self) -> bool:
        return not (self.classes or self.simplified)


# participant-side multiplicities kept after reification: (pred, position, op, n)
_PARTICIPANT_CARD = (("RolePlaying", 1, "Min", 1),)


def reify_naries(doc: OwlDocument, preds=TERNARY) -> ReificationReport:
    """Apply the reification procedure to the given ternary predicates."""
    rep = ReificationReport()
    preds = [p for p in TERNARY if p in set(preds)]
    if not preds:
        return rep
    nary = doc.declare("Class", "ReifiedNAry")
    for p in preds:
        cls_name = reified_class(p)
        cls = doc.declare("Class", cls_name)
        doc.add(f"SubClassOf({cls} {nary})")
        (rep.simplified if p in SIMPLIFIED else rep.classes).append(cls_name)
        for i, alts in enumerate(SIGNATURES[p], 1):
            prop = doc.declare("ObjectProperty", numbered(p, i))
            rep.properties.append(numbered(p, i))
            doc.add(f"ObjectPropertyDomain({prop} {cls})")
            doc.add(f"ObjectPropertyRange({prop} {_class_expr(alts)})")
            doc.add(f"SubClassOf({cls} ObjectExactCardinality(1 {prop}))")
        for q, pos, op, n in _PARTICIPANT_CARD:
            if q == p:
                (target,) = SIGNATURES[p][pos - 1]
                doc.add(f"SubClassOf(:{target} Object{op}Cardinality({n} "
                        f"ObjectInverseOf(:{numbered(p, pos)})))")
    return rep


# ------------------------------------------------------------------ schema

# class-side multiplicities of binary links: (class, op, n, property, inverse, filler)
_CARDINALITIES = (
    ("Relationship", "Min", 2, "Contains", False, None),
    ("Role", "Exact", 1, "Contains", True, None),
    ("NestedObjectType", "Exact", 1, "ReifiedAs", True, None),
    ("Relationship", "Max", 1, "ReifiedAs", False, None),
    ("Subsumption", "Exact", 1, "Sub", False, None),
    ("Subsumption", "Exact", 1, "Super", False, None),
    ("Part", "Exact", 1, "PartLink", False, "AttributiveProperty"),
    ("Part", "Exact", 1, "WholeLink", False, "CompositeAttribute"),
    ("CompositeAttribute", "Min", 2, "WholeLink", True, "Part"),
    ("CompositeAggregate", "Exact", 1, "PartLink", False, None),
    ("CompositeAggregate", "Exact", 1, "WholeLink", False, None),
    ("Qualifier", "Min", 1, "HasComponent", False, None),
    ("AttributiveProperty", "Exact", 1, "RangeLink", False, "DataType"),
    ("MappedTo", "Exact", 1, "RangeLink", False, "DataType"),
    ("ValueProperty", "Min", 1, "DomainLink", False, "ObjectType"),
    ("MandatoryConstraint", "Min", 1, "DeclaredOn", False, "Role"),
    ("Mandatory", "Exact", 1, "DeclaredOn", False, "Role"),
    ("DisjunctiveMandatory", "Min", 2, "DeclaredOn", False, "Role"),
    ("InternalUniquenessConstraint", "Min", 1, "DeclaredOn", False, "Role"),
    ("ExternalIdentification", "Min", 1, "DeclaredOn", False, None),
    ("SingleIdentification", "Exact", 1, "DeclaredOn", False, None),
    ("RelationshipEquality", "Min", 2, "DeclaredOn", False, None),
    ("DisjointRelationships", "Min", 2, "DeclaredOn", False, None),
    ("RoleEquality", "Min", 2, "DeclaredOn", False, None),
    ("DisjointRoles", "Min", 2, "DeclaredOn", False, None),
    ("CompletenessConstraint", "Exact", 1, "DeclaredOn", False, None),
    ("DisjointEntities", "Exact", 1, "DeclaredOn", False, None),
    ("IdentificationConstraint", "Exact", 1, "Identifies", False, None),
    ("ObjectType", "Min", 1, "Identifies", True, None),
    ("QualifiedIdentification", "Exact", 1, "PartiallyIdentifies", False, None),
    ("WeakObjectType", "Exact", 1, "HasStrong", False, None),
    ("ValueRange", "Exact", 1, "HasType", False, None),
    ("ValueComparisonConstraint", "Exact", 1, "First", False, None),
    ("ValueComparisonConstraint", "Exact", 1, "Second", False, None),
    ("RelationshipConstraint", "Exact", 1, "First", False, None),
    ("RelationshipConstraint", "Exact", 1, "Second", False, None),
    ("ValueComparisonConstraint", "Exact", 1, "ComparisonOperatorOf", False, "Comparison"),
    ("ValueComparisonConstraint", "Exact", 1, "OnValueOfType", False, None),
    ("CompletenessConstraint", "Min", 2, "HasParticipant", False, None),
    ("DisjointEntities", "Min", 2, "HasParticipant", False, None),
    ("JoinConstraint", "Exact", 4, "ParticipatesIn", True, "Role"),
)

_ATTR_FLAT = {
    # attribute -> (owner class, part multiplicity, data property)
    "MinimumCardinality": ("CardinalityConstraint", "Max", "hasCValue"),
    "MaximumCardinality": ("CardinalityConstraint", "Max", "hasCValue"),
    "MinimumValue": ("ValueRange", "Exact", "hasValue"),
    "MaximumValue": ("ValueRange", "Exact", "hasValue"),
}
_DATA_RANGES = {
    "hasCValue": 'DataUnionOf(xsd:nonNegativeInteger DataOneOf("many"))',
    "hasValue": "rdfs:Literal",
}
_MEREOLOGY = {
    "partOf": "parthood between a part and its whole",
    "properPartOf": "proper parthood; irreflexive partOf",
    "hasPart": "inverse of partOf; links a constraint to its flattened attributes",
}


def export_schema(cat: TaxonomyCatalog = PUBLISHED, max_arity: int = 10) -> OwlDocument:
    doc = OwlDocument()
    for label in sorted(cat.nodes):
        doc.declare("Class", label)
    for g in cat.groups:
        parent = f":{g.parent}"
        for c in g.children:
            doc.add(f"SubClassOf(:{c} {parent})")
        kids = " ".join(f":{c}" for c in g.children)
        if g.disjoint and g.complete:
            doc.add(f"DisjointUnion({parent} {kids})")
        elif g.disjoint and len(g.children) > 1:
            doc.add(f"DisjointClasses({kids})")
        elif g.complete:
            expr = kids if len(g.children) == 1 else f"ObjectUnionOf({kids})"
            doc.add(f"SubClassOf({parent} {expr})")
    for a, b, _ in cat.extra_disjoint:
        doc.add(f"DisjointClasses(:{a} :{b})")

    # comparison operators
    comp = doc.declare("Class", "Comparison")
    ops = [doc.declare("Class", n) for n in NOMINALS]
    for op in ops:
        doc.add(f"SubClassOf({op} {comp})")
    doc.add(f"DisjointUnion({comp} {' '.join(ops)})")
    doc.add(f"EquivalentClasses(:Operator {comp})")

    # binary links
    for p in sorted(LINK_ARITY):
        if LINK_ARITY[p] != 2:
            continue
        prop = doc.declare("ObjectProperty", p)
        dom, rng = SIGNATURES[p]
        if p == "ComparisonOperatorOf":
            rng = ("Comparison",)
        doc.add(f"ObjectPropertyDomain({prop} {_class_expr(dom)})")
        doc.add(f"ObjectPropertyRange({prop} {_class_expr(rng)})")
    for derived, parts in (("Participant", ("Sub", "Super", "PartLink", "WholeLink", "First", "Second")),):
        prop = doc.declare("ObjectProperty", derived)
        for q in parts:
            doc.add(f"SubObjectPropertyOf(:{q} {prop})")
    doc.declare("ObjectProperty", "Compatible")
    doc.add("SymmetricObjectProperty(:Compatible)")
    for cls, op, n, p, inverse, filler in _CARDINALITIES:
        target = f"ObjectInverseOf(:{p})" if inverse else f":{p}"
        tail = f" :{filler}" if filler else ""
        doc.add(f"SubClassOf(:{cls} Object{op}Cardinality({n} {target}{tail}))")
    # an identification constraint is declared on some value or attributive property
    doc.add("SubClassOf(:IdentificationConstraint ObjectSomeValuesFrom(:DeclaredOn "
            "ObjectUnionOf(:AttributiveProperty :ValueProperty)))")

    # mereology and flattened attributes
    for name, note in sorted(_MEREOLOGY.items()):
        prop = doc.declare("ObjectProperty", name)
        doc.add(f"AnnotationAssertion(rdfs:comment {prop} {_literal(note)})", _ASSERTION)
    doc.add("InverseObjectProperties(:hasPart :partOf)")
    doc.add("SubObjectPropertyOf(:properPartOf :partOf)")
    for dp, rng in sorted(_DATA_RANGES.items()):
        prop = doc.declare("DataProperty", dp)
        doc.add(f"DataPropertyRange({prop} {rng})")
    for attr, (owner, op, dp) in sorted(_ATTR_FLAT.items()):
        cls = doc.declare("Class", attr)
        doc.add(f"SubClassOf(:{owner} Object{op}Cardinality(1 :hasPart {cls}))")
        doc.add(f"SubClassOf({cls} DataExactCardinality(1 :{dp}))")

    reify_naries(doc)

    seen_families = set()
    for a in catalog(max_arity):
        if a.tier != STAR:
            continue
        family = a.id.rpartition(".")[0] if ".n" in a.id else a.id
        if family in seen_families:
            continue
        seen_families.add(family)
        doc.comments.append(f"{a.id} (not expressible in OWL): {a.text}")
    return doc


# ------------------------------------------------------------------ models

def _individual_names(g: ModelGraph) -> dict[str, str]:
    names = {e: e for e in g.entities}
    taken = set(names.values())
    for n in NOMINALS:
        cand = f"op{n}"
        while cand in taken:
            cand += "_"
        names[n] = cand
        taken.add(cand)
    return names


def _fresh(base: str, taken: set[str]) -> str:
    cand = base
    while cand in taken:
        cand += "_"
    taken.add(cand)
    return cand


def model_document(g: ModelGraph) -> OwlDocument:
    """ABox for ``g`` without any validity check (see export_model)."""
    g = kind_closure(g)
    doc = OwlDocument()
    names = _individual_names(g)
    doc.origin = {ind: x for x, ind in names.items()}
    taken = set(names.values())
    for e in sorted(g.entities):
        ind = doc.declare("NamedIndividual", names[e])
        for k in most_specific(g.entities[e]):
            doc.declare("Class", k)
            doc.add(f"ClassAssertion(:{k} {ind})", _ASSERTION)

    def ref(x):
        if x in NOMINALS:
            doc.declare("Class", x)
            ind = doc.declare("NamedIndividual", names[x])
            doc.add(f"ClassAssertion(:{x} {ind})", _ASSERTION)
        return f":{names[x]}"

    # tuples per simplified participant, to spot participants in several tuples
    uses = Counter(
        l.args[SIMPLIFIED[l.pred][0]] for l in g.links if l.pred in SIMPLIFIED
    )
    counter = Counter()
    for l in g.sorted_links():
        if LINK_ARITY[l.pred] == 2:
            prop = doc.declare("ObjectProperty", l.pred)
            doc.add(f"ObjectPropertyAssertion({prop} {ref(l.args[0])} {ref(l.args[1])})", _ASSERTION)
            continue
        cls = reified_class(l.pred)
        doc.declare("Class", "ReifiedNAry")
        doc.declare("Class", cls)
        if l.pred in SIMPLIFIED and uses[l.args[SIMPLIFIED[l.pred][0]]] == 1:
            subject = ref(l.args[SIMPLIFIED[l.pred][0]])
            doc.add(f"ClassAssertion(:{cls} {subject})", _ASSERTION)
        else:
            counter[l.pred] += 1
            name = _fresh(f"{l.pred}R_{counter[l.pred]}", taken)
            subject = doc.declare("NamedIndividual", name)
            doc.add(f"ClassAssertion(:ReifiedNAry {subject})", _ASSERTION)
            if l.pred not in SIMPLIFIED:
                doc.add(f"ClassAssertion(:{cls} {subject})", _ASSERTION)
        for i, a in enumerate(l.args, 1):
            prop = doc.declare("ObjectProperty", numbered(l.pred, i))
            doc.add(f"ObjectPropertyAssertion({prop} {subject} {ref(a)})", _ASSERTION)
    for a in g.sorted_attrs():
        owner, _, dp = _ATTR_FLAT[a.pred]
        part = doc.declare("NamedIndividual", _fresh(f"{a.subject}_{a.pred}", taken))
        doc.declare("Class", a.pred)
        doc.declare("ObjectProperty", "hasPart")
        doc.declare("DataProperty", dp)
        doc.add(f"ClassAssertion(:{a.pred} {part})", _ASSERTION)
        doc.add(f"ObjectPropertyAssertion(:hasPart :{names[a.subject]} {part})", _ASSERTION)
        doc.add(f"DataPropertyAssertion(:{dp} {part} {_data_value(a.value)})", _ASSERTION)
    return doc


def _data_value(v) -> str:
    if v is MANY:
        return '"many"'
    if isinstance(v, int):
        return f'"{v}"^^xsd:nonNegativeInteger'
    return _literal(v)


def export_model(g: ModelGraph, max_arity: int = 10) -> OwlDocument:
    """ABox export; refuses models with C2 violations, warns on STAR ones."""
    from .checker import FragmentMode, check_all

    found = check_all(g, FragmentMode.FULL, max_arity)
    hard = [v for v in found if v.tier != STAR]
    if hard:
        raise ExportRefused(hard)
    doc = model_document(g)
    doc.warnings = [str(v) for v in found]
    return doc


def fold_naries(doc: OwlDocument) -> Counter:
    """Rebuild the ternary tuples from numbered property assertions."""
    back = doc.origin
    slots: dict[tuple[str, str], dict[int, list[str]]] = {}
    prop_of = {numbered(p, i): (p, i) for p in TERNARY for i in (1, 2, 3)}
    for text in doc.ordered_axioms():
        m = re.match(r"ObjectPropertyAssertion\(:(\w+) :(\w+) :(\w+)\)$", text)
        if m and m.group(1) in prop_of:
            p, i = prop_of[m.group(1)]
            slots.setdefault((p, m.group(2)), {}).setdefault(i, []).append(
                back.get(m.group(3), m.group(3)))
    out = Counter()
    for (p, _), pos in slots.items():
        if sorted(pos) != [1, 2, 3] or any(len(v) != 1 for v in pos.values()):
            raise ValueError(f"incomplete reified tuple of {p}")
        out[(p, pos[1][0], pos[2][0], pos[3][0])] += 1
    return out

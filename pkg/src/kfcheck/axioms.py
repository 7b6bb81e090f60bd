"""The fixed catalog of metamodel axioms.

Every axiom is a closed formula tagged ``C2`` (two variables, counting
quantifiers, at most binary atoms) or ``STAR`` (needs more variables or a
ternary atom). Ternary links enter C2 axioms only through their reified
projections: ``RolePlayingR(t)`` marks the individual standing for one
``RolePlaying`` tuple and ``RolePlaying1(t, x)`` .. ``RolePlaying3(t, x)``
give its components.

Axioms whose quantifier ranges over "any arity n" are instantiated once per
concrete ``n`` (ids such as ``COMPAT-REL.n3``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .logic import Formula, is_c2, parse_formula
from .model import ModelGraph
from .taxonomy import PUBLISHED, TaxonomyCatalog

C2 = "C2"
STAR = "STAR"
DEFAULT_MAX_ARITY = 10


@dataclass(frozen=True)
class Axiom:
    id: str
    tier: str
    group: str
    formula: Formula
    source: str
    note: str = ""

    @property
    def text(self) -> str:
        return str(self.formula)


def audit_c2(a: Axiom) -> bool:
    return is_c2(a.formula)


# (group, anchor, [(tier, formula, note)]); "{n}" marks per-arity families
_C, _S = C2, STAR

_GROUPS: list[tuple[str, str, list[tuple]]] = [
    ("REL-CONTAINS", "Relationship/Role: composition (1,2..*)", [
        (_C, "all x,y: Contains(x,y) -> Relationship(x) & Role(y)"),
        (_C, "all x: Relationship(x) -> ex>=2 y: Contains(x,y)",
         "guard Relationship(x) added; printed formula quantifies over every element"),
        (_C, "all x: Role(x) -> ex=1 y: Contains(y,x)"),
    ]),
    ("REL-ROLEPLAYING", "Relationship/Role: ternary relation (1..*,0..*,0..*)", [
        (_C, "all t: RolePlayingR(t) -> (ex y: RolePlaying1(t,y) & Role(y))"
             " & (ex y: RolePlaying2(t,y) & CardinalityConstraint(y))"
             " & (ex y: RolePlaying3(t,y) & EntityType(y))"),
        (_C, "all x: Role(x) -> ex>=1 t: RolePlaying1(t,x)"),
    ]),
    ("CARD-ATTR", "Relationship/Role: attributes", [
        (_C, "all x,y: CardinalityConstraint(x) & MinimumCardinality(x,y) -> Integer(y)"),
        (_C, "all x,y: CardinalityConstraint(x) & MaximumCardinality(x,y) -> Integer(y)"),
        (_C, "all x: CardinalityConstraint(x) -> ex<=1 y: MinimumCardinality(x,y)"),
        (_C, "all x: CardinalityConstraint(x) -> ex<=1 y: MaximumCardinality(x,y)"),
    ]),
    ("REL-REIFIED", "Relationship/Role: relation (1,0..1)", [
        (_C, "all x,y: ReifiedAs(x,y) -> Relationship(x) & NestedObjectType(y)"),
        (_C, "all x: NestedObjectType(x) -> ex=1 y: ReifiedAs(y,x)",
         "argument order swapped to match the typing of ReifiedAs"),
        (_C, "all x: Relationship(x) -> ex<=1 y: ReifiedAs(x,y)"),
    ]),
    ("REL-REIFIED-COH", "Relationship/Role: ReifiedAs, Contains and RolePlaying", [
        (_S, "all x,y: ReifiedAs(x,y) -> (all z: Contains(x,z) <-> (ex w: RolePlaying(z,w,y)))",
         "w read existentially; universal w is unsatisfiable"),
    ]),
    ("SUB-PARTICIPANT", "Subsumption: relation (0..*,2), subset and union", [
        (_C, "all x,y: Participant(x,y) -> (Relationship(x) & Entity(y))"
             " | (ValueComparisonConstraint(x) & Role(y)) | (RelationshipConstraint(x) & Role(y))"),
        (_C, "all x: Subsumption(x) | PartWhole(x) -> ex=2 y: Participant(x,y)",
         "guard narrowed from Relationship to Subsumption|PartWhole; plain relationships "
         "have no Sub/Super/Part/Whole participants"),
        (_C, "all x,y: Participant(x,y) & Relationship(x) <-> "
             "Sub(x,y) | Super(x,y) | PartLink(x,y) | WholeLink(x,y)"),
    ]),
    ("SUB-SUB", "Subsumption: relation (1,0..*) sub, third textual constraint", [
        (_C, "all x,y: Sub(x,y) -> Subsumption(x) & Entity(y) & ~QualifiedRelationship(y)"
             " & ~AttributiveProperty(y) & ~Subsumption(y) & ~Qualifier(y) & ~Constraint(y)"),
        (_C, "all x: Subsumption(x) -> ex=1 y: Sub(x,y)"),
    ]),
    ("SUB-SUPER", "Subsumption: relation (1,0..*) super, third textual constraint", [
        (_C, "all x,y: Super(x,y) -> Subsumption(x) & Entity(y) & ~QualifiedRelationship(y)"
             " & ~AttributiveProperty(y) & ~Subsumption(y) & ~Qualifier(y) & ~Constraint(y)"),
        (_C, "all x: Subsumption(x) -> ex=1 y: Super(x,y)"),
    ]),
    ("SUB-PHI", "Subsumption: disjunctive exclusion", None),  # generated below
    ("AGG-PART", "Aggregation: isa and relation (0..*,1) part", [
        (_C, "all x: Part(x) -> PartWhole(x)", "printed with a stray second variable; unary"),
        (_C, "all x,y: PartLink(x,y) -> (Part(x) & AttributiveProperty(y))"
             " | (SharedAggregate(x) & DataType(y)) | (SharedAggregate(x) & ObjectType(y))"),
        (_C, "all x: Part(x) -> ex=1 y: PartLink(x,y) & AttributiveProperty(y)"),
    ]),
    ("AGG-WHOLE", "Aggregation: relation (2..*,1) whole", [
        (_C, "all x,y: WholeLink(x,y) -> (Part(x) & CompositeAttribute(y))"
             " | (SharedAggregate(x) & DataType(y)) | (SharedAggregate(x) & ObjectType(y))"),
        (_C, "all x: Part(x) -> ex=1 y: WholeLink(x,y) & CompositeAttribute(y)"),
        (_C, "all x: CompositeAttribute(x) -> ex>=2 y: Part(y) & WholeLink(y,x)"),
    ]),
    ("AGG-SHARED-XOR", "Aggregation: relation (0..*,0..1), xor, second textual constraint", [
        (_C, "all x: SharedAggregate(x) -> ex<=1 y: (DataType(y) | ObjectType(y)) & PartLink(x,y)"),
        (_C, "all x: SharedAggregate(x) -> (ex>=1 y: PartLink(x,y)) & (ex>=1 y: WholeLink(x,y))"),
        (_C, "all x: SharedAggregate(x) -> ex<=1 y: (DataType(y) | ObjectType(y)) & WholeLink(x,y)"),
    ]),
    ("AGG-SHARED-AND", "Aggregation: and relationships", [
        (_S, "all x,y: SharedAggregate(x) & DataType(y) & PartLink(x,y) -> ex z: DataType(z) & WholeLink(x,z)"),
        (_S, "all x,y: SharedAggregate(x) & DataType(y) & WholeLink(x,y) -> ex z: DataType(z) & PartLink(x,z)"),
        (_S, "all x,y: SharedAggregate(x) & ObjectType(y) & PartLink(x,y) -> ex z: ObjectType(z) & WholeLink(x,z)"),
        (_S, "all x,y: SharedAggregate(x) & ObjectType(y) & WholeLink(x,y) -> ex z: ObjectType(z) & PartLink(x,z)"),
    ]),
    ("PW-IRR-ASYM", "Aggregation: irreflexivity, asymmetry", [
        (_S, "all x,y,z: PartWhole(x) & PartLink(x,y) & WholeLink(x,z) -> ~(y = z)"),
        (_S, "all x,y,z: PartWhole(x) & PartLink(x,y) & WholeLink(x,z)"
             " -> ~(ex v: PartWhole(v) & PartLink(v,z) & WholeLink(v,y))"),
    ]),
    ("AGG-COMPOSITE-PART", "Aggregation: relation (0..1,1) composite part", [
        (_C, "all x,y: PartLink(x,y) & CompositeAggregate(x) -> ObjectType(y)"),
        (_C, "all x: CompositeAggregate(x) -> ex=1 y: PartLink(x,y)"),
        (_C, "all x: ObjectType(x) -> ex<=1 y: CompositeAggregate(y) & PartLink(y,x)",
         "read as: an object type is the part of at most one composite aggregate"),
    ]),
    ("AGG-COMPOSITE-WHOLE", "Aggregation: relation (0..*,1) composite whole", [
        (_C, "all x,y: CompositeAggregate(x) & WholeLink(x,y) -> ObjectType(y)"),
        (_C, "all x: CompositeAggregate(x) -> ex=1 y: WholeLink(x,y)"),
    ]),
    ("COMPAT-DEF", "Compatibility: first textual constraint, typing", [
        (_C, "all x,y: Compatible(x,y) -> (ValueProperty(x) & ValueProperty(y))"
             " | (DataType(x) & DataType(y)) | (ObjectType(x) & ObjectType(y))"
             " | (Role(x) & Role(y)) | (Relationship(x) & Relationship(y))"),
    ]),
    ("COMPAT-ROLE", "Compatibility: first textual constraint, roles", [
        (_S, "all x,y: Compatible(x,y) & Role(x) -> ex v,w,s,t: RolePlaying(x,v,w)"
             " & RolePlaying(y,s,t) & Compatible(w,t)"),
    ]),
    ("COMPAT-REL", "Compatibility: first textual constraint, relationships", [
        (_S, "all x,y: Compatible(x,y) & Relationship(x) -> ((ex={n} z: Contains(x,z)) <->"
             " (ex={n} z: Contains(y,z))) & (ex z,w: Contains(x,z) & Contains(y,w) & Compatible(z,w))",
         "second existential binds (z,w); printed as (z,v)"),
    ]),
    ("COMPAT-SUBS", "Compatibility: first textual constraint, subsumption", [
        (_S, "all x,y,z: Subsumption(x) & Sub(x,y) & Super(x,z) -> Compatible(y,z)"),
    ]),
    ("ATT-DECLAREDON", "Attributes: DeclaredOn relations, xor", [
        (_C, "all x,y: DeclaredOn(x,y) -> (Qualifier(x) & Role(y))"
             " | (Qualifier(x) & QualifiedRelationship(y)) | (MandatoryConstraint(x) & Role(y))"
             " | (InternalUniquenessConstraint(x) & Role(y)) | (ExternalIdentification(x) & Relationship(y))"
             " | (IdentificationConstraint(x) & ValueProperty(y))"
             " | (IdentificationConstraint(x) & AttributiveProperty(y))"
             " | (RelationshipEquality(x) & Relationship(y)) | (DisjointRelationships(x) & Relationship(y))"
             " | (RoleEquality(x) & Role(y)) | (DisjointRoles(x) & Role(y))"
             " | (DisjointEntities(x) & Subsumption(y)) | (ObjectTypeEquality(x) & ObjectType(y))"
             " | (CompletenessConstraint(x) & Subsumption(y))"),
        (_C, "all x: Qualifier(x) -> ex=1 y: DeclaredOn(x,y) & (Role(y) | QualifiedRelationship(y))"),
        (_C, "all x: Role(x) -> ex<=1 y: Qualifier(y) & DeclaredOn(y,x)"),
        (_C, "all x: QualifiedRelationship(x) -> (ex>=1 y: Qualifier(y) & DeclaredOn(y,x))"
             " & (ex<=2 y: Qualifier(y) & DeclaredOn(y,x))"),
    ]),
    ("ATT-DECLHOMOG", "Attributes: qualifier declared homogeneously", [
        (_S, "all x,y,z: DeclaredOn(x,y) & DeclaredOn(x,z) & Qualifier(x) & Role(y) -> Role(z)"),
        (_S, "all x,y,z: DeclaredOn(x,y) & DeclaredOn(x,z) & Qualifier(x) & QualifiedRelationship(y)"
             " -> QualifiedRelationship(z)"),
    ]),
    ("ATT-HASCOMPONENT", "Attributes: composition (0..*,1..*), or", [
        (_C, "all x,y: HasComponent(x,y) -> Qualifier(x) & (DimensionalAttribute(y) | Attribute(y))"),
        (_C, "all x: Qualifier(x) -> ex>=1 y: HasComponent(x,y)"),
    ]),
    ("ATT-DOMAIN", "Attributes: relation (0..*,0..*) domain", [
        (_C, "all x,y: DomainLink(x,y) -> (AttributiveProperty(x) & Relationship(y))"
             " | (AttributiveProperty(x) & ObjectType(y)) | (MappedTo(x) & ValueType(y))"
             " | (ValueProperty(x) & ObjectType(y))"),
    ]),
    ("ATT-RANGE", "Attributes: relation (0..*,1) range", [
        (_C, "all x,y: RangeLink(x,y) -> (AttributiveProperty(x) & DataType(y)) | (MappedTo(x) & DataType(y))"),
        (_C, "all x: AttributiveProperty(x) -> ex=1 y: DataType(y) & RangeLink(x,y)"),
    ]),
    ("ATT-VALUEPROP", "Attributes: relation (0..*,1..*) value property domain", [
        (_C, "all x: ValueProperty(x) -> ex>=1 y: DomainLink(x,y) & ObjectType(y)"),
    ]),
    ("ATT-MAPPEDTO", "Attributes: relation (0..*,1) mapped-to range", [
        (_C, "all x: MappedTo(x) -> ex=1 y: DataType(y) & RangeLink(x,y)"),
    ]),
    ("ATT-DIMATTR", "Attributes: ternary relation (0..*,0..*,0..*), or", [
        (_C, "all t: DimensionalAttributionR(t) -> (ex y: DimensionalAttribution1(t,y) & Dimension(y))"
             " & (ex y: DimensionalAttribution2(t,y) & DataType(y))"
             " & (ex y: DimensionalAttribution3(t,y) & (ObjectType(y) | Relationship(y)))"),
    ]),
    ("ATT-DIMVT", "Attributes: ternary relation (0..*,0..*,1)", [
        (_C, "all t: DimensionalValueTypingR(t) -> (ex y: DimensionalValueTyping1(t,y) & Dimension(y))"
             " & (ex y: DimensionalValueTyping2(t,y) & DataType(y))"
             " & (ex y: DimensionalValueTyping3(t,y) & DimensionalValueType(y))"),
        (_C, "all x: DimensionalValueType(x) -> ex=1 t: DimensionalValueTyping3(t,x)"),
    ]),
    ("MAND-MIN", "Mandatory: relation (0..*,1..*)", [
        (_C, "all x: MandatoryConstraint(x) -> ex>=1 y: Role(y) & DeclaredOn(x,y)"),
    ]),
    ("MAND-DISJ", "Mandatory: relation (0..*,2..*)", [
        (_C, "all x: DisjunctiveMandatory(x) -> ex>=2 y: Role(y) & DeclaredOn(x,y)"),
    ]),
    ("MAND-SINGLE", "Mandatory: relation (0..1,1)", [
        (_C, "all x: Mandatory(x) -> ex=1 y: Role(y) & DeclaredOn(x,y)"),
        (_C, "all x: Role(x) -> ex<=1 y: DeclaredOn(y,x) & Mandatory(y)"),
    ]),
    ("MAND-DIFFREL", "Mandatory: roles with the same constraint in different relationships", [
        (_S, "all x,y,z,v,w: DeclaredOn(x,y) & DeclaredOn(x,z) & MandatoryConstraint(x) & Role(y)"
             " & Role(z) & ~(y = z) & Contains(w,y) & Contains(v,z) & Relationship(v)"
             " & Relationship(w) -> ~(w = v)",
         "~(y = z) added; with y = z every declared role violates"),
    ]),
    ("UNIQ-INT", "Uniqueness: relation (0..*,1..*)", [
        (_C, "all x: InternalUniquenessConstraint(x) -> ex>=1 y: Role(y) & DeclaredOn(x,y)"),
    ]),
    ("UNIQ-EXT", "Uniqueness: ternary relation (1,0;2..*,0;2..*), third textual constraint", [
        (_S, "all x,y,z: ExtUnique(x,y,z) -> ExternalUniquenessConstraint(x) & Role(y)"
             " & Relationship(z) & Contains(z,y)"),
        (_C, "all x: ExternalUniquenessConstraint(x) -> ex=1 t: ExtUnique1(t,x)"),
        (_C, "all x: Role(x) -> (ex=0 t: ExtUnique2(t,x)) | (ex>=2 t: ExtUnique2(t,x))",
         "ExternalUnique and ExtUnique are one predicate"),
        (_C, "all x: Relationship(x) -> (ex=0 t: ExtUnique3(t,x)) | (ex>=2 t: ExtUnique3(t,x))"),
    ]),
    ("UNIQ-SPAN", "Uniqueness: first textual constraint", [
        (_S, "all x,y,z: InternalUniquenessConstraint(x) & Role(y) & DeclaredOn(x,y)"
             " & Relationship(z) & Contains(z,y) -> ((ex={n} w: Contains(z,w))"
             " -> (ex<={n} v: DeclaredOn(x,v)))",
         "biconditional weakened to implication; the printed form is unsatisfiable for n above "
         "the span"),
    ]),
    ("UNIQ-EXTMATCH", "Uniqueness: second textual constraint", [
        (_S, "all x: ExternalUniquenessConstraint(x) -> ((ex={n} y: ex z: ExtUnique(x,y,z))"
             " <-> (ex={n} z: ex y: ExtUnique(x,y,z)))",
         "read as: distinct roles and distinct relationships are equally many"),
    ]),
    ("ID-PARTIAL", "Identification: relation (0..*,1) partially identifies", [
        (_C, "all x,y: PartiallyIdentifies(x,y) -> QualifiedIdentification(x) & QualifiedRelationship(y)"),
        (_C, "all x: QualifiedIdentification(x) -> ex=1 y: PartiallyIdentifies(x,y)"),
    ]),
    ("ID-EXTDECL", "Identification: relation (0..*,1..*)", [
        (_C, "all x: ExternalIdentification(x) -> ex>=1 y: DeclaredOn(x,y)"),
    ]),
    ("ID-IDENTIFIES", "Identification: relation (1..*,1) identifies", [
        (_C, "all x,y: Identifies(x,y) -> IdentificationConstraint(x) & ObjectType(y)"),
        (_C, "all x: IdentificationConstraint(x) -> ex=1 y: Identifies(x,y)"),
        (_C, "all x: ObjectType(x) -> ex>=1 y: Identifies(y,x)"),
    ]),
    ("ID-HOMOG", "Identification: relation (0..*,0..*), xor, mandatory", [
        (_S, "all x,y,z: DeclaredOn(x,y) & DeclaredOn(x,z) & IdentificationConstraint(x)"
             " & ValueProperty(y) -> ValueProperty(z)"),
        (_S, "all x,y,z: DeclaredOn(x,y) & DeclaredOn(x,z) & IdentificationConstraint(x)"
             " & AttributiveProperty(y) -> AttributiveProperty(z)"),
        (_C, "all x: IdentificationConstraint(x) -> ex y: DeclaredOn(x,y)",
         "OWL export uses a some-values restriction here although the diagram multiplicity reads 0..*"),
    ]),
    ("ID-SINGLE", "Identification: relation (0..1,1) single identification", [
        (_C, "all x,y: DeclaredOn(x,y) & SingleIdentification(x) -> Attribute(y) | ValueType(y)"),
        (_C, "all x: SingleIdentification(x) -> ex=1 y: DeclaredOn(x,y)"),
        (_C, "all x: Attribute(x) | ValueType(x) -> ex<=1 y: DeclaredOn(y,x) & SingleIdentification(y)"),
    ]),
    ("ID-WEAK", "Identification: relation (1..*,1) weak identification", [
        (_C, "all x,y: Identifies(x,y) & WeakIdentification(x) -> WeakObjectType(y)"),
        (_C, "all x: WeakIdentification(x) -> ex=1 y: Identifies(x,y)"),
        (_C, "all x: WeakObjectType(x) -> ex>=1 y: WeakIdentification(y) & Identifies(y,x)"),
    ]),
    ("ID-HASSTRONG", "Identification: relation (0..*,1) has strong", [
        (_C, "all x,y: HasStrong(x,y) -> WeakObjectType(x) & ObjectType(y)"),
        (_C, "all x: WeakObjectType(x) -> ex=1 y: HasStrong(x,y)"),
    ]),
    ("ID-TC1", "Identification: first textual constraint", [
        (_S, "all x,y,z: WeakIdentification(x) & Identifies(x,y) & DeclaredOn(x,z)"
             " -> (AttributiveProperty(z) & DomainLink(z,y))"
             " | (ex=1 v,w,s: IdentificationConstraint(v) & Identifies(v,w) & Relationship(s)"
             " & DeclaredOn(v,z) & Participant(s,w) & Participant(s,y))"),
        (_S, "all x,y,s,v,t: WeakIdentification(x) & Identifies(x,y) & DeclaredOn(x,s)"
             " & IdentificationConstraint(v) & ~(v = x) & Identifies(v,t) & DeclaredOn(v,s)"
             " -> ~(y = t)",
         "IdentificationConstraint made unary, unused quantified variables dropped, "
         "~(v = x) added"),
    ]),
    ("ID-TC2", "Identification: second textual constraint", [
        (_S, "all x,y,z: SingleIdentification(x) & Identifies(x,y) & DeclaredOn(x,z)"
             " -> ex v: CardO(z,y,v) & MinimumCardinality(v,1) & MaximumCardinality(v,1)"),
    ]),
    ("ID-TC3", "Identification: third textual constraint", [
        (_C, "all x,y: QualifiedIdentification(x) & DeclaredOn(x,y) -> AttributiveProperty(y)"),
        (_C, "all x,y: ExternalIdentification(x) & DeclaredOn(x,y) -> AttributiveProperty(y)"),
    ]),
    ("ID-TC4", "Identification: fourth textual constraint", [
        (_S, "all x,y: PartiallyIdentifies(x,y) -> ex z,v,w: RolePlaying(z,v,w) & Contains(y,z)"
             " & MinimumCardinality(v,1) & MaximumCardinality(v,1)"),
    ]),
    ("CARDC-R", "Cardinality: ternary relationship (0..*,0..*,0..*) CardR", [
        (_C, "all t: CardRR(t) -> (ex y: CardR1(t,y) & AttributiveProperty(y))"
             " & (ex y: CardR2(t,y) & Relationship(y)) & (ex y: CardR3(t,y) & CardinalityConstraint(y))"),
    ]),
    ("CARDC-O", "Cardinality: ternary relation (0..*,0..*,0..*) CardO", [
        (_C, "all t: CardOR(t) -> (ex y: CardO1(t,y) & AttributiveProperty(y))"
             " & (ex y: CardO2(t,y) & ObjectType(y)) & (ex y: CardO3(t,y) & CardinalityConstraint(y))"),
    ]),
    ("CARDC-FREQ", "Cardinality: ternary relation (0..*,0;2..*,1) frequency", [
        (_C, "all t: FrequencyR(t) -> (ex y: Frequency1(t,y) & Relationship(y))"
             " & (ex y: Frequency2(t,y) & Role(y)) & (ex y: Frequency3(t,y) & CompoundCardinalityConstraint(y))"),
        (_C, "all x: CompoundCardinalityConstraint(x) -> ex=1 t: Frequency3(t,x)"),
        (_C, "all x: Role(x) -> (ex=0 t: Frequency2(t,x)) | (ex>=2 t: Frequency2(t,x))"),
    ]),
    ("CARDC-MINMAX", "Cardinality: first and second textual constraint", [
        (_C, "all x: CardinalityConstraint(x) -> ex y: MaximumCardinality(x,y) | MinimumCardinality(x,y)"),
    ]),
    ("CARDC-FREQROLES", "Cardinality: isa, third textual constraint", [
        (_C, "all x: CompoundCardinalityConstraint(x) -> CardinalityConstraint(x)"),
        (_S, "all x,y,z,v,w: Frequency(x,y,z) & Frequency(v,w,z) & ~(x = v & y = w)"
             " -> (x = v) & Contains(x,y) & Contains(v,w) & ~(y = w)",
         "restricted to distinct tuples; with equal tuples ~(y = w) always fails"),
    ]),
    ("VAL-CONSTRAINING", "Value constraints: ternary relations (1,0..*,0..*), xor", [
        (_C, "all t: ConstrainingValuesR(t) -> ("
             "(ex y: ConstrainingValues1(t,y) & ValueTypeConstraint(y)) & (ex y: ConstrainingValues2(t,y) & ValueProperty(y))"
             " | (ex y: ConstrainingValues1(t,y) & RoleValueConstraint(y)) & (ex y: ConstrainingValues2(t,y) & Role(y))"
             " | (ex y: ConstrainingValues1(t,y) & AttributeValueConstraint(y)) & (ex y: ConstrainingValues2(t,y) & Attribute(y)))"
             " & (ex y: ConstrainingValues3(t,y) & (ValueEnumeration(y) | ValueRange(y)))"),
        (_C, "all x: ValueTypeConstraint(x) -> ex=1 t: ConstrainingValues1(t,x)"),
        (_C, "all x: RoleValueConstraint(x) -> ex=1 t: ConstrainingValues1(t,x)"),
        (_C, "all x: AttributeValueConstraint(x) -> ex=1 t: ConstrainingValues1(t,x)"),
        (_C, "all x: ValueEnumeration(x) -> ~ValueRange(x)"),
        (_C, "all x: ValueRange(x) -> ~ValueEnumeration(x)"),
    ]),
    ("VAL-HASTYPE", "Value constraints: relation (0..*,1)", [
        (_C, "all x,y: HasType(x,y) -> ValueRange(x) & DataType(y)"),
        (_C, "all x: ValueRange(x) -> ex=1 y: HasType(x,y)"),
    ]),
    ("VAL-RANGEATTRS", "Value constraints: attributes", [
        (_C, "all x,y: ValueRange(x) & MinimumValue(x,y) -> Literal(y)"),
        (_C, "all x,y: ValueRange(x) & MaximumValue(x,y) -> Literal(y)"),
        (_C, "all x: ValueRange(x) -> ex=1 y: MinimumValue(x,y)"),
        (_C, "all x: ValueRange(x) -> ex=1 y: MaximumValue(x,y)"),
    ]),
    ("VCMP-PART", "Value comparison: relation (0..*,2) role subset, first textual constraint", [
        (_C, "all x: ValueComparisonConstraint(x) -> ex=2 y: Participant(x,y)"),
        (_C, "all x,y: First(x,y) -> (ValueComparisonConstraint(x) & Role(y)) | (RelationshipConstraint(x) & Role(y))"),
        (_C, "all x,y: Second(x,y) -> (ValueComparisonConstraint(x) & Role(y)) | (RelationshipConstraint(x) & Role(y))"),
        (_C, "all x,y: First(x,y) -> Participant(x,y)"),
        (_C, "all x,y: Second(x,y) -> Participant(x,y)"),
        (_C, "all x,y: Participant(x,y) & ValueComparisonConstraint(x) -> First(x,y) | Second(x,y)"),
        (_C, "all x,y: ~(First(x,y) & Second(x,y) & ValueComparisonConstraint(x))"),
        (_C, "all x: ValueComparisonConstraint(x) -> ex=1 y: First(x,y)"),
        (_C, "all x: ValueComparisonConstraint(x) -> ex=1 y: Second(x,y)"),
    ]),
    ("VCMP-OPS", "Value comparison: nominals", None),  # generated below
    ("VCMP-ONTYPE", "Value comparison: relation (1,0..*)", [
        (_C, "all x,y: OnValueOfType(x,y) -> ValueComparisonConstraint(x) & DataType(y)"),
        (_C, "all x: ValueComparisonConstraint(x) -> ex=1 y: OnValueOfType(x,y)"),
    ]),
    ("VCMP-SAMETYPE", "Value comparison: second textual constraint", [
        (_S, "all x,y,z: ValueComparisonConstraint(x) & First(x,y) & Second(x,z)"
             " -> ex u,v,w: RolePlaying(y,u,v) & RolePlaying(z,w,v) & DataType(v)"),
    ]),
    ("EQD-DECL2", "Equality/disjointness: four DeclaredOn relations (0..*,2..*)", [
        (_C, "all x: RelationshipEquality(x) -> ex>=2 y: DeclaredOn(x,y)"),
        (_C, "all x: DisjointRelationships(x) -> ex>=2 y: DeclaredOn(x,y)"),
        (_C, "all x: RoleEquality(x) -> ex>=2 y: DeclaredOn(x,y)"),
        (_C, "all x: DisjointRoles(x) -> ex>=2 y: DeclaredOn(x,y)"),
    ]),
    ("EQD-DECL1", "Equality/disjointness: two DeclaredOn relations (0..*,1)", [
        (_C, "all x: CompletenessConstraint(x) -> ex=1 y: DeclaredOn(x,y)"),
        (_C, "all x: DisjointEntities(x) -> ex=1 y: DeclaredOn(x,y)"),
    ]),
    ("EQD-HASPART", "Equality/disjointness: two hasParticipant relations (0..*,2..*)", [
        (_C, "all x,y: HasParticipant(x,y) -> (CompletenessConstraint(x) | DisjointEntities(x))"
             " & Entity(y) & ~QualifiedRelationship(y) & ~Subsumption(y) & ~AttributiveProperty(y)"
             " & ~Qualifier(y) & ~Constraint(y)"),
        (_C, "all x: CompletenessConstraint(x) -> ex>=2 y: HasParticipant(x,y)"),
        (_C, "all x: DisjointEntities(x) -> ex>=2 y: HasParticipant(x,y)"),
    ]),
    ("EQD-TC", "Equality/disjointness: textual constraints", [
        (_S, "all x,y: DisjointEntities(x) & HasParticipant(x,y) -> ex z: DeclaredOn(x,z) & Subsumption(z) & Sub(z,y)"),
        (_S, "all x,y,z: DisjointEntities(x) & DeclaredOn(x,y) & Sub(y,z) -> HasParticipant(x,z)"),
        (_S, "all x,y: CompletenessConstraint(x) & HasParticipant(x,y) -> ex z: DeclaredOn(x,z) & Subsumption(z) & Sub(z,y)"),
        (_S, "all x,y,z: CompletenessConstraint(x) & DeclaredOn(x,y) & Sub(y,z) -> HasParticipant(x,z)"),
        (_S, "all x,y,z: DisjointRelationships(x) & DeclaredOn(x,y) & DeclaredOn(x,z) -> Compatible(y,z)"),
        (_S, "all x,y,z: DisjointRoles(x) & DeclaredOn(x,y) & DeclaredOn(x,z) & ~(y = z)"
             " -> Compatible(y,z) & (all v,w: Contains(v,y) & Contains(w,z) -> ~(v = w))",
         "~(y = z) added and the inner conclusion compares the relationships v, w"),
        (_S, "all x,y,z: RoleEquality(x) & DeclaredOn(x,y) & DeclaredOn(x,z) & ~(y = z)"
             " -> Compatible(y,z) & (all v,w: Contains(v,y) & Contains(w,z) -> ~(v = w))",
         "~(y = z) added and the inner conclusion compares the relationships v, w"),
        (_S, "all x,y,z: RelationshipEquality(x) & DeclaredOn(x,y) & DeclaredOn(x,z) -> Compatible(y,z)"),
    ]),
    ("RELP-PART", "Relationship constraints: relation (0..4,2)", [
        (_C, "all x: RelationshipConstraint(x) -> ex=2 y: Participant(x,y)"),
        (_C, "all x: Role(x) -> ex<=4 y: Participant(y,x)"),
    ]),
    ("RELP-FIRSTSECOND", "Relationship constraints: two relations (0..*,1), subset, union", [
        (_C, "all x,y: Participant(x,y) & RelationshipConstraint(x) -> First(x,y) | Second(x,y)"),
        (_C, "all x,y: ~(First(x,y) & Second(x,y) & RelationshipConstraint(x))"),
        (_C, "all x: RelationshipConstraint(x) -> ex=1 y: First(x,y)"),
        (_C, "all x: RelationshipConstraint(x) -> ex=1 y: Second(x,y)"),
    ]),
    ("RELP-TC", "Relationship constraints: textual constraint", [
        (_S, "all x,y,z: RelationshipConstraint(x) & First(x,y) & Second(x,z)"
             " -> Compatible(y,z) & (ex w: Contains(w,y) & Contains(w,z))",
         "RelationshipConstraint used as the unary class"),
    ]),
    ("JOIN-JOINING", "Join constraints: ternary relation (0..*,1,0..*)", [
        (_C, "all t: JoiningR(t) -> (ex y: Joining1(t,y) & Relationship(y))"
             " & (ex y: Joining2(t,y) & JoinConstraint(y)) & (ex y: Joining3(t,y) & Role(y))"),
        (_C, "all x: JoinConstraint(x) -> ex=1 t: Joining2(t,x)"),
    ]),
    ("JOIN-PARTICIPATES", "Join constraints: relation (3..4,0..*) and relation (4,0..*)", [
        (_C, "all x,y: ParticipatesIn(x,y) -> JoinConstraint(y) & (Relationship(x) | Role(x))"),
        (_C, "all x: JoinConstraint(x) -> (ex=3 y: Relationship(y) & ParticipatesIn(y,x))"
             " | (ex=4 y: Relationship(y) & ParticipatesIn(y,x))",
         "second disjunct uses ParticipatesIn(y,x) like the first"),
        (_C, "all x: JoinConstraint(x) -> ex=4 y: Role(y) & ParticipatesIn(y,x)"),
    ]),
    ("JOIN-TC1", "Join constraints: first textual constraint", [
        (_S, "all x,y: JoinConstraint(x) & Role(y) & ParticipatesIn(y,x)"
             " -> ex z: Relationship(z) & Contains(z,y) & ParticipatesIn(z,x)"),
    ]),
]

PHI_FAMILY = (
    ("SharedAggregate", "SharedAggregate({v})"),
    ("CompositeAggregate", "CompositeAggregate({v})"),
    ("Role", "Role({v})"),
    ("DataType", "DataType({v})"),
    ("PlainRelationship", "(Relationship({v}) & ~PartWhole({v}))"),
    ("ObjectType", "ObjectType({v})"),
)


def _phi_entries():
    out = []
    for _, phi in PHI_FAMILY:
        py, pz = phi.format(v="y"), phi.format(v="z")
        out.append((_S, f"all x,y: Subsumption(x) & Sub(x,y) & {py} -> ex z: {pz} & Super(x,z)"))
        out.append((_S, f"all x,y: Subsumption(x) & Super(x,y) & {py} -> ex z: {pz} & Sub(x,z)"))
    return out


def _ops_entries():
    from .model import NOMINALS

    out = [
        (_C, "all x,y: ComparisonOperatorOf(x,y) -> ValueComparisonConstraint(x) & Operator(y)"),
        (_C, "all x: ValueComparisonConstraint(x) -> ex=1 y: ComparisonOperatorOf(x,y)"),
        (_C, "all x: Operator(x) -> " + " | ".join(f"x = {n}" for n in NOMINALS)),
    ]
    for n in NOMINALS:
        others = " & ".join(f"~(x = {m})" for m in NOMINALS if m != n)
        out.append((_C, f"all x: x = {n} -> Operator(x) & {others}"))
    return out


PER_ARITY = {"COMPAT-REL": 2, "UNIQ-SPAN": 1, "UNIQ-EXTMATCH": 1}  # family -> smallest n

TAX_ANCHORS = {
    "TAX-ENT": "Static entities: isa hierarchy and first textual constraint",
    "TAX-CON": "Constraint types: isa hierarchy",
}


def taxonomy_formulas(cat: TaxonomyCatalog, origin: str) -> list[str]:
    out = []
    for g in cat.groups:
        if g.origin != origin:
            continue
        for c in g.children:
            out.append(f"all x: {c}(x) -> {g.parent}(x)")
        if g.disjoint:
            for i, a in enumerate(g.children):
                for b in g.children[i + 1:]:
                    out.append(f"all x: ~({a}(x) & {b}(x))")
        if g.complete:
            out.append(f"all x: {g.parent}(x) -> " + " | ".join(f"{c}(x)" for c in g.children))
    for a, b, o in cat.extra_disjoint:
        if o == origin:
            out.append(f"all x: ~({a}(x) & {b}(x))")
    return out


GROUP_IDS: tuple[str, ...] = ("TAX-ENT", "TAX-CON") + tuple(g for g, _, _ in _GROUPS)


def effective_arity(g: ModelGraph, max_arity: int = DEFAULT_MAX_ARITY) -> int:
    return max(max_arity, g.max_contains())


@lru_cache(maxsize=None)
def catalog(max_arity: int = DEFAULT_MAX_ARITY) -> tuple[Axiom, ...]:
    """All axioms, per-arity families instantiated for n up to ``max_arity``."""
    if max_arity < 2:
        raise ValueError("max arity must be at least 2")
    out: list[Axiom] = []
    for origin, anchor in TAX_ANCHORS.items():
        for i, text in enumerate(taxonomy_formulas(PUBLISHED, origin), 1):
            out.append(Axiom(f"{origin}.{i}", C2, origin, parse_formula(text), anchor))
    for group, anchor, entries in _GROUPS:
        if group == "SUB-PHI":
            entries = _phi_entries()
        elif group == "VCMP-OPS":
            entries = _ops_entries()
        if group in PER_ARITY:
            (tier, text, *note), = entries
            for n in range(PER_ARITY[group], max_arity + 1):
                out.append(Axiom(f"{group}.n{n}", tier, group,
                                 parse_formula(text.replace("{n}", str(n))), anchor,
                                 note[0] if note else ""))
            continue
        for i, (tier, text, *note) in enumerate(entries, 1):
            out.append(Axiom(f"{group}.{i}", tier, group, parse_formula(text), anchor,
                             note[0] if note else ""))
    return tuple(out)


def catalog_for(g: ModelGraph, max_arity: int = DEFAULT_MAX_ARITY) -> tuple[Axiom, ...]:
    return catalog(effective_arity(g, max_arity))


def by_id(max_arity: int = DEFAULT_MAX_ARITY) -> dict[str, Axiom]:
    return {a.id: a for a in catalog(max_arity)}


def family_id(axiom_id: str) -> str:
    """``COMPAT-REL.n3`` -> ``COMPAT-REL.n*``; other ids unchanged."""
    group, _, idx = axiom_id.rpartition(".")
    return f"{group}.n*" if idx.startswith("n") else axiom_id

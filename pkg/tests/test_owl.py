from collections import Counter

import pytest

from kfcheck.dsl import load, parse
from kfcheck.model import TERNARY
from kfcheck.owl import (FULL_FORM, SIMPLIFIED, ExportRefused, OwlDocument, export_model,
                         export_schema, fold_naries, model_document, numbered, reified_class,
                         reify_naries)


@pytest.fixture(scope="module")
def schema():
    return export_schema()


def test_schema_lints_clean(schema):
    assert schema.lint() == []


def test_schema_is_deterministic(schema):
    assert export_schema().render() == schema.render()


def test_asymmetry_two_superclasses(schema):
    axioms = schema.ordered_axioms()
    assert "SubClassOf(:Asymmetry :Antisymmetry)" in axioms
    assert "SubClassOf(:Asymmetry :Irreflexivity)" in axioms


def test_comparison_disjoint_union(schema):
    du = [a for a in schema.ordered_axioms() if a.startswith("DisjointUnion(:Comparison ")]
    assert len(du) == 1 and len(du[0].split()) == 7


def test_star_axioms_are_comments(schema):
    assert schema.comments
    assert all("Compatible(y,z)" not in a for a in schema.ordered_axioms()
               if a.startswith("SubClassOf"))


def test_rdf_parts(schema):
    props = {n for k, n in schema.declarations if k == "ObjectProperty"}
    assert {"partOf", "properPartOf", "hasPart"} <= props
    assert {n for k, n in schema.declarations if k == "DataProperty"} == {"hasCValue", "hasValue"}


def test_role_playing_reification():
    doc = OwlDocument()
    rep = reify_naries(doc, ["RolePlaying"])
    assert rep.classes == ["RolePlayingR"]
    axioms = doc.ordered_axioms()
    assert "ObjectPropertyRange(:rolePlaying1 :Role)" in axioms
    assert "ObjectPropertyRange(:rolePlaying2 :CardinalityConstraint)" in axioms
    assert "ObjectPropertyRange(:rolePlaying3 :EntityType)" in axioms
    for i in (1, 2, 3):
        assert f"SubClassOf(:RolePlayingR ObjectExactCardinality(1 :rolePlaying{i}))" in axioms


def test_no_naries_is_identity():
    doc = OwlDocument()
    assert reify_naries(doc, []).empty
    assert not doc.declarations and not doc.axioms


def test_simplified_partition():
    assert set(SIMPLIFIED) | set(FULL_FORM) == set(TERNARY)
    assert "DimensionalValueTyping" in SIMPLIFIED and "RolePlaying" in FULL_FORM


def test_names():
    assert reified_class("CardO") == "CardOR"
    assert numbered("ExtUnique", 2) == "extUnique2"


def test_single_object_type_model():
    doc = model_document(parse("entity A : ObjectType."))
    assert doc.counts()["individuals"] == 1
    assert doc.ordered_axioms() == ["ClassAssertion(:ObjectType :A)"]


def test_role_playing_tuple_individual():
    g = parse("entity r : Role. entity c : ObjectTypeCardinality. entity A : ObjectType."
              " link RolePlaying(r, c, A).")
    doc = model_document(g)
    assert ("NamedIndividual", "RolePlayingR_1") in doc.declarations
    asserted = [a for a in doc.ordered_axioms() if ":RolePlayingR_1 " in a
                and a.startswith("ObjectPropertyAssertion")]
    assert len(asserted) == 3
    assert fold_naries(doc) == Counter({("RolePlaying", "r", "c", "A"): 1})


def test_shared_simplified_participant_gets_fresh_individuals():
    g = parse("entity e : ExternalUniquenessConstraint. entity r : Role. entity s : Role."
              " entity R : Relationship. link ExtUnique(e, r, R). link ExtUnique(e, s, R).")
    doc = model_document(g)
    assert fold_naries(doc) == Counter({("ExtUnique", "e", "r", "R"): 1,
                                        ("ExtUnique", "e", "s", "R"): 1})


def test_refuses_c2_violations(fixtures):
    with pytest.raises(ExportRefused) as exc:
        export_model(load(fixtures / "models" / "one_role.kfm"))
    assert "REL-CONTAINS.2" in {v.axiom_id for v in exc.value.violations}


def test_star_violations_warn(fixtures):
    doc = export_model(load(fixtures / "models" / "star_only.kfm"))
    assert len(doc.warnings) == 1 and "REL-REIFIED-COH" in doc.warnings[0]
    assert doc.lint() == []


def test_model_export_deterministic(fixtures):
    g = load(fixtures / "models" / "employment.kfm")
    assert export_model(g).render() == export_model(g).render()

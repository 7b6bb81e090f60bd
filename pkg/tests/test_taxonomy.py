import pytest

from kfcheck.taxonomy import (KIND_LABELS, MUTATIONS, PUBLISHED, Group, TaxonomyCatalog,
                              mutated, taxonomy_satisfiability)


def test_published_catalog_is_well_formed():
    PUBLISHED.validate()
    assert "Entity" in PUBLISHED.nodes
    assert PUBLISHED.nodes == KIND_LABELS


def test_asymmetry_has_two_parents():
    assert set(PUBLISHED.parents["Asymmetry"]) == {"Antisymmetry", "Irreflexivity"}


def test_closure_of_composite_aggregate():
    assert PUBLISHED.closure({"CompositeAggregate"}) == {
        "CompositeAggregate", "SharedAggregate", "PartWhole", "Relationship", "Entity"}


def test_closure_of_root_is_root():
    assert PUBLISHED.closure({"Entity"}) == {"Entity"}


def test_every_published_label_is_satisfiable():
    result = taxonomy_satisfiability()
    assert set(result) == PUBLISHED.nodes
    assert all(result.values())


def test_disjoint_relprops_mutation_breaks_asymmetry():
    result = taxonomy_satisfiability(mutated(["disjoint-relprops"]))
    assert result["Asymmetry"] is False
    assert result["Acyclicity"] is False
    assert result["Irreflexivity"] is True


def test_literal_mandatory_mutation():
    result = taxonomy_satisfiability(mutated(["literal-mandatory"]))
    assert {k for k, ok in result.items() if not ok} == {
        "DisjunctiveMandatory", "InclusiveMandatory"}


def test_unknown_mutation_rejected():
    with pytest.raises(ValueError):
        mutated(["no-such-mutation"])
    assert "disjoint-relprops" in MUTATIONS


def test_single_root_catalog():
    cat = TaxonomyCatalog(roots=("Thing",), groups=())
    assert taxonomy_satisfiability(cat) == {"Thing": True}


def test_cycle_rejected():
    cat = TaxonomyCatalog(roots=("R",), groups=(Group("R", ("A",)), Group("A", ("B",)), Group("B", ("A",))))
    with pytest.raises(ValueError):
        cat.validate()

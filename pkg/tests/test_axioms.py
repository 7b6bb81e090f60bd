import pytest

from kfcheck.axioms import (C2, DEFAULT_MAX_ARITY, GROUP_IDS, PER_ARITY, STAR, audit_c2, by_id,
                            catalog, catalog_for, effective_arity, family_id)
from kfcheck.model import ModelGraph
from kfcheck.logic import parse_formula


def test_ids_unique_and_grouped():
    ids = [a.id for a in catalog()]
    assert len(ids) == len(set(ids))
    assert {a.group for a in catalog()} == set(GROUP_IDS)
    assert len(GROUP_IDS) >= 70


def test_tiers_match_audit():
    for a in catalog():
        assert a.tier in (C2, STAR)
        assert audit_c2(a) == (a.tier == C2), a.id


def test_audit_examples():
    assert by_id()["REL-CONTAINS.3"].formula == parse_formula(
        "all x: Role(x) -> ex=1 y: Contains(y,x)")
    assert audit_c2(by_id()["REL-CONTAINS.3"])
    assert not audit_c2(by_id()["MAND-DIFFREL.1"])


@pytest.mark.parametrize("group,first", sorted(PER_ARITY.items()))
def test_per_arity_families(group, first):
    ids = [a.id for a in catalog(4) if a.group == group]
    assert ids == [f"{group}.n{n}" for n in range(first, 5)]
    assert {family_id(i) for i in ids} == {f"{group}.n*"}


def test_arity_follows_model():
    g = ModelGraph({"R": {"Relationship"}, **{f"r{i}": {"Role"} for i in range(12)}},
                   [("Contains", "R", f"r{i}") for i in range(12)])
    assert effective_arity(g) == 12
    assert "COMPAT-REL.n12" in {a.id for a in catalog_for(g)}
    assert effective_arity(ModelGraph({})) == DEFAULT_MAX_ARITY


def test_max_arity_bounds():
    with pytest.raises(ValueError):
        catalog(1)


def test_phi_family_instances():
    phi = [a for a in catalog() if a.group == "SUB-PHI"]
    assert phi and all(a.tier == STAR for a in phi)


def test_family_id_plain():
    assert family_id("TAX-ENT.3") == "TAX-ENT.3"

import json

import pytest

from kfcheck.checker import (FragmentMode, Session, Violation, axiom_sort_key, check_all,
                             check_group, compute_compatible)
from kfcheck.dsl import load, parse
from kfcheck.evaluator import violations_naive
from kfcheck.model import ModelGraph, kind_closure


def _g(entities, links=(), attrs=()):
    return kind_closure(ModelGraph(entities, links, attrs))


def test_well_formed_model_is_clean(fixtures):
    assert check_all(load(fixtures / "models" / "employment.kfm")) == []


def test_one_role_relationship(fixtures):
    found = check_all(load(fixtures / "models" / "one_role.kfm"), FragmentMode.C2_ONLY)
    hits = [v for v in found if v.axiom_id == "REL-CONTAINS.2"]
    assert [v.witness_names() for v in hits] == [{"x": "marriedTo"}]


def test_star_only_model(fixtures):
    g = load(fixtures / "models" / "star_only.kfm")
    assert check_all(g, "c2") == []
    full = check_all(g, "full")
    assert [v.axiom_id for v in full] == ["REL-REIFIED-COH.1"]
    s = Session(g)
    axiom = next(a for a in s.axioms if a.id == "REL-REIFIED-COH.1")
    assert [v.witness_names() for v in full] == violations_naive(axiom, s.structure)


def test_mand_single():
    g = _g({"r": {"Role"}, "m1": {"Mandatory"}, "m2": {"Mandatory"}},
           [("DeclaredOn", "m1", "r"), ("DeclaredOn", "m2", "r")])
    assert len(check_group("MAND-SINGLE", g)) == 1


def test_vcmp_ops_needs_an_operator():
    g = _g({"v": {"ValueComparisonConstraint"}})
    found = check_group("VCMP-OPS", g)
    assert len(found) == 1 and found[0].witness_names() == {"x": "v"}


def test_join_participates():
    ents = {"j": {"JoinSubsetConstraint"}}
    links = []
    for i in range(4):
        ents[f"r{i}"] = {"Role"}
        links.append(("ParticipatesIn", f"r{i}", "j"))
    for i in range(3):
        ents[f"R{i}"] = {"Relationship"}
        links.append(("ParticipatesIn", f"R{i}", "j"))
    assert check_group("JOIN-PARTICIPATES", _g(ents, links)) == []


def test_compatible_object_types():
    g = _g({"A": {"ObjectType"}, "B": {"ObjectType"}})
    assert ("A", "B") in compute_compatible(g)


def test_compatible_arity_mismatch():
    ents = {"R2": {"Relationship"}, "R3": {"Relationship"}}
    links = []
    for r, n in (("R2", 2), ("R3", 3)):
        for i in range(n):
            ents[f"{r}_{i}"] = {"Role"}
            links.append(("Contains", r, f"{r}_{i}"))
    assert ("R2", "R3") not in compute_compatible(_g(ents, links))


def test_compatible_roles_by_players():
    g = _g({"r1": {"Role"}, "r2": {"Role"}, "A": {"ObjectType"}, "B": {"ObjectType"},
            "c": {"ObjectTypeCardinality"}},
           [("RolePlaying", "r1", "c", "A"), ("RolePlaying", "r2", "c", "B")])
    assert ("r1", "r2") in compute_compatible(g)


def test_unknown_group():
    with pytest.raises(KeyError):
        check_group("NOPE", ModelGraph({}))


def test_violation_rendering():
    v = Violation("REL-CONTAINS.2", "C2", {"x": "R"}, "x=R falsifies something")
    assert str(v) == "REL-CONTAINS.2 [C2] x=R falsifies something"
    assert json.loads(json.dumps(v.as_json()))["witness"] == {"x": "R"}


def test_sort_key_is_natural():
    ids = ["COMPAT-REL.n10", "COMPAT-REL.n2", "TAX-ENT.10", "TAX-ENT.2"]
    assert sorted(ids, key=axiom_sort_key) == ["COMPAT-REL.n2", "COMPAT-REL.n10",
                                                "TAX-ENT.2", "TAX-ENT.10"]


def test_mode_strings():
    g = parse("entity R : Relationship.")
    assert check_all(g, "c2") == check_all(g, FragmentMode.C2_ONLY)
    with pytest.raises(ValueError):
        check_all(g, "bogus")

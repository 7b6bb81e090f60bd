import pytest

from kfcheck.axioms import by_id
from kfcheck.evaluator import EvaluationError, eval, structure, violations_naive
from kfcheck.logic import parse_formula
from kfcheck.model import ModelGraph, kind_closure

MIN2 = parse_formula("ex>=2 y: Contains(x,y)")


def _g(entities, links=(), attrs=()):
    return kind_closure(ModelGraph(entities, links, attrs))


def test_count_at_bound():
    g = _g({"R": {"Relationship"}, "r1": {"Role"}, "r2": {"Role"}},
           [("Contains", "R", "r1"), ("Contains", "R", "r2")])
    assert eval(MIN2, g, {"x": "R"}) is True


def test_count_below_bound():
    g = _g({"R": {"Relationship"}, "r1": {"Role"}}, [("Contains", "R", "r1")])
    assert eval(MIN2, g, {"x": "R"}) is False


def test_unbound_variable():
    with pytest.raises(EvaluationError, match="x"):
        eval(MIN2, _g({}))


def test_reified_coherence_false():
    g = _g({"R": {"Relationship"}, "r": {"Role"}, "N": {"NestedObjectType"},
            "c": {"ObjectTypeCardinality"}},
           [("Contains", "R", "r"), ("ReifiedAs", "R", "N")])
    assert eval(by_id()["REL-REIFIED-COH.1"].formula, g) is False
    assert violations_naive(by_id()["REL-REIFIED-COH.1"], g) == [{"x": "R", "y": "N"}]


def test_min2_witness():
    g = _g({"R": {"Relationship"}, "r": {"Role"}}, [("Contains", "R", "r")])
    assert violations_naive(by_id()["REL-CONTAINS.2"], g) == [{"x": "R"}]


def test_satisfied_axiom_has_no_witness():
    g = _g({"R": {"Relationship"}, "r": {"Role"}, "s": {"Role"}},
           [("Contains", "R", "r"), ("Contains", "R", "s")])
    assert violations_naive(by_id()["REL-CONTAINS.2"], g) == []


def test_disjointness_witness():
    g = _g({"e": {"Role", "EntityType"}})
    ax = next(a for a in by_id().values() if a.group == "TAX-ENT"
              and str(a.formula) == "all x: ~(Role(x) & EntityType(x))")
    assert violations_naive(ax, g) == [{"x": "e"}]


def test_structure_reuse_and_nominals():
    S = structure(_g({"v": {"ValueComparisonConstraint"}}, [("ComparisonOperatorOf", "v", "Less")]))
    assert eval(parse_formula("ex=1 y: ComparisonOperatorOf(x,y) & Operator(y)"), S, {"x": "v"})
    assert eval(parse_formula("Operator(Less)"), S) is True


def test_attribute_values():
    g = _g({"c": {"ObjectTypeCardinality"}}, attrs=[("MinimumCardinality", "c", 2)])
    assert eval(parse_formula("ex y: MinimumCardinality(x,y) & Integer(y)"), g, {"x": "c"})

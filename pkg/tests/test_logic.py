import pytest

from kfcheck.axioms import catalog
from kfcheck.logic import (And, Atom, Count, Eq, Forall, FormulaSyntaxError, Implies, Not,
                           is_c2, mentions, parse_formula, variable_names)


def test_parse_counting_quantifier():
    f = parse_formula("all x: Role(x) -> ex=1 y: Contains(y,x)")
    assert f == Forall(("x",), Implies(Atom("Role", ("x",)),
                                       Count("=", 1, ("y",), Atom("Contains", ("y", "x")))))


def test_precedence_and_negation():
    f = parse_formula("all x: ~(Role(x) & Relationship(x))")
    assert isinstance(f.body, Not) and isinstance(f.body.body, And)


def test_equality_and_nominal():
    f = parse_formula("all x,y: ComparisonOperatorOf(x,y) -> ~(x = y)")
    assert isinstance(f.body.right.body, Eq)


@pytest.mark.parametrize("text", ["all x: Role(x", "all : Role(x)", "Role(x) &", "ex>= y: P(y)"])
def test_syntax_errors(text):
    with pytest.raises(FormulaSyntaxError):
        parse_formula(text)


def test_c2_audit_examples():
    assert is_c2(parse_formula("all x: Role(x) -> ex=1 y: Contains(y,x)"))
    assert not is_c2(parse_formula("all x,y,z: Sub(x,y) & Super(x,z) -> Compatible(y,z)"))


def test_variable_names_and_mentions():
    f = parse_formula("all x,y,z: Sub(x,y) & Super(x,z) -> Compatible(y,z)")
    assert variable_names(f) == {"x", "y", "z"}
    assert mentions(f, "Compatible") and not mentions(f, "Role")


def test_catalog_formulas_print_and_reparse():
    for a in catalog(3):
        assert parse_formula(str(a.formula)) == a.formula, a.id

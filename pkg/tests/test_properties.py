"""Property-based checks over generated graphs."""

import random
from collections import Counter

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from kfcheck.axioms import catalog_for
from kfcheck.checker import FragmentMode, Session, check_all
from kfcheck.dsl import parse, serialize
from kfcheck.evaluator import eval, violations_naive
from kfcheck.model import TERNARY, ModelGraph, kind_closure
from kfcheck.owl import fold_naries, model_document
from kfcheck.randgraph import random_graph
from kfcheck.taxonomy import KIND_LABELS

LABELS = sorted(KIND_LABELS - {"Operator"})
graphs = st.integers(0, 2**32 - 1).map(lambda s: random_graph(random.Random(s)))
kind_sets = st.dictionaries(st.sampled_from(["a", "b", "c"]),
                            st.sets(st.sampled_from(LABELS), max_size=3), max_size=3)
fast = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@fast
@given(kind_sets, kind_sets)
def test_kind_closure_idempotent_and_monotone(a, b):
    ga = kind_closure(ModelGraph(a))
    assert kind_closure(ga) == ga
    merged = {e: a.get(e, set()) | b.get(e, set()) for e in set(a) | set(b)}
    gm = kind_closure(ModelGraph(merged))
    for e, ks in ga.entities.items():
        assert ks <= gm.entities[e]


@fast
@given(graphs)
def test_c2_output_is_subset_of_full(g):
    c2 = check_all(g, FragmentMode.C2_ONLY)
    full = check_all(g, FragmentMode.FULL)
    assert set(c2) <= set(full)
    assert {(v.axiom_id, tuple(sorted(v.witness_names().items()))) for v in c2} == {
        (v.axiom_id, tuple(sorted(v.witness_names().items()))) for v in full if v.tier == "C2"}


@fast
@given(graphs)
def test_checking_is_deterministic(g):
    first = [str(v) for v in check_all(g)]
    assert first == [str(v) for v in check_all(g)]


@settings(max_examples=25, deadline=None)
@given(graphs)
def test_naive_witnesses_empty_iff_true(g):
    s = Session(g)
    for a in catalog_for(s.structure.graph):
        assert (violations_naive(a, s.structure) == []) == eval(a.formula, s.structure), a.id


@fast
@given(graphs)
def test_serialize_round_trip(g):
    text = serialize(g)
    assert parse(text) == g
    assert serialize(parse(text)) == text


@fast
@given(graphs)
def test_reification_fold_restores_tuples(g):
    expected = Counter((l.pred, *l.args) for l in g.links if l.pred in TERNARY)
    assert fold_naries(model_document(g)) == expected

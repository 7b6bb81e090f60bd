"""Random small graphs and the checker-versus-oracle comparison."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

from .axioms import catalog_for
from .checker import Session, Violation
from .evaluator import violations_naive
from .model import (ATTR_PREDICATES, LINK_ARITY, MANY, NOMINALS, SIGNATURES,
                    ModelGraph, kind_closure)
from .taxonomy import KIND_LABELS

# kinds that the axioms talk about most, drawn more often than the rest
_COMMON = (
    "Relationship", "Role", "ObjectType", "DataType", "CardinalityConstraint",
    "Subsumption", "PartWhole", "SharedAggregate", "CompositeAggregate",
    "NestedObjectType", "Qualifier", "Attribute", "CompositeAttribute",
    "ValueType", "MandatoryConstraint", "Mandatory", "DisjunctiveMandatory",
    "InternalUniquenessConstraint", "ExternalUniquenessConstraint",
    "WeakIdentification", "SingleIdentification", "QualifiedIdentification",
    "WeakObjectType", "ValueComparisonConstraint", "RelationshipConstraint",
    "JoinConstraint", "DisjointRoles", "RoleEquality", "DisjointEntities",
    "CompletenessConstraint", "ValueRange", "ValueEnumeration", "Dimension",
    "CompoundCardinalityConstraint", "QualifiedRelationship", "ValueTypeConstraint",
)
_ALL = tuple(sorted(KIND_LABELS - {"Operator"}))
_VALUES = (0, 1, 2, MANY, "a", "b")


def random_graph(rng: random.Random, max_entities: int = 8, max_links: int = 20) -> ModelGraph:
    """A kind-closed graph with typing mostly, but not always, respected."""
    return _graph(rng, rng.randint(1, max_entities), rng.randint(0, max_links))


def sized_graph(seed: int = 0, entities: int = 100, links: int = 300) -> ModelGraph:
    """A graph with exactly the given numbers of entities and links."""
    return _graph(random.Random(seed), entities, links, distinct=True)


def _graph(rng: random.Random, n: int, n_links: int, distinct: bool = False) -> ModelGraph:
    names = [f"e{i}" for i in range(n)]
    entities = {}
    for e in names:
        k = rng.randint(1, 2)
        entities[e] = [rng.choice(_COMMON if rng.random() < 0.8 else _ALL) for _ in range(k)]
    g = kind_closure(ModelGraph(entities))

    def pick(alternatives):
        if "Operator" in alternatives:
            return rng.choice(NOMINALS) if rng.random() < 0.9 else rng.choice(names)
        fits = [e for e in names if g.entities[e] & set(alternatives)]
        if fits and rng.random() < 0.85:
            return rng.choice(fits)
        return rng.choice(names)

    preds = sorted(LINK_ARITY)
    links = []
    seen = set()
    while (len(seen) if distinct else len(links)) < n_links:
        p = rng.choice(preds)
        link = (p, *(pick(alts) for alts in SIGNATURES[p]))
        links.append(link)
        seen.add(link)
    attrs = []
    for _ in range(rng.randint(0, 3)):
        attrs.append((rng.choice(ATTR_PREDICATES), rng.choice(names), rng.choice(_VALUES)))
    return ModelGraph(g.entities, links, attrs)


def _key(w: dict) -> tuple:
    return tuple(sorted(w.items(), key=lambda kv: kv[0]))


@dataclass
class CompareReport:
    seed: int
    graphs: int = 0
    checks: int = 0
    disagreements: list[tuple[int, str]] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def agreement(self) -> float:
        return 1.0 if not self.checks else 1 - len(self.disagreements) / self.checks

    def summary(self) -> str:
        head = (f"seed={self.seed} graphs={self.graphs} checks={self.checks} "
                f"disagreements={len(self.disagreements)} agreement={self.agreement:.2%}")
        lines = [head] + [f"  graph {i}: {ax}" for i, ax in self.disagreements[:20]]
        return "\n".join(lines)


CheckFn = Callable[[Session, object], list[Violation]]


def oracle_compare(seed: int = 0, count: int = 1000, max_arity: int = 10,
                   check: CheckFn | None = None) -> CompareReport:
    """Run checker and reference evaluator on ``count`` random graphs.

    ``check(session, axiom)`` replaces the checker's per-axiom pass, which
    lets tests inject a faulty implementation.
    """
    check = check or (lambda s, a: s.violations_of(a))
    rng = random.Random(seed)
    rep = CompareReport(seed)
    start = time.perf_counter()
    for i in range(count):
        g = random_graph(rng)
        s = Session(g, max_arity)
        rep.graphs += 1
        if set(s.checker.ix.rels["Compatible"]) != s.structure.rels["Compatible"]:
            rep.disagreements.append((i, "Compatible"))
        rep.checks += 1
        for a in catalog_for(s.structure.graph, max_arity):
            got = {_key(v.witness) for v in check(s, a)}
            want = {_key(w) for w in violations_naive(a, s.structure)}
            rep.checks += 1
            if got != want:
                rep.disagreements.append((i, a.id))
    rep.seconds = time.perf_counter() - start
    return rep

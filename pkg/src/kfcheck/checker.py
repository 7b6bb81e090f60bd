"""Indexed validation pass over a model graph.

Unlike the reference evaluator, the checker never sweeps the universe when
it can avoid it. Each quantifier is answered from candidate bindings drawn
out of relation indexes: for ``all x,y: Contains(x,y) -> ...`` only the
stored ``Contains`` tuples are visited, and for ``ex=1 y: Contains(y,x)``
only the tuples whose second position is ``x``. The candidates come from a
small plan computed per formula: the atoms that must hold when a body is
true (for existential and counting quantifiers) or false (for universal
ones). Quantifiers with no such atoms fall back to the full universe.

``Compatible`` is computed here by a dedicated fixpoint on the graph.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import product
from typing import Iterable

from .axioms import GROUP_IDS, STAR, Axiom, catalog_for, effective_arity
from .evaluator import Structure, _elem_key
from .logic import (And, Atom, Const, Count, Eq, Exists, Forall, Formula, Iff,
                    Implies, Not, Or)
from .model import ModelGraph


class FragmentMode(Enum):
    C2_ONLY = "c2"
    FULL = "full"


@dataclass(frozen=True)
class Violation:
    axiom_id: str
    tier: str
    witness: dict = field(hash=False, compare=False)
    message: str = ""

    def witness_names(self) -> dict[str, str]:
        return {v: str(e) for v, e in self.witness.items()}

    def as_json(self) -> dict:
        return {"axiom": self.axiom_id, "tier": self.tier,
                "witness": self.witness_names(), "message": self.message}

    def __str__(self):
        return f"{self.axiom_id} [{self.tier}] {self.message}"


def axiom_sort_key(axiom_id: str):
    return [(0, int(p), "") if p.isdigit() else (1, 0, p) for p in re.split(r"(\d+)", axiom_id)]


# ------------------------------------------------------------------ Compatible

_CATEGORIES = ("ValueProperty", "DataType", "ObjectType", "Role", "Relationship")


def compute_compatible(g: ModelGraph, max_arity: int = 10) -> frozenset[tuple[str, str]]:
    """Greatest relation meeting the typing, role and arity conditions."""
    from .model import kind_closure

    g = kind_closure(g)
    n_max = effective_arity(g, max_arity)
    arity: dict[str, int] = {}
    roles_of: dict[str, list[str]] = {}
    plays: dict[str, set[str]] = {}
    for l in g.links:
        if l.pred == "Contains":
            arity[l.args[0]] = arity.get(l.args[0], 0) + 1
            roles_of.setdefault(l.args[0], []).append(l.args[1])
        elif l.pred == "RolePlaying":
            plays.setdefault(l.args[0], set()).add(l.args[2])

    by_cat = {c: sorted(e for e, ks in g.entities.items() if c in ks) for c in _CATEGORIES}
    pairs = {(x, y) for c in _CATEGORIES for x in by_cat[c] for y in by_cat[c]}

    def arity_ok(x, y):
        a, b = arity.get(x, 0), arity.get(y, 0)
        # the per-arity equivalences only speak about arities 2..n_max
        return a == b or (not 2 <= a <= n_max and not 2 <= b <= n_max)

    def holds(x, y, comp):
        kx = g.entities[x]
        if "Role" in kx:
            if not any((w, t) in comp for w in plays.get(x, ()) for t in plays.get(y, ())):
                return False
        if "Relationship" in kx:
            if not arity_ok(x, y):
                return False
            if not any((z, w) in comp for z in roles_of.get(x, ()) for w in roles_of.get(y, ())):
                return False
        return True

    comp = set(pairs)
    while True:
        drop = {p for p in comp if not holds(*p, comp)}
        if not drop:
            return frozenset(comp)
        comp -= drop


# ------------------------------------------------------------------ plans
# A plan is a list of alternatives; each alternative is (literals, local)
# where every assignment making the formula true (pos) or false (neg)
# satisfies all literals of at least one alternative. ``local`` names the
# variables bound inside nested existentials, which the join may bind too.

_MAX_ALTS = 64


def _product(a, b):
    if a is None:
        return b
    if b is None:
        return a
    out = [(la + lb, xa | xb) for la, xa in a for lb, xb in b]
    return out if len(out) <= _MAX_ALTS else a


def _union(plans):
    if any(p is None for p in plans):
        return None
    out = [alt for p in plans for alt in p]
    return out if len(out) <= _MAX_ALTS else None


@lru_cache(maxsize=None)
def _pos(f: Formula):
    if isinstance(f, Atom):
        return [((f,), frozenset())]
    if isinstance(f, Eq):
        return [((f,), frozenset())]
    if isinstance(f, And):
        plan = None
        for p in f.parts:
            plan = _product(plan, _pos(p))
        return plan
    if isinstance(f, Or):
        return _union([_pos(p) for p in f.parts])
    if isinstance(f, Exists):
        inner = _pos(f.body)
        if inner is None:
            return None
        return [(lits, local | frozenset(f.vars)) for lits, local in inner]
    if isinstance(f, Not):
        return _neg(f.body)
    return None


@lru_cache(maxsize=None)
def _neg(f: Formula):
    if isinstance(f, Not):
        return _pos(f.body)
    if isinstance(f, Implies):
        return _product(_pos(f.left), _neg(f.right))
    if isinstance(f, Or):
        plan = None
        for p in f.parts:
            plan = _product(plan, _neg(p))
        return plan
    if isinstance(f, And):
        return _union([_neg(p) for p in f.parts])
    if isinstance(f, Iff):
        return _union([_pos(f.left), _pos(f.right)])
    return None


# ------------------------------------------------------------------ indexes

class _Index:
    def __init__(self, S: Structure, compatible):
        self.S = S
        self.rels = dict(S.rels)
        self.rels["Compatible"] = compatible
        self._by_pos: dict[tuple[str, tuple[int, ...]], dict] = {}

    def rel(self, pred):
        return self.rels.get(pred, frozenset())

    def lookup(self, pred, positions: tuple[int, ...], key: tuple):
        k = (pred, positions)
        idx = self._by_pos.get(k)
        if idx is None:
            idx = {}
            for t in self.rel(pred):
                idx.setdefault(tuple(t[i] for i in positions), []).append(t)
            self._by_pos[k] = idx
        return idx.get(key, ())


def _value(t, env):
    return t.value if isinstance(t, Const) else env[t]


def _is_bound(t, env):
    return isinstance(t, Const) or t in env


class _Checker:
    def __init__(self, S: Structure, compatible):
        self.ix = _Index(S, compatible)
        self.universe = S.universe

    # -- truth under a full binding
    def ev(self, f: Formula, env: dict) -> bool:
        if isinstance(f, Atom):
            r = self.ix.rel(f.pred)
            if len(f.terms) == 1:
                return _value(f.terms[0], env) in r
            return tuple(_value(t, env) for t in f.terms) in r
        if isinstance(f, Eq):
            return _value(f.left, env) == _value(f.right, env)
        if isinstance(f, Not):
            return not self.ev(f.body, env)
        if isinstance(f, And):
            return all(self.ev(p, env) for p in f.parts)
        if isinstance(f, Or):
            return any(self.ev(p, env) for p in f.parts)
        if isinstance(f, Implies):
            return not self.ev(f.left, env) or self.ev(f.right, env)
        if isinstance(f, Iff):
            return self.ev(f.left, env) == self.ev(f.right, env)
        if isinstance(f, Forall):
            return next(self.falsifiers(f, env), None) is None
        if isinstance(f, Exists):
            return any(True for _ in self._satisfiers(f.vars, f.body, env))
        if isinstance(f, Count):
            c, op = f.bound, f.op
            stop = c if op == ">=" else c + 1
            n = 0
            for _ in self._satisfiers(f.vars, f.body, env):
                n += 1
                if n >= stop:
                    break
            return n >= c if op == ">=" else (n <= c if op == "<=" else n == c)
        raise TypeError(f)

    # -- candidate generation
    def _candidates(self, vs, plan, env):
        """Assignments to ``vs`` covering every one the plan admits."""
        if plan is None or any(set(vs) & local or local & env.keys() for _, local in plan):
            yield from product(self.universe, repeat=len(vs))
            return
        seen = set()
        for lits, local in plan:
            for row in self._join(list(lits), dict(env), vs):
                if row not in seen:
                    seen.add(row)
                    yield row

    def _join(self, lits, env, vs):
        if not lits:
            free = [v for v in vs if v not in env]
            if not free:
                yield tuple(env[v] for v in vs)
                return
            for combo in product(self.universe, repeat=len(free)):
                env.update(zip(free, combo))
                yield tuple(env[v] for v in vs)
            for v in free:
                del env[v]
            return
        # most constrained literal first
        best, best_score = None, None
        for i, lit in enumerate(lits):
            terms = lit.terms if isinstance(lit, Atom) else (lit.left, lit.right)
            unbound = sum(1 for t in terms if not _is_bound(t, env))
            if isinstance(lit, Eq) and unbound == 2:
                score = (9, 0)
            else:
                score = (unbound, -len(terms) + unbound)
            if best_score is None or score < best_score:
                best, best_score = i, score
        lit = lits[best]
        rest = lits[:best] + lits[best + 1:]
        if isinstance(lit, Eq):
            lb, rb = _is_bound(lit.left, env), _is_bound(lit.right, env)
            if lb and rb:
                if _value(lit.left, env) == _value(lit.right, env):
                    yield from self._join(rest, env, vs)
                return
            if lit.left == lit.right:
                yield from self._join(rest, env, vs)
                return
            if not lb and not rb:
                # only unconstrained equalities left: enumerate one side
                for e in self.universe:
                    env[lit.left] = e
                    env[lit.right] = e
                    yield from self._join(rest, env, vs)
                del env[lit.left], env[lit.right]
                return
            var, other = (lit.left, lit.right) if not lb else (lit.right, lit.left)
            env[var] = _value(other, env)
            yield from self._join(rest, env, vs)
            del env[var]
            return
        terms = lit.terms
        if len(terms) == 1:
            t = terms[0]
            members = self.ix.rel(lit.pred)
            if _is_bound(t, env):
                if _value(t, env) in members:
                    yield from self._join(rest, env, vs)
                return
            for e in sorted(members, key=_elem_key):
                env[t] = e
                yield from self._join(rest, env, vs)
            env.pop(t, None)
            return
        positions = tuple(i for i, t in enumerate(terms) if _is_bound(t, env))
        key = tuple(_value(terms[i], env) for i in positions)
        for tup in self.ix.lookup(lit.pred, positions, key):
            added = []
            ok = True
            for t, e in zip(terms, tup):
                if isinstance(t, Const):
                    continue
                if t in env:
                    if env[t] != e:
                        ok = False
                        break
                else:
                    env[t] = e
                    added.append(t)
            if ok:
                yield from self._join(rest, env, vs)
            for t in added:
                del env[t]

    def _satisfiers(self, vs, body, env):
        saved = {v: env[v] for v in vs if v in env}
        inner = {k: v for k, v in env.items() if k not in vs}
        try:
            for row in self._candidates(vs, _pos(body), inner):
                env.update(zip(vs, row))
                if self.ev(body, env):
                    yield row
        finally:
            for v in vs:
                env.pop(v, None)
            env.update(saved)

    def falsifiers(self, f: Forall, env: dict):
        vs = f.vars
        saved = {v: env[v] for v in vs if v in env}
        inner = {k: v for k, v in env.items() if k not in vs}
        try:
            for row in self._candidates(vs, _neg(f.body), inner):
                env.update(zip(vs, row))
                if not self.ev(f.body, env):
                    yield row
        finally:
            for v in vs:
                env.pop(v, None)
            env.update(saved)


# ------------------------------------------------------------------ API

def _describe(a: Axiom, witness: dict) -> str:
    names = ", ".join(f"{v}={e}" for v, e in witness.items())
    return f"{names} falsifies {a.text}"


class Session:
    """One graph prepared for checking: structure, indexes and Compatible."""

    def __init__(self, g: ModelGraph, max_arity: int = 10):
        self.structure = S = Structure(g, max_arity)
        self.axioms = catalog_for(S.graph, max_arity)
        self.checker = _Checker(S, set(compute_compatible(S.graph, max_arity)))

    def violations_of(self, a: Axiom) -> list[Violation]:
        f = a.formula
        if not isinstance(f, Forall):
            return [] if self.checker.ev(f, {}) else [Violation(a.id, a.tier, {}, a.text)]
        out = []
        for row in self.checker.falsifiers(f, {}):
            w = dict(zip(f.vars, row))
            out.append(Violation(a.id, a.tier, w, _describe(a, w)))
        return out

    def run(self, axioms: Iterable[Axiom], mode: FragmentMode) -> list[Violation]:
        out = []
        for a in axioms:
            if mode is FragmentMode.C2_ONLY and a.tier == STAR:
                continue
            out.extend(self.violations_of(a))
        out.sort(key=lambda v: (axiom_sort_key(v.axiom_id),
                                [_elem_key(e) for e in v.witness.values()]))
        return out


def _mode(mode) -> FragmentMode:
    return mode if isinstance(mode, FragmentMode) else FragmentMode(mode)


def check_all(g: ModelGraph, mode: FragmentMode | str = FragmentMode.FULL,
              max_arity: int = 10) -> list[Violation]:
    s = Session(g, max_arity)
    return s.run(s.axioms, _mode(mode))


def check_group(group_id: str, g: ModelGraph, mode: FragmentMode | str = FragmentMode.FULL,
                max_arity: int = 10) -> list[Violation]:
    if group_id not in GROUP_IDS:
        raise KeyError(f"unknown axiom group {group_id!r}")
    s = Session(g, max_arity)
    return s.run([a for a in s.axioms if a.group == group_id], _mode(mode))

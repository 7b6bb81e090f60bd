"""Reference evaluator: Tarskian truth of catalog formulas over a finite graph.

This is the oracle the indexed checker is compared against, so it favours
plain semantics over speed. Every quantifier ranges over the whole universe
(entities, operator nominals, attribute values and reified tuples). The only
shortcut is three-valued partial evaluation: when a quantifier has bound a
prefix of its variables and the body is already decided, the remaining
variables are not enumerated. A decided body holds for every extension, so
this changes no result.
"""

from __future__ import annotations

from itertools import product
from typing import Callable, Mapping, Optional

from .logic import (And, Atom, Const, Count, Eq, Exists, Forall, Formula, Iff,
                    Implies, Not, Or, Reified, Value)
from .model import (LINK_ARITY, NOMINALS, ModelGraph, derive_participants,
                    kind_closure, value_sort_key)


class EvaluationError(ValueError):
    pass


def _elem_key(e):
    if isinstance(e, str):
        return (1, e, ()) if e in NOMINALS else (0, e, ())
    if isinstance(e, Value):
        return (2, "", value_sort_key(e.v))
    return (3, e.pred, e.args)


def element_name(e) -> str:
    return str(e)


class _Rels(dict):
    def __init__(self, owner):
        super().__init__()
        self.owner = owner

    def __missing__(self, key):
        if key == "Compatible":
            return self.owner._derive_compatible()
        return frozenset()


class Structure:
    """Interpretation of every predicate over a kind-closed graph.

    Unary relations are sets of elements; others are sets of tuples.
    ``Compatible`` is derived on first use.
    """

    def __init__(self, g: ModelGraph, max_arity: int = 10):
        from .axioms import effective_arity

        self.graph = g = kind_closure(g)
        self.max_arity = effective_arity(g, max_arity)
        rels = self.rels = _Rels(self)

        def add(pred, item):
            rels.setdefault(pred, set()).add(item)

        for e, ks in g.entities.items():
            for k in ks:
                add(k, e)
        for n in NOMINALS:
            add("Operator", n)
        values = set()
        for a in g.attrs:
            val = Value(a.value)
            values.add(val)
            add(a.pred, (a.subject, val))
        for val in values:
            add("Literal", val)
            if not isinstance(val.v, str):
                add("Integer", val)
        tuples = []
        for l in g.links:
            add(l.pred, l.args)
            if LINK_ARITY[l.pred] == 3:
                t = Reified(l.pred, l.args)
                tuples.append(t)
                add(l.pred + "R", t)
                add("ReifiedNAry", t)
                for i, a in enumerate(l.args, 1):
                    add(f"{l.pred}{i}", (t, a))
        rels["Participant"] = set(derive_participants(g))
        self.universe = sorted(
            list(g.entities) + list(NOMINALS) + list(values) + tuples, key=_elem_key
        )

    def _derive_compatible(self):
        """Greatest fixpoint of the compatibility conditions.

        Starts from all pairs meeting the typing clause and drops pairs whose
        role or relationship condition fails, until nothing changes.
        """
        from .axioms import catalog

        axs = [a for a in catalog(self.max_arity) if a.group in ("COMPAT-ROLE", "COMPAT-REL")]
        typing = next(a for a in catalog(self.max_arity) if a.group == "COMPAT-DEF").formula.body.right
        t = _compiled(typing, frozenset("xy"))
        current = set()
        self.rels["Compatible"] = current
        for x in self.universe:
            for y in self.universe:
                if t({"x": x, "y": y}, self):
                    current.add((x, y))
        checks = [_compiled(a.formula.body, frozenset("xy")) for a in axs]
        changed = True
        while changed:
            changed = False
            for x, y in sorted(current, key=lambda p: (_elem_key(p[0]), _elem_key(p[1]))):
                env = {"x": x, "y": y}
                if any(c(env, self) is False for c in checks):
                    current.discard((x, y))
                    changed = True
        return current


# ------------------------------------------------------------- compilation
# A compiled formula is fn(env, structure) -> True | False | None, where None
# means "depends on variables not yet bound". ``None`` instead of a function
# means the result is unknown for every env with this bound set.

Compiled = Optional[Callable[[dict, Structure], Optional[bool]]]
_CACHE: dict[tuple[Formula, frozenset], Compiled] = {}


def _compiled(f: Formula, bound: frozenset) -> Compiled:
    key = (f, bound)
    if key not in _CACHE:
        _CACHE[key] = _compile(f, bound)
    return _CACHE[key]


def _getter(t):
    if isinstance(t, Const):
        v = t.value
        return lambda env: v
    return lambda env: env[t]


def _compile(f: Formula, bound: frozenset) -> Compiled:
    if isinstance(f, (Atom, Eq, Forall, Exists, Count)) and not f.free_vars <= bound:
        return None
    if isinstance(f, Atom):
        pred = f.pred
        if len(f.terms) == 1:
            (t,) = f.terms
            if isinstance(t, str):
                return lambda env, S: env[t] in S.rels[pred]
            c = t.value
            return lambda env, S: c in S.rels[pred]
        gets = [_getter(t) for t in f.terms]
        return lambda env, S: tuple(g(env) for g in gets) in S.rels[pred]
    if isinstance(f, Eq):
        gl, gr = _getter(f.left), _getter(f.right)
        return lambda env, S: gl(env) == gr(env)
    if isinstance(f, Not):
        b = _compiled(f.body, bound)
        if b is None:
            return None

        def neg(env, S):
            r = b(env, S)
            return None if r is None else not r
        return neg
    if isinstance(f, (And, Or)):
        parts = [_compiled(p, bound) for p in f.parts]
        known = [p for p in parts if p is not None]
        partial = len(known) < len(parts)
        if not known:
            return None
        stop = isinstance(f, Or)  # value that decides the connective

        def junction(env, S):
            unknown = partial
            for p in known:
                r = p(env, S)
                if r is stop:
                    return stop
                if r is None:
                    unknown = True
            return None if unknown else not stop
        return junction
    if isinstance(f, Implies):
        a, b = _compiled(f.left, bound), _compiled(f.right, bound)
        if a is None and b is None:
            return None

        def implies(env, S):
            l = a(env, S) if a else None
            if l is False:
                return True
            r = b(env, S) if b else None
            if r is True:
                return True
            if l is True and r is False:
                return False
            return None
        return implies
    if isinstance(f, Iff):
        a, b = _compiled(f.left, bound), _compiled(f.right, bound)
        if a is None or b is None:
            return None

        def iff(env, S):
            l = a(env, S)
            if l is None:
                return None
            r = b(env, S)
            return None if r is None else l == r
        return iff
    if isinstance(f, (Forall, Exists, Count)):
        return _compile_quant(f, bound)
    raise TypeError(f"not a formula: {f!r}")


def _stages(f, bound):
    vs = f.vars
    return [_compiled(f.body, bound | frozenset(vs[: i + 1])) for i in range(len(vs))]


def _compile_quant(f, bound) -> Compiled:
    vs = f.vars
    k = len(vs)
    stages = _stages(f, bound)

    def enumerate_(env, S, visit):
        """Call visit(r, depth) for each decided prefix; stop when it returns True."""
        U = S.universe
        saved = [(v, env[v]) for v in vs if v in env]

        def rec(i):
            v, st = vs[i], stages[i]
            for e in U:
                env[v] = e
                r = st(env, S) if st else None
                if r is None:
                    if rec(i + 1):
                        return True
                elif visit(r, i):
                    return True
            return False

        try:
            return rec(0)
        finally:
            for v in vs:
                env.pop(v, None)
            env.update(saved)

    if isinstance(f, Forall):
        return lambda env, S: not enumerate_(env, S, lambda r, i: r is False)
    if isinstance(f, Exists):
        return lambda env, S: enumerate_(env, S, lambda r, i: r is True)

    op, c = f.op, f.bound

    def count(env, S):
        n = len(S.universe)
        total = 0

        def visit(r, i):
            nonlocal total
            if r:
                total += n ** (k - i - 1)
            return total > c if op != ">=" else total >= c

        enumerate_(env, S, visit)
        if op == ">=":
            return total >= c
        if op == "<=":
            return total <= c
        return total == c
    return count


# ------------------------------------------------------------------ API

def structure(g: ModelGraph, max_arity: int = 10) -> Structure:
    return Structure(g, max_arity)


def eval(f: Formula, g: ModelGraph | Structure, binding: Mapping[str, object] | None = None,
         max_arity: int = 10) -> bool:
    """Truth of ``f`` in ``g`` under ``binding`` (variable -> element)."""
    binding = dict(binding or {})
    missing = sorted(f.free_vars - binding.keys())
    if missing:
        raise EvaluationError(f"unbound variable {missing[0]} in {f}")
    S = g if isinstance(g, Structure) else Structure(g, max_arity)
    fn = _compiled(f, frozenset(binding))
    return bool(fn(binding, S))


def violations_naive(axiom, g: ModelGraph | Structure, max_arity: int = 10) -> list[dict]:
    """Outermost bindings falsifying a closed ``all ...: body`` axiom.

    A formula that is not universally quantified yields ``[{}]`` when false.
    """
    f = axiom.formula if hasattr(axiom, "formula") else axiom
    S = g if isinstance(g, Structure) else Structure(g, max_arity)
    if not isinstance(f, Forall):
        return [] if eval(f, S) else [{}]
    vs = f.vars
    stages = _stages(f, frozenset())
    U = S.universe
    out: list[dict] = []
    env: dict = {}

    def rec(i):
        for e in U:
            env[vs[i]] = e
            r = stages[i](env, S) if stages[i] else None
            if r is None:
                rec(i + 1)
            elif r is False:
                head = [env[v] for v in vs[: i + 1]]
                for tail in product(U, repeat=len(vs) - i - 1):
                    out.append(dict(zip(vs, head + list(tail))))
        del env[vs[i]]

    rec(0)
    return out

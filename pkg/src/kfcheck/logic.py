"""Formula AST for function-free FOL with equality and counting quantifiers.

Formulas are written in a compact ASCII notation and parsed with
:func:`parse_formula`::

    all x: Role(x) -> ex=1 y: Contains(y, x)
    all x,y: Contains(x,y) -> Relationship(x) & Role(y)
    all x: Operator(x) -> x = Less | x = Leq

Lower-case identifiers are variables; the six operator nominals and integer
literals (or ``many``) are constants. Quantifier bodies extend as far right
as possible. Precedence, tightest first: ``~``, ``&``, ``|``, ``->``, ``<->``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Union

from .model import MANY, NOMINALS, TERNARY, format_value


@dataclass(frozen=True)
class Value:
    """An attribute value as an element of the evaluation universe."""

    v: object

    def __str__(self):
        return format_value(self.v)


@dataclass(frozen=True)
class Reified:
    """The individual standing for one n-ary link tuple."""

    pred: str
    args: tuple[str, ...]

    def __str__(self):
        return f"{self.pred}({', '.join(self.args)})"


Term = Union[str, "Const"]


@dataclass(frozen=True)
class Const:
    value: object  # nominal name (str) or Value

    def __str__(self):
        return str(self.value)


class Formula:
    __slots__ = ()

    @cached_property
    def free_vars(self) -> frozenset[str]:
        raise NotImplementedError


def _term_vars(terms) -> frozenset[str]:
    return frozenset(t for t in terms if isinstance(t, str))


def _term_str(t) -> str:
    return t if isinstance(t, str) else str(t)


@dataclass(frozen=True)
class Atom(Formula):
    pred: str
    terms: tuple

    @cached_property
    def free_vars(self):
        return _term_vars(self.terms)

    def __str__(self):
        return f"{self.pred}({','.join(map(_term_str, self.terms))})"


@dataclass(frozen=True)
class Eq(Formula):
    left: object
    right: object

    @cached_property
    def free_vars(self):
        return _term_vars((self.left, self.right))

    def __str__(self):
        return f"{_term_str(self.left)} = {_term_str(self.right)}"


@dataclass(frozen=True)
class Not(Formula):
    body: Formula

    @cached_property
    def free_vars(self):
        return self.body.free_vars

    def __str__(self):
        return f"~{_wrap(self.body, Not)}"


@dataclass(frozen=True)
class And(Formula):
    parts: tuple[Formula, ...]

    @cached_property
    def free_vars(self):
        return frozenset().union(*(p.free_vars for p in self.parts))

    def __str__(self):
        return " & ".join(_wrap(p, And, left=True) for p in self.parts)


@dataclass(frozen=True)
class Or(Formula):
    parts: tuple[Formula, ...]

    @cached_property
    def free_vars(self):
        return frozenset().union(*(p.free_vars for p in self.parts))

    def __str__(self):
        return " | ".join(_wrap(p, Or, left=True) for p in self.parts)


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula

    @cached_property
    def free_vars(self):
        return self.left.free_vars | self.right.free_vars

    def __str__(self):
        return f"{_wrap(self.left, Implies, True)} -> {_wrap(self.right, Implies)}"


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula

    @cached_property
    def free_vars(self):
        return self.left.free_vars | self.right.free_vars

    def __str__(self):
        return f"{_wrap(self.left, Iff, True)} <-> {_wrap(self.right, Iff, True)}"


@dataclass(frozen=True)
class Forall(Formula):
    vars: tuple[str, ...]
    body: Formula

    @cached_property
    def free_vars(self):
        return self.body.free_vars - set(self.vars)

    def __str__(self):
        return f"all {','.join(self.vars)}: {self.body}"


@dataclass(frozen=True)
class Exists(Formula):
    vars: tuple[str, ...]
    body: Formula

    @cached_property
    def free_vars(self):
        return self.body.free_vars - set(self.vars)

    def __str__(self):
        return f"ex {','.join(self.vars)}: {self.body}"


@dataclass(frozen=True)
class Count(Formula):
    """``ex>=c``, ``ex<=c`` or ``ex=c`` over a tuple of variables."""

    op: str
    bound: int
    vars: tuple[str, ...]
    body: Formula

    @cached_property
    def free_vars(self):
        return self.body.free_vars - set(self.vars)

    def __str__(self):
        return f"ex{self.op}{self.bound} {','.join(self.vars)}: {self.body}"


_LEVEL = {Iff: 0, Implies: 1, Or: 2, And: 3, Not: 4}
_QUANT = (Forall, Exists, Count)


def _wrap(f: Formula, parent: type, left: bool = False) -> str:
    if isinstance(f, _QUANT):
        return f"({f})"
    level = _LEVEL.get(type(f))
    if level is None:
        return str(f)
    if level < _LEVEL[parent] or (level == _LEVEL[parent] and (left or parent is Iff)):
        return f"({f})"
    return str(f)


def iter_subformulas(f: Formula):
    yield f
    if isinstance(f, Not):
        yield from iter_subformulas(f.body)
    elif isinstance(f, (And, Or)):
        for p in f.parts:
            yield from iter_subformulas(p)
    elif isinstance(f, (Implies, Iff)):
        yield from iter_subformulas(f.left)
        yield from iter_subformulas(f.right)
    elif isinstance(f, _QUANT):
        yield from iter_subformulas(f.body)


def variable_names(f: Formula) -> set[str]:
    names: set[str] = set()
    for sub in iter_subformulas(f):
        if isinstance(sub, (Atom, Eq)):
            names |= sub.free_vars
        elif isinstance(sub, _QUANT):
            names |= set(sub.vars)
    return names


def atom_arities(f: Formula) -> set[int]:
    return {len(s.terms) for s in iter_subformulas(f) if isinstance(s, Atom)}


def mentions(f: Formula, pred: str) -> bool:
    return any(isinstance(s, Atom) and s.pred == pred for s in iter_subformulas(f))


def is_c2(f: Formula) -> bool:
    """At most two variable names and no atom above arity two."""
    return len(variable_names(f)) <= 2 and all(n <= 2 for n in atom_arities(f))


# ---------------------------------------------------------------- parsing

class FormulaSyntaxError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(<->|->|ex(?:>=|<=|=)\d+|[(),:~&|=]|[A-Za-z_][A-Za-z0-9_]*|\d+)")

# unary atoms that are not kinds of the taxonomy
EXTRA_UNARY = frozenset({"Integer", "Literal", "ReifiedNAry"} | {p + "R" for p in TERNARY})


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks: list[str] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m:
                if text[pos:].strip() == "":
                    break
                raise FormulaSyntaxError(f"bad character at {pos} in {text!r}")
            self.toks.append(m.group(1))
            pos = m.end()
        self.i = 0

    def peek(self, k: int = 0):
        j = self.i + k
        return self.toks[j] if j < len(self.toks) else None

    def take(self, expect: str | None = None) -> str:
        tok = self.peek()
        if tok is None or (expect is not None and tok != expect):
            raise FormulaSyntaxError(f"expected {expect or 'token'} at {tok!r} in {self.text!r}")
        self.i += 1
        return tok

    def parse(self) -> Formula:
        f = self.iff()
        if self.peek() is not None:
            raise FormulaSyntaxError(f"trailing {self.peek()!r} in {self.text!r}")
        return f

    def iff(self):
        left = self.implies()
        if self.peek() == "<->":
            self.take()
            return Iff(left, self.iff())
        return left

    def implies(self):
        left = self.disj()
        if self.peek() == "->":
            self.take()
            return Implies(left, self.implies())
        return left

    def disj(self):
        parts = [self.conj()]
        while self.peek() == "|":
            self.take()
            parts.append(self.conj())
        return parts[0] if len(parts) == 1 else Or(tuple(parts))

    def conj(self):
        parts = [self.unary()]
        while self.peek() == "&":
            self.take()
            parts.append(self.unary())
        return parts[0] if len(parts) == 1 else And(tuple(parts))

    def unary(self):
        tok = self.peek()
        if tok == "~":
            self.take()
            return Not(self.unary())
        if tok == "all" or (tok is not None and tok.startswith("ex")
                            and (tok == "ex" or tok[2] in "<>=")):
            return self.quant()
        if tok == "(":
            self.take()
            f = self.iff()
            self.take(")")
            return f
        return self.atom()

    def quant(self):
        tok = self.take()
        names = [self.take()]
        while self.peek() == ",":
            self.take()
            names.append(self.take())
        self.take(":")
        body = self.iff()
        if tok == "all":
            return Forall(tuple(names), body)
        if tok == "ex":
            return Exists(tuple(names), body)
        m = re.fullmatch(r"ex(>=|<=|=)(\d+)", tok)
        return Count(m.group(1), int(m.group(2)), tuple(names), body)

    def term(self):
        tok = self.take()
        if tok.isdigit():
            return Const(Value(int(tok)))
        if tok == "many":
            return Const(Value(MANY))
        if tok in NOMINALS:
            return Const(tok)
        if tok[0].islower():
            return tok
        raise FormulaSyntaxError(f"bad term {tok!r} in {self.text!r}")

    def atom(self):
        if self.peek(1) == "(" and self.peek()[0].isupper():
            pred = self.take()
            self.take("(")
            terms = [self.term()]
            while self.peek() == ",":
                self.take()
                terms.append(self.term())
            self.take(")")
            return Atom(pred, tuple(terms))
        left = self.term()
        self.take("=")
        return Eq(left, self.term())


def parse_formula(text: str) -> Formula:
    return _Parser(text).parse()

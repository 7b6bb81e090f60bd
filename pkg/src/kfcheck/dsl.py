"""Text notation for model graphs (``.kfm`` files).

::

    # a binary fact type
    entity Person : ObjectType.
    entity Name : orm:"value type".
    entity has : Relationship.
    entity r1 : Role.
    link Contains(has, r1).
    attr MinimumCardinality(c1, 0).

Statements end with ``.``. Kinds are metamodel labels or dialect aliases
(``uml``, ``eer``, ``orm``). Names must be declared before use.
"""

from __future__ import annotations

import difflib
import json
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .model import (ATTR_PREDICATES, LINK_ARITY, MANY, NOMINALS, ModelError,
                    ModelGraph, format_value, kind_closure, most_specific)
from .taxonomy import KIND_LABELS

DIALECTS = ("uml", "eer", "orm")


class DslError(ValueError):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        self.message, self.line, self.col = message, line, col
        super().__init__(f"line {line}, col {col}: {message}" if line else message)


class UnknownAliasError(DslError):
    pass


@lru_cache(maxsize=None)
def alias_table() -> dict[str, dict[str, str]]:
    with resources.files(__package__).joinpath("aliases.json").open(encoding="utf-8") as fh:
        return json.load(fh)


def classify(term: str, dialect: str) -> str:
    """Map a surface term of a modelling language onto a kind label."""
    table = alias_table()
    if dialect not in table:
        raise UnknownAliasError(f"unknown dialect {dialect!r}; choose from {', '.join(DIALECTS)}")
    key = " ".join(term.lower().split())
    try:
        return table[dialect][key]
    except KeyError:
        near = difflib.get_close_matches(key, table[dialect], n=3, cutoff=0.5)
        hint = f"; nearest: {', '.join(near)}" if near else ""
        raise UnknownAliasError(f"unknown {dialect} alias {term!r}{hint}") from None


# ------------------------------------------------------------------ lexing

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+|\#[^\n]*)
  | (?P<nl>\n)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<int>[0-9]+)
  | (?P<str>"(?:[^"\\\n]|\\.)*")
  | (?P<punct>[.,:()])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def _tokens(text: str) -> list[Token]:
    out, pos, line, start = [], 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            ch = text[pos]
            what = "unterminated string" if ch == '"' else f"unexpected character {ch!r}"
            raise DslError(what, line, pos - start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line, start = line + 1, m.end()
        elif kind != "ws":
            out.append(Token(kind, m.group(), line, pos - start + 1))
        pos = m.end()
    out.append(Token("eof", "", line, pos - start + 1))
    return out


def _unquote(s: str) -> str:
    return re.sub(r"\\(.)", r"\1", s[1:-1])


# ------------------------------------------------------------------ parsing

class _Parser:
    def __init__(self, text: str):
        self.toks = _tokens(text)
        self.i = 0
        self.entities: dict[str, list[str]] = {}
        self.links: list[tuple] = []
        self.attrs: list[tuple] = []

    def peek(self) -> Token:
        return self.toks[self.i]

    def take(self, kind: str | None = None, text: str | None = None, what: str = "") -> Token:
        t = self.peek()
        if (kind and t.kind != kind) or (text is not None and t.text != text):
            found = "end of input" if t.kind == "eof" else repr(t.text)
            raise DslError(f"expected {what or text or kind}, found {found}", t.line, t.col)
        self.i += 1
        return t

    def run(self) -> ModelGraph:
        while self.peek().kind != "eof":
            t = self.take("name", what="statement keyword")
            if t.text == "entity":
                self.entity()
            elif t.text == "link":
                self.link()
            elif t.text == "attr":
                self.attr()
            else:
                raise DslError(f"expected entity, link or attr, found {t.text!r}", t.line, t.col)
        g = ModelGraph(self.entities, self.links, self.attrs)
        return kind_closure(g)

    def entity(self):
        name = self.take("name", what="entity name")
        if name.text in NOMINALS:
            raise DslError(f"{name.text} is a reserved operator name", name.line, name.col)
        if name.text in self.entities:
            raise DslError(f"redeclaration of {name.text}", name.line, name.col)
        if self.peek().text != ":":
            raise DslError(f"entity {name.text} has no kind", name.line, name.col)
        self.take(text=":")
        kinds = [self.kind()]
        while self.peek().text == ",":
            self.take()
            kinds.append(self.kind())
        self.take(text=".")
        self.entities[name.text] = kinds

    def kind(self) -> str:
        t = self.take("name", what="kind")
        if self.peek().text == ":":
            if t.text not in DIALECTS:
                raise DslError(f"unknown dialect {t.text!r}", t.line, t.col)
            self.take()
            s = self.take("str", what="quoted alias")
            try:
                return classify(_unquote(s.text), t.text)
            except UnknownAliasError as e:
                raise UnknownAliasError(e.message, s.line, s.col + 1) from None
        if t.text not in KIND_LABELS:
            near = difflib.get_close_matches(t.text, KIND_LABELS, n=1)
            hint = f" (did you mean {near[0]}?)" if near else ""
            raise DslError(f"unknown kind {t.text}{hint}", t.line, t.col)
        return t.text

    def ref(self) -> str:
        t = self.take("name", what="name")
        if t.text not in self.entities and t.text not in NOMINALS:
            raise DslError(f"undeclared name {t.text}", t.line, t.col)
        return t.text

    def link(self):
        p = self.take("name", what="link predicate")
        if p.text not in LINK_ARITY:
            raise DslError(f"unknown link predicate {p.text}", p.line, p.col)
        self.take(text="(")
        args = [self.ref()]
        while self.peek().text == ",":
            self.take()
            args.append(self.ref())
        close = self.take(text=")")
        if len(args) != LINK_ARITY[p.text]:
            raise DslError(f"{p.text} takes {LINK_ARITY[p.text]} arguments, got {len(args)}",
                           close.line, close.col)
        self.take(text=".")
        self.links.append((p.text, *args))

    def attr(self):
        p = self.take("name", what="attribute predicate")
        if p.text not in ATTR_PREDICATES:
            raise DslError(f"unknown attribute {p.text}", p.line, p.col)
        self.take(text="(")
        subject = self.ref()
        if subject in NOMINALS:
            raise DslError(f"operator {subject} cannot carry attributes", *self._prev_pos())
        self.take(text=",")
        v = self.take(what="value")
        if v.kind == "int":
            value = int(v.text)
        elif v.kind == "str":
            value = _unquote(v.text)
        elif v.kind == "name" and v.text == "many":
            value = MANY
        else:
            raise DslError(f"expected integer, many or string, found {v.text!r}", v.line, v.col)
        self.take(text=")")
        self.take(text=".")
        self.attrs.append((p.text, subject, value))

    def _prev_pos(self):
        t = self.toks[self.i - 1]
        return t.line, t.col


def parse(text: str) -> ModelGraph:
    """Parse ``.kfm`` text into a kind-closed graph; raises DslError."""
    return _Parser(text).run()


def load(path) -> ModelGraph:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def serialize(g: ModelGraph) -> str:
    """Canonical text: entities by name, then links, then attributes."""
    lines = []
    for e in sorted(g.entities):
        if not _NAME.match(e):
            raise ModelError(f"entity name {e!r} cannot be written as a .kfm name")
        if not g.entities[e]:
            raise ModelError(f"entity {e} has no kind")
        lines.append(f"entity {e} : {', '.join(most_specific(g.entities[e]))}.")
    for l in g.sorted_links():
        lines.append(f"link {l.pred}({', '.join(l.args)}).")
    for a in g.sorted_attrs():
        lines.append(f"attr {a.pred}({a.subject}, {format_value(a.value)}).")
    return "".join(line + "\n" for line in lines)

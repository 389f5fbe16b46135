"""Text format for instance files, plus canonical printing.

An instance file is a sequence of sections.  ``universe:`` (optional)
declares the atom alphabet, ``db:`` gives the initial database, and
exactly one of ``aic:``, ``rev:`` or ``lp:`` gives the program.  ``%``
starts a comment running to the end of the line, and whitespace is
otherwise insignificant.

    universe: a, b, c.
    db: a, b.
    aic:
    a, b -> -a | -b.

Rules follow the printed forms of the model classes: ``body -> head.``
for constraints with ``+a`` / ``-a`` actions, ``head <- body.`` for
revision rules with ``in(a)`` / ``out(a)`` literals, and
``head :- body.`` for disjunctive rules with ``not`` in the body.  An
empty head is written ``false``; an empty database is ``db: .``.

Parsing the output of :func:`print_instance` yields the instance back,
so printing is a canonical form: atom lists are sorted and rules keep
their original order with sorted bodies and heads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError
from .model import (
    AicProgram,
    AicRule,
    Literal,
    RevLiteral,
    RevProgram,
    RevRule,
    Universe,
    UpdateAction,
    ordered,
)
from .asp import LogicProgram, LpRule

SECTION_NAMES = ("universe", "db", "aic", "rev", "lp")
PROGRAM_SECTIONS = ("aic", "rev", "lp")

_NAME_RE = re.compile(r"[a-z][A-Za-z0-9_]*")

# Multi-character symbols first so "->" never lexes as "-" ">".
_PUNCT = ("->", "<-", ":-", "|", ",", ".", "(", ")", ":", "+", "-")


@dataclass(frozen=True)
class Token:
    kind: str  # "name", "punct" or "eof"
    text: str
    line: int
    col: int

    def describe(self) -> str:
        if self.kind == "eof":
            return "end of input"
        return f"'{self.text}'"


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    line = 1
    col = 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            col += 1
            i += 1
            continue
        if ch == "%":
            while i < n and text[i] != "\n":
                i += 1
            continue
        m = _NAME_RE.match(text, i)
        if m:
            word = m.group()
            tokens.append(Token("name", word, line, col))
            col += len(word)
            i += len(word)
            continue
        for punct in _PUNCT:
            if text.startswith(punct, i):
                tokens.append(Token("punct", punct, line, col))
                col += len(punct)
                i += len(punct)
                break
        else:
            raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("eof", "", line, col))
    return tokens


@dataclass(frozen=True)
class Instance:
    """A parsed instance file: a database plus one program."""

    kind: str  # "aic", "rev" or "lp"
    db: frozenset[str]
    program: AicProgram | RevProgram | LogicProgram
    declared_universe: Universe | None = None

    def universe(self) -> Universe:
        """The declared universe, or the atoms mentioned anywhere."""
        if self.declared_universe is not None:
            return self.declared_universe
        return Universe.collect(self.db, self.program)


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self, ahead: int = 0) -> Token:
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def next(self) -> Token:
        token = self.peek()
        if token.kind != "eof":
            self.pos += 1
        return token

    def fail(self, message: str, token: Token | None = None):
        token = token or self.peek()
        raise ParseError(message, token.line, token.col)

    def expect(self, text: str) -> Token:
        token = self.peek()
        if token.kind != "punct" or token.text != text:
            self.fail(f"expected '{text}', found {token.describe()}")
        return self.next()

    def at(self, text: str) -> bool:
        token = self.peek()
        return token.kind == "punct" and token.text == text

    def at_section_start(self) -> bool:
        return (
            self.peek().kind == "name"
            and self.peek(1).kind == "punct"
            and self.peek(1).text == ":"
        )

    def atom(self) -> str:
        token = self.peek()
        if token.kind != "name":
            self.fail(f"expected an atom, found {token.describe()}")
        if token.text in ("not", "false"):
            self.fail(f"'{token.text}' is a reserved word, not an atom")
        self.next()
        return token.text

    # -- sections ------------------------------------------------------

    def instance(self) -> Instance:
        universe: Universe | None = None
        db: frozenset[str] | None = None
        kind: str | None = None
        program: tuple = ()
        while self.peek().kind != "eof":
            if not self.at_section_start():
                self.fail(
                    f"expected a section header, found {self.peek().describe()}"
                )
            header = self.peek()
            name = self.next().text
            self.expect(":")
            if name not in SECTION_NAMES:
                self.fail(f"unknown section '{name}:'", header)
            if name == "universe":
                if universe is not None:
                    self.fail("duplicate universe section", header)
                universe = Universe(self.atom_list())
            elif name == "db":
                if db is not None:
                    self.fail("duplicate db section", header)
                db = frozenset(self.atom_list())
            else:
                if kind is not None:
                    self.fail(
                        f"'{name}:' clashes with an earlier '{kind}:' section",
                        header,
                    )
                kind = name
                program = self.rules(name)
        if kind is None:
            token = self.peek()
            raise ParseError(
                "missing program section (one of aic:, rev:, lp:)",
                token.line,
                token.col,
            )
        if db is None:
            token = self.peek()
            raise ParseError("missing db section", token.line, token.col)
        instance = Instance(kind, db, program, universe)
        if universe is not None:
            universe.require(db, context="db section")
            for rule in program:
                universe.require(rule.atoms(), context=f"rule '{rule}'")
        return instance

    def atom_list(self) -> list[str]:
        """A comma-separated atom list ending in '.'; possibly empty."""
        atoms: list[str] = []
        if self.at("."):
            self.next()
            return atoms
        while True:
            token = self.peek()
            name = self.atom()
            if name in atoms:
                self.fail(f"duplicate atom '{name}'", token)
            atoms.append(name)
            if self.at(","):
                self.next()
                continue
            self.expect(".")
            return atoms

    def rules(self, kind: str) -> tuple:
        parse_rule = {
            "aic": self.aic_rule,
            "rev": self.rev_rule,
            "lp": self.lp_rule,
        }[kind]
        rules = []
        while self.peek().kind != "eof" and not self.at_section_start():
            rules.append(parse_rule())
        return tuple(rules)

    # -- constraint rules ----------------------------------------------

    def aic_rule(self) -> AicRule:
        body: list[Literal] = []
        if not self.at("->"):
            while True:
                body.append(self.literal())
                if self.at(","):
                    self.next()
                    continue
                break
        self.expect("->")
        head: list[UpdateAction] = []
        if self.peek().kind == "name" and self.peek().text == "false":
            self.next()
        else:
            while True:
                head.append(self.action())
                if self.at("|"):
                    self.next()
                    continue
                break
        self.expect(".")
        return AicRule(frozenset(body), frozenset(head))

    def literal(self) -> Literal:
        if self.peek().kind == "name" and self.peek().text == "not":
            self.next()
            return Literal(self.atom(), positive=False)
        return Literal(self.atom())

    def action(self) -> UpdateAction:
        token = self.peek()
        if token.kind == "punct" and token.text in ("+", "-"):
            self.next()
            return UpdateAction(self.atom(), insert=token.text == "+")
        self.fail(f"expected '+atom' or '-atom', found {token.describe()}")
        raise AssertionError("unreachable")

    # -- revision rules ------------------------------------------------

    def rev_rule(self) -> RevRule:
        head: list[RevLiteral] = []
        if self.peek().kind == "name" and self.peek().text == "false":
            self.next()
        else:
            while True:
                head.append(self.rev_literal())
                if self.at("|"):
                    self.next()
                    continue
                break
        self.expect("<-")
        body: list[RevLiteral] = []
        if not self.at("."):
            while True:
                body.append(self.rev_literal())
                if self.at(","):
                    self.next()
                    continue
                break
        self.expect(".")
        return RevRule(frozenset(head), frozenset(body))

    def rev_literal(self) -> RevLiteral:
        token = self.peek()
        if token.kind == "name" and token.text in ("in", "out"):
            self.next()
            self.expect("(")
            atom = self.atom()
            self.expect(")")
            return RevLiteral(atom, is_in=token.text == "in")
        self.fail(f"expected 'in(atom)' or 'out(atom)', found {token.describe()}")
        raise AssertionError("unreachable")

    # -- disjunctive rules ---------------------------------------------

    def lp_rule(self) -> LpRule:
        head: list[str] = []
        if self.peek().kind == "name" and self.peek().text == "false":
            self.next()
        else:
            while True:
                head.append(self.atom())
                if self.at("|"):
                    self.next()
                    continue
                break
        pos: list[str] = []
        neg: list[str] = []
        if self.at(":-"):
            self.next()
            if not self.at("."):
                while True:
                    if self.peek().kind == "name" and self.peek().text == "not":
                        self.next()
                        neg.append(self.atom())
                    else:
                        pos.append(self.atom())
                    if self.at(","):
                        self.next()
                        continue
                    break
        if not (head or pos or neg):
            self.fail("a rule needs a head or a body")
        self.expect(".")
        return LpRule(frozenset(head), frozenset(pos), frozenset(neg))


def parse_instance(text: str) -> Instance:
    """Parse the text of an instance file.

    Raises :class:`ParseError` on malformed input and, when a universe
    is declared, :class:`UnknownAtom` for atoms outside it.
    """
    return _Parser(tokenize(text)).instance()


def parse_program(text: str, kind: str) -> tuple:
    """Parse a bare rule list of the given kind ("aic", "rev" or "lp")."""
    parser = _Parser(tokenize(text))
    rules = parser.rules(kind)
    token = parser.peek()
    if token.kind != "eof":
        raise ParseError(
            f"unexpected {token.describe()} after the last rule",
            token.line,
            token.col,
        )
    return rules


def _parse_comma_list(text: str, parse_one) -> frozenset:
    parser = _Parser(tokenize(text))
    items = []
    if parser.peek().kind != "eof":
        while True:
            items.append(parse_one(parser))
            if parser.at(","):
                parser.next()
                continue
            break
    token = parser.peek()
    if token.kind != "eof":
        raise ParseError(
            f"unexpected {token.describe()}", token.line, token.col
        )
    return frozenset(items)


def parse_actions(text: str) -> frozenset[UpdateAction]:
    """Parse a comma-separated list of update actions, e.g. ``+a, -b``."""
    return _parse_comma_list(text, _Parser.action)


def parse_rev_literals(text: str) -> frozenset[RevLiteral]:
    """Parse a comma-separated list like ``in(a), out(b)``."""
    return _parse_comma_list(text, _Parser.rev_literal)


def parse_literals(text: str) -> frozenset[Literal]:
    """Parse a comma-separated list of literals, e.g. ``a, not b``."""
    return _parse_comma_list(text, _Parser.literal)


def parse_atoms(text: str) -> frozenset[str]:
    """Parse a comma-separated list of atoms."""
    return _parse_comma_list(text, _Parser.atom)


def print_instance(instance: Instance) -> str:
    """Render an instance in canonical form.

    Atom lists are sorted, rules keep their order, and each rule is
    printed in the canonical form of its class, so parsing the result
    reproduces the instance exactly.
    """
    lines = []
    if instance.declared_universe is not None:
        atoms = ", ".join(instance.declared_universe.atoms)
        lines.append(f"universe: {atoms}." if atoms else "universe: .")
    atoms = ", ".join(sorted(instance.db))
    lines.append(f"db: {atoms}." if atoms else "db: .")
    lines.append(f"{instance.kind}:")
    for rule in instance.program:
        lines.append(str(rule))
    return "\n".join(lines) + "\n"


def format_set(items) -> str:
    """A brace-wrapped, canonically ordered set, e.g. ``{+a, -b}``."""
    return "{" + ", ".join(str(x) for x in ordered(items)) + "}"


def format_db(db: frozenset[str]) -> str:
    return "{" + ", ".join(sorted(db)) + "}"

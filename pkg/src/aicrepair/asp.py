"""Disjunctive logic programs, answer sets, and the encoding of programs as
constraint instances over the empty database.

A rule is *simple* when no atom occurs in it twice (across head, positive
body, and negative body). Simplicity is what makes the constraint encoding
well-behaved: the encoded rule's body is consistent and its non-updatable
part is exactly the original body.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import NotSimpleRule
from .model import (
    AicProgram,
    AicRule,
    Limits,
    Literal,
    Universe,
    UpdateAction,
)


@dataclass(frozen=True)
class LpRule:
    """A disjunctive rule ``a1 | ... | ak :- b1, ..., bm, not c1, ..., not cn``.

    All three parts are atom sets; an empty head is a constraint. The rule
    with every part empty is the unsatisfiable constraint; the reduct
    produces it when it strips the negative body of a triggered constraint.
    """

    head: frozenset[str]
    pos_body: frozenset[str]
    neg_body: frozenset[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "head", frozenset(self.head))
        object.__setattr__(self, "pos_body", frozenset(self.pos_body))
        object.__setattr__(self, "neg_body", frozenset(self.neg_body))

    @property
    def simple(self) -> bool:
        return (
            not self.head & self.pos_body
            and not self.head & self.neg_body
            and not self.pos_body & self.neg_body
        )

    @property
    def normal(self) -> bool:
        return len(self.head) <= 1

    def atoms(self) -> frozenset[str]:
        return self.head | self.pos_body | self.neg_body

    def __str__(self) -> str:
        head = " | ".join(sorted(self.head)) or "false"
        body = ", ".join(
            sorted(self.pos_body) + [f"not {a}" for a in sorted(self.neg_body)]
        )
        return f"{head} :- {body}." if body else f"{head}."


LogicProgram = tuple[LpRule, ...]


def is_simple(program: LogicProgram) -> bool:
    return all(r.simple for r in program)


def reduct(program: LogicProgram, interp: frozenset[str]) -> LogicProgram:
    """The Gelfond-Lifschitz reduct: drop rules blocked by the
    interpretation, strip negative bodies from the rest."""
    out = []
    for r in program:
        if r.neg_body & interp:
            continue
        out.append(r if not r.neg_body else LpRule(r.head, r.pos_body))
    return tuple(out)


def is_model_positive(interp: frozenset[str], program: LogicProgram) -> bool:
    """Model check for a negation-free program."""
    return all(
        not r.pos_body <= interp or r.head & interp for r in program
    )


def is_answer_set(program: LogicProgram, interp: frozenset[str]) -> bool:
    """True when the interpretation is a minimal model of its own reduct."""
    fixed = reduct(program, interp)
    if not is_model_positive(interp, fixed):
        return False
    pool = sorted(interp)
    for k in range(len(pool)):
        for combo in itertools.combinations(pool, k):
            if is_model_positive(frozenset(combo), fixed):
                return False
    return True


def answer_sets(
    program: LogicProgram,
    universe: Universe | None = None,
    limits: Limits | None = None,
) -> tuple[frozenset[str], ...]:
    """All answer sets, enumerated over subsets of the universe atoms and
    returned sorted."""
    limits = limits or Limits()
    uni = universe or Universe.collect(program)
    for r in program:
        uni.require(r.atoms(), "rule")
    limits.check_universe(uni)
    found = []
    atoms = uni.atoms
    for index in range(1 << len(atoms)):
        m = frozenset(a for bit, a in enumerate(atoms) if index >> bit & 1)
        if is_answer_set(program, m):
            found.append(m)
    return tuple(sorted(found, key=sorted))


def aic_of_rule(rule: LpRule) -> AicRule:
    """Encode ``a1 | ... | ak :- body`` as the constraint
    ``not a1, ..., not ak, body -> +a1 | ... | +ak``. Requires a simple rule."""
    if not rule.simple:
        raise NotSimpleRule(str(rule))
    body = (
        frozenset(Literal(a, False) for a in rule.head)
        | frozenset(Literal(a) for a in rule.pos_body)
        | frozenset(Literal(a, False) for a in rule.neg_body)
    )
    return AicRule(body, frozenset(UpdateAction(a, True) for a in rule.head))


def aic_of_program(program: LogicProgram) -> AicProgram:
    return tuple(aic_of_rule(r) for r in program)

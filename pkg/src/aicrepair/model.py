"""Core model: atoms, literals, update actions, revision literals, rules,
databases, and the update algebra over them.

Databases are plain ``frozenset[str]`` of atom names; universes make the
ambient atom set explicit and finite (no-effect and inertia sets are bounded
by it). Everything here is immutable and hashable, so values can be shared
freely across worker processes.

Conventions used throughout the package:

* an update action ``+a`` inserts atom ``a``, ``-a`` deletes it;
* a revision literal ``in(a)`` requires presence, ``out(a)`` absence;
* the *dual* flips polarity (``a``/``not a``, ``+a``/``-a``, ``in``/``out``);
* ``ua`` maps literals and revision literals to update actions, ``lit`` maps
  actions and revision literals to literals, and ``rev_literal`` maps the
  other two kinds to revision literals; all are bijections on their domains.
"""

from __future__ import annotations

import itertools
import os
import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    InconsistentUpdateSet,
    InputError,
    UnknownAtom,
    UniverseTooLarge,
    UpdatableConditionViolated,
)

ATOM_RE = re.compile(r"[a-z][A-Za-z0-9_]*\Z")

#: Words the text format reserves; they can never name an atom.
RESERVED_WORDS = frozenset({"not", "false"})


def _check_atom_name(name: str) -> str:
    if not ATOM_RE.match(name) or name in RESERVED_WORDS:
        raise InputError(f"invalid atom name '{name}'")
    return name


@dataclass(frozen=True, order=True)
class Literal:
    """A propositional literal: ``a`` or ``not a``."""

    atom: str
    positive: bool = True

    def dual(self) -> "Literal":
        return Literal(self.atom, not self.positive)

    def __str__(self) -> str:
        return self.atom if self.positive else f"not {self.atom}"


@dataclass(frozen=True, order=True)
class UpdateAction:
    """An insertion ``+a`` (``insert=True``) or deletion ``-a`` of an atom."""

    atom: str
    insert: bool

    def dual(self) -> "UpdateAction":
        return UpdateAction(self.atom, not self.insert)

    def __str__(self) -> str:
        return ("+" if self.insert else "-") + self.atom


@dataclass(frozen=True, order=True)
class RevLiteral:
    """A revision literal: ``in(a)`` (``is_in=True``) or ``out(a)``."""

    atom: str
    is_in: bool

    def dual(self) -> "RevLiteral":
        return RevLiteral(self.atom, not self.is_in)

    def __str__(self) -> str:
        return f"in({self.atom})" if self.is_in else f"out({self.atom})"


def ua(x: Literal | RevLiteral) -> UpdateAction:
    """The update action matching a literal or revision literal.

    ``a``/``in(a)`` map to ``+a``; ``not a``/``out(a)`` map to ``-a``.
    """
    if isinstance(x, Literal):
        return UpdateAction(x.atom, x.positive)
    if isinstance(x, RevLiteral):
        return UpdateAction(x.atom, x.is_in)
    raise TypeError(f"ua() not defined for {type(x).__name__}")


def lit(x: UpdateAction | RevLiteral) -> Literal:
    """The literal matching an update action or a revision literal."""
    if isinstance(x, UpdateAction):
        return Literal(x.atom, x.insert)
    if isinstance(x, RevLiteral):
        return Literal(x.atom, x.is_in)
    raise TypeError(f"lit() not defined for {type(x).__name__}")


def rev_literal(x: UpdateAction | Literal) -> RevLiteral:
    """The revision literal matching an update action or a literal."""
    if isinstance(x, (UpdateAction, Literal)):
        return RevLiteral(x.atom, x.insert if isinstance(x, UpdateAction) else x.positive)
    raise TypeError(f"rev_literal() not defined for {type(x).__name__}")


# Canonical sort keys: atom name first, then positive/insert/in before its dual.
def _key(x) -> tuple:
    flag = x.positive if isinstance(x, Literal) else (
        x.insert if isinstance(x, UpdateAction) else x.is_in
    )
    return (x.atom, 0 if flag else 1)


def ordered(xs: Iterable) -> list:
    """Sort literals/actions/revision literals into the canonical order."""
    return sorted(xs, key=_key)


@dataclass(frozen=True)
class Universe:
    """The ambient finite set of atoms, stored sorted by name.

    Bounding the atom vocabulary explicitly is what makes no-effect and
    inertia sets finite; everything that enumerates candidates works relative
    to a universe.
    """

    atoms: tuple[str, ...]

    def __post_init__(self):
        names = tuple(sorted(set(self.atoms)))
        for name in names:
            _check_atom_name(name)
        object.__setattr__(self, "atoms", names)

    def __contains__(self, atom: str) -> bool:
        return atom in self._index

    def __len__(self) -> int:
        return len(self.atoms)

    @property
    def _index(self) -> dict[str, int]:
        idx = self.__dict__.get("_index_cache")
        if idx is None:
            idx = {a: i for i, a in enumerate(self.atoms)}
            object.__setattr__(self, "_index_cache", idx)
        return idx

    def index(self, atom: str) -> int:
        try:
            return self._index[atom]
        except KeyError:
            raise UnknownAtom(atom) from None

    def require(self, atoms: Iterable[str], context: str = "") -> None:
        for a in atoms:
            if a not in self._index:
                raise UnknownAtom(a, context)

    @classmethod
    def collect(cls, *parts) -> "Universe":
        """Build the universe from databases (atom sets) and programs.

        Each part is an iterable of atom names or of rules exposing
        ``atoms()``.
        """
        names: set[str] = set()
        for part in parts:
            for x in part:
                if isinstance(x, str):
                    names.add(x)
                else:
                    names.update(x.atoms())
        return cls(tuple(names))


@dataclass(frozen=True)
class AicRule:
    """An active integrity constraint ``L1, ..., Lm -> a1 | ... | ak``.

    The body is a set of literals, the head a set of update actions (empty
    head means the plain integrity constraint "body must not all hold").
    Construction enforces the updatability condition: each head action's dual
    literal must appear in the body.
    """

    body: frozenset[Literal]
    head: frozenset[UpdateAction]

    def __post_init__(self):
        object.__setattr__(self, "body", frozenset(self.body))
        object.__setattr__(self, "head", frozenset(self.head))
        for action in ordered(self.head):
            if lit(action).dual() not in self.body:
                raise UpdatableConditionViolated(action, self._raw_text())

    def _raw_text(self) -> str:
        body = ", ".join(str(l) for l in ordered(self.body))
        head = " | ".join(str(a) for a in ordered(self.head)) or "false"
        return f"{body} -> {head}." if body else f"-> {head}."

    @property
    def up(self) -> frozenset[Literal]:
        """The updatable body part: duals of the head actions' literals."""
        return frozenset(lit(a).dual() for a in self.head)

    @property
    def nup(self) -> frozenset[Literal]:
        """The non-updatable body part."""
        return self.body - self.up

    @property
    def normal(self) -> bool:
        return len(self.head) <= 1

    def atoms(self) -> frozenset[str]:
        return frozenset(l.atom for l in self.body) | frozenset(
            a.atom for a in self.head
        )

    def __str__(self) -> str:
        return self._raw_text()


@dataclass(frozen=True)
class RevRule:
    """A revision rule ``a1 | ... | ak <- b1, ..., bm`` over revision literals.

    Either side may be empty, but not both; an empty head is a constraint.
    """

    head: frozenset[RevLiteral]
    body: frozenset[RevLiteral]

    def __post_init__(self):
        object.__setattr__(self, "head", frozenset(self.head))
        object.__setattr__(self, "body", frozenset(self.body))
        if not self.head and not self.body:
            raise InputError("a revision rule needs a head or a body")

    @property
    def normal(self) -> bool:
        return len(self.head) <= 1

    @property
    def proper(self) -> bool:
        """True when no head literal's dual occurs in the body."""
        return all(l.dual() not in self.body for l in self.head)

    def atoms(self) -> frozenset[str]:
        return frozenset(l.atom for l in self.head | self.body)

    def __str__(self) -> str:
        head = " | ".join(str(l) for l in ordered(self.head)) or "false"
        body = ", ".join(str(l) for l in ordered(self.body))
        return f"{head} <- {body}." if body else f"{head} <- ."


AicProgram = tuple[AicRule, ...]
RevProgram = tuple[RevRule, ...]


def is_normal(program: Iterable) -> bool:
    return all(r.normal for r in program)


def is_proper(program: RevProgram) -> bool:
    return all(r.proper for r in program)


# ---------------------------------------------------------------------------
# Update algebra


def is_consistent(xs: Iterable) -> bool:
    """True when no atom occurs with both polarities in the set."""
    xs = set(xs)
    return len({x.atom for x in xs}) == len(xs)


def _require_consistent(xs: Iterable) -> None:
    seen: dict[str, object] = {}
    for x in xs:
        if x.atom in seen and seen[x.atom] != x:
            raise InconsistentUpdateSet(x.atom)
        seen[x.atom] = x


def apply_update(db: frozenset[str], actions: Iterable[UpdateAction]) -> frozenset[str]:
    """Update a database by a consistent set of update actions."""
    actions = set(actions)
    _require_consistent(actions)
    added = {a.atom for a in actions if a.insert}
    removed = {a.atom for a in actions if not a.insert}
    return frozenset((db | added) - removed)


def apply_revision(db: frozenset[str], literals: Iterable[RevLiteral]) -> frozenset[str]:
    """Update a database by a consistent set of revision literals."""
    literals = set(literals)
    _require_consistent(literals)
    added = {l.atom for l in literals if l.is_in}
    removed = {l.atom for l in literals if not l.is_in}
    return frozenset((db | added) - removed)


def no_effect_set(
    db: frozenset[str], result: frozenset[str], universe: Universe
) -> frozenset[UpdateAction]:
    """All update actions that change nothing between ``db`` and ``result``:
    ``+a`` for atoms in both, ``-a`` for atoms in neither."""
    universe.require(db, "database")
    universe.require(result, "database")
    kept = db & result
    absent = (a for a in universe.atoms if a not in db and a not in result)
    return frozenset(UpdateAction(a, True) for a in kept) | frozenset(
        UpdateAction(a, False) for a in absent
    )


def inertia_set(
    db: frozenset[str], result: frozenset[str], universe: Universe
) -> frozenset[RevLiteral]:
    """The revision-literal counterpart of :func:`no_effect_set`."""
    return frozenset(rev_literal(a) for a in no_effect_set(db, result, universe))


def entails(db: frozenset[str], x) -> bool:
    """Satisfaction of literals, rules, and programs by a database.

    Accepts a literal or revision literal, a set of those (conjunction), an
    AIC or revision rule, or a program (tuple/list of rules). An AIC rule is
    satisfied unless its whole body holds; a revision rule is satisfied when
    a true body implies some true head literal.
    """
    if isinstance(x, Literal):
        return (x.atom in db) == x.positive
    if isinstance(x, RevLiteral):
        return (x.atom in db) == x.is_in
    if isinstance(x, AicRule):
        return not all(entails(db, l) for l in x.body)
    if isinstance(x, RevRule):
        if not all(entails(db, l) for l in x.body):
            return True
        return any(entails(db, l) for l in x.head)
    if isinstance(x, (set, frozenset, tuple, list)):
        return all(entails(db, e) for e in x)
    raise TypeError(f"entails() not defined for {type(x).__name__}")


def essential_actions(db: frozenset[str], universe: Universe) -> tuple[UpdateAction, ...]:
    """The one status-flipping action per universe atom: ``+a`` when absent,
    ``-a`` when present. Weak repairs are exactly the subsets of these that
    enforce the constraints."""
    return tuple(UpdateAction(a, a not in db) for a in universe.atoms)


def essential_rev_literals(db: frozenset[str], universe: Universe) -> tuple[RevLiteral, ...]:
    """Revision-side counterpart of :func:`essential_actions`."""
    return tuple(RevLiteral(a, a not in db) for a in universe.atoms)


def all_subsets(items: Iterable) -> Iterator[frozenset]:
    """All subsets of ``items``, smallest first, deterministic order."""
    pool = ordered(items)
    for k in range(len(pool) + 1):
        for combo in itertools.combinations(pool, k):
            yield frozenset(combo)


def proper_subsets(items: Iterable) -> Iterator[frozenset]:
    pool = set(items)
    for s in all_subsets(pool):
        if len(s) < len(pool):
            yield s


# ---------------------------------------------------------------------------
# Enumeration limits

DEFAULT_MAX_ATOMS = 12
ENV_MAX_ATOMS = "AICREPAIR_MAX_ATOMS"


@dataclass(frozen=True)
class Limits:
    """Bounds for exhaustive enumeration.

    ``max_atoms`` defaults to the AICREPAIR_MAX_ATOMS environment variable,
    falling back to 12; beyond it the engine refuses rather than sampling.
    ``max_candidates`` caps how many candidates a single enumeration may
    examine (a deterministic prefix of the candidate space).
    """

    max_atoms: int | None = None
    max_candidates: int | None = None

    def effective_max_atoms(self) -> int:
        if self.max_atoms is not None:
            return self.max_atoms
        env = os.environ.get(ENV_MAX_ATOMS)
        if env is not None:
            try:
                return int(env)
            except ValueError:
                raise InputError(
                    f"{ENV_MAX_ATOMS} must be an integer, got '{env}'"
                ) from None
        return DEFAULT_MAX_ATOMS

    def check_universe(self, universe: Universe) -> None:
        bound = self.effective_max_atoms()
        if len(universe) > bound:
            raise UniverseTooLarge(len(universe), bound)

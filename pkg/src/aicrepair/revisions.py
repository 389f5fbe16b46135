"""Revision semantics for databases under revision programs.

Candidates are consistent sets of revision literals. The family mirrors the
repair side (weak/plain/founded/justified) and adds supported revisions,
which exist only for normal programs. Justified updates keep their inertia
literals; the corresponding weak revisions are the updates with the inertia
part stripped.
"""

from __future__ import annotations

import concurrent.futures
import enum
from dataclasses import dataclass
from typing import Iterable

from . import transforms
from .errors import Interrupted, NotNormalProgram
from .model import (
    Limits,
    RevLiteral,
    RevProgram,
    Universe,
    apply_revision,
    entails,
    essential_rev_literals,
    inertia_set,
    is_consistent,
    is_normal,
    ordered,
    proper_subsets,
)


class RevisionClass(enum.Enum):
    """The revision semantics the engine can enumerate and check."""

    WEAK_REVISION = "weak-revision"
    REVISION = "revision"
    FOUNDED_WEAK_REVISION = "founded-weak-revision"
    FOUNDED_REVISION = "founded-revision"
    JUSTIFIED_WEAK_REVISION = "justified-weak-revision"
    JUSTIFIED_REVISION = "justified-revision"
    JUSTIFIED_WEAK_REVISION_NORMALIZED = "justified-weak-revision-normalized"
    JUSTIFIED_REVISION_NORMALIZED = "justified-revision-normalized"
    SUPPORTED_REVISION = "supported-revision"


_NORMALIZED = {
    RevisionClass.JUSTIFIED_WEAK_REVISION_NORMALIZED: RevisionClass.JUSTIFIED_WEAK_REVISION,
    RevisionClass.JUSTIFIED_REVISION_NORMALIZED: RevisionClass.JUSTIFIED_REVISION,
}


def _universe_for(db, program, literals=(), universe=None) -> Universe:
    if universe is not None:
        universe.require(db, "database")
        universe.require((l.atom for l in literals), "revision literals")
        for r in program:
            universe.require(r.atoms(), "rule")
        return universe
    return Universe.collect(db, (l.atom for l in literals), program)


def _require_normal(program: RevProgram) -> None:
    for r in program:
        if not r.normal:
            raise NotNormalProgram(str(r))


def triggered_subprogram(program: RevProgram, result: frozenset[str]) -> RevProgram:
    """The rules whose bodies hold in the given database."""
    return tuple(r for r in program if entails(result, r.body))


def _heads(program: RevProgram) -> frozenset[RevLiteral]:
    out: set[RevLiteral] = set()
    for r in program:
        out |= r.head
    return frozenset(out)


def check_supported_update(
    db: frozenset[str], program: RevProgram, literals
) -> bool:
    """The update must be exactly the heads of the rules it triggers.

    A triggered constraint contributes the unsatisfiable empty head, which
    no consistent set of literals can supply, so it defeats the equation
    outright. This keeps supported revisions a subclass of weak revisions.
    """
    _require_normal(program)
    u = frozenset(literals)
    if not is_consistent(u):
        return False
    sub = triggered_subprogram(program, apply_revision(db, u))
    if any(not r.head for r in sub):
        return False
    return u == _heads(sub)


def check_supported_revision(
    db: frozenset[str],
    program: RevProgram,
    literals,
    universe: Universe | None = None,
) -> bool:
    """A supported update with its no-effect literals stripped.

    The only possible witness update is the candidate extended by the
    triggered heads that happen to be no-effect literals, so the existential
    in the definition collapses to one reconstruction.
    """
    _require_normal(program)
    e = frozenset(literals)
    if not is_consistent(e):
        return False
    uni = _universe_for(db, program, e, universe)
    result = apply_revision(db, e)
    inertia = inertia_set(db, result, uni)
    if e & inertia:
        return False
    sub = triggered_subprogram(program, result)
    if any(not r.head for r in sub):
        return False
    heads = _heads(sub)
    u = e | (heads & inertia)
    return u == heads and is_consistent(u)


def check_weak_revision(db: frozenset[str], program: RevProgram, literals) -> bool:
    """Consistent, no no-effect literals, result satisfies the program."""
    u = frozenset(literals)
    if not is_consistent(u):
        return False
    result = apply_revision(db, u)
    uni = Universe.collect(db, (l.atom for l in u), program)
    if u & inertia_set(db, result, uni):
        return False
    return entails(result, program)


def check_revision(db: frozenset[str], program: RevProgram, literals) -> bool:
    u = frozenset(literals)
    if not check_weak_revision(db, program, u):
        return False
    return not _smaller_satisfying(db, program, u)


def _smaller_satisfying(db, program, u: frozenset[RevLiteral]) -> bool:
    return any(
        entails(apply_revision(db, sub), program) for sub in proper_subsets(u)
    )


def is_founded_rev_literal(
    db: frozenset[str], program: RevProgram, literals, literal: RevLiteral
) -> bool:
    """Some rule carries the literal in its head, its body holds in the
    revised database, and so do the duals of the other head literals."""
    result = apply_revision(db, literals)
    for r in program:
        if literal not in r.head:
            continue
        if not entails(result, r.body):
            continue
        if all(entails(result, b.dual()) for b in r.head - {literal}):
            return True
    return False


def is_founded_rev_set(db: frozenset[str], program: RevProgram, literals) -> bool:
    e = frozenset(literals)
    return all(is_founded_rev_literal(db, program, e, l) for l in e)


def check_founded_weak_revision(db, program: RevProgram, literals) -> bool:
    e = frozenset(literals)
    return check_weak_revision(db, program, e) and is_founded_rev_set(db, program, e)


def check_founded_revision(db, program: RevProgram, literals) -> bool:
    e = frozenset(literals)
    return check_revision(db, program, e) and is_founded_rev_set(db, program, e)


def is_closed_rev(program: RevProgram, literals) -> bool:
    """Closedness: a rule whose whole body is in the set must have a head
    literal in the set."""
    u = frozenset(literals)
    for r in program:
        if r.body <= u and not (r.head & u):
            return False
    return True


def check_justified_update(
    db: frozenset[str],
    program: RevProgram,
    literals,
    universe: Universe | None = None,
) -> bool:
    """A consistent set that is minimal closed under the program extended by
    its own inertia literals (inertia literals act as body-free facts, so
    every closed subset must contain them)."""
    u = frozenset(literals)
    if not is_consistent(u):
        return False
    uni = _universe_for(db, program, u, universe)
    inertia = inertia_set(db, apply_revision(db, u), uni)
    if not inertia <= u:
        return False
    if not is_closed_rev(program, u):
        return False
    for extra in proper_subsets(u - inertia):
        if is_closed_rev(program, inertia | extra):
            return False
    return True


def check_justified_weak_revision(
    db: frozenset[str],
    program: RevProgram,
    literals,
    universe: Universe | None = None,
) -> bool:
    e = frozenset(literals)
    if not is_consistent(e):
        return False
    uni = _universe_for(db, program, e, universe)
    inertia = inertia_set(db, apply_revision(db, e), uni)
    if e & inertia:
        return False
    return check_justified_update(db, program, e | inertia, uni)


def check_justified_revision(
    db: frozenset[str],
    program: RevProgram,
    literals,
    universe: Universe | None = None,
) -> bool:
    e = frozenset(literals)
    if not check_justified_weak_revision(db, program, e, universe):
        return False
    return not _smaller_satisfying(db, program, e)


def check_membership(
    db: frozenset[str],
    program: RevProgram,
    revision_class: RevisionClass,
    literals,
    universe: Universe | None = None,
) -> bool:
    """Membership test for any revision class, including normalized ones."""
    base = _NORMALIZED.get(revision_class)
    if base is not None:
        return check_membership(
            db, transforms.normalize_rev(program), base, literals, universe
        )
    checker = {
        RevisionClass.WEAK_REVISION: lambda: check_weak_revision(db, program, literals),
        RevisionClass.REVISION: lambda: check_revision(db, program, literals),
        RevisionClass.FOUNDED_WEAK_REVISION: lambda: check_founded_weak_revision(
            db, program, literals
        ),
        RevisionClass.FOUNDED_REVISION: lambda: check_founded_revision(
            db, program, literals
        ),
        RevisionClass.JUSTIFIED_WEAK_REVISION: lambda: check_justified_weak_revision(
            db, program, literals, universe
        ),
        RevisionClass.JUSTIFIED_REVISION: lambda: check_justified_revision(
            db, program, literals, universe
        ),
        RevisionClass.SUPPORTED_REVISION: lambda: check_supported_revision(
            db, program, literals, universe
        ),
    }[revision_class]
    return checker()


# ---------------------------------------------------------------------------
# Enumeration


@dataclass(frozen=True)
class RevisionReport:
    """Outcome of enumerating one revision class over an instance."""

    revision_class: RevisionClass
    sets: tuple[frozenset[RevLiteral], ...]
    examined: int


def sort_key(literals: Iterable[RevLiteral]) -> tuple:
    return tuple((l.atom, 0 if l.is_in else 1) for l in ordered(literals))


def _candidate(index: int, essential: tuple[RevLiteral, ...]) -> frozenset[RevLiteral]:
    return frozenset(l for bit, l in enumerate(essential) if index >> bit & 1)


def _scan(args) -> tuple[list, list, list, list]:
    """Examine candidate indexes [start, end); returns the weak revisions
    plus founded, justified, and supported hits among them."""
    (
        db,
        program,
        start,
        end,
        essential,
        need_founded,
        need_justified,
        need_supported,
        uni,
    ) = args
    weak, founded, justified, supported = [], [], [], []
    for index in range(start, end):
        u = _candidate(index, essential)
        if not entails(apply_revision(db, u), program):
            continue
        weak.append(u)
        if need_founded and is_founded_rev_set(db, program, u):
            founded.append(u)
        if need_justified and check_justified_weak_revision(db, program, u, uni):
            justified.append(u)
        if need_supported and check_supported_revision(db, program, u, uni):
            supported.append(u)
    return weak, founded, justified, supported


def _minimal(sets: list[frozenset]) -> list[frozenset]:
    return [u for u in sets if not any(v < u for v in sets)]


def enumerate_revisions(
    db: frozenset[str],
    program: RevProgram,
    revision_class: RevisionClass,
    universe: Universe | None = None,
    limits: Limits | None = None,
    jobs: int = 1,
) -> RevisionReport:
    """Exhaustively enumerate all members of a revision class.

    Candidates are subsets of the essential revision literals (one polarity
    per universe atom), which makes consistency and relevance hold by
    construction. Supported revisions require a normal program and are found
    among weak revisions; that is sound because supported updates always
    yield a database satisfying the program.
    """
    base = _NORMALIZED.get(revision_class)
    if base is not None:
        report = enumerate_revisions(
            db, transforms.normalize_rev(program), base, universe, limits, jobs
        )
        return RevisionReport(revision_class, report.sets, report.examined)

    if revision_class is RevisionClass.SUPPORTED_REVISION:
        _require_normal(program)

    limits = limits or Limits()
    uni = _universe_for(db, program, universe=universe)
    limits.check_universe(uni)

    essential = essential_rev_literals(db, uni)
    total = 1 << len(essential)
    examined = min(total, limits.max_candidates) if limits.max_candidates else total

    need_founded = revision_class in (
        RevisionClass.FOUNDED_WEAK_REVISION,
        RevisionClass.FOUNDED_REVISION,
    )
    need_justified = revision_class in (
        RevisionClass.JUSTIFIED_WEAK_REVISION,
        RevisionClass.JUSTIFIED_REVISION,
    )
    need_supported = revision_class is RevisionClass.SUPPORTED_REVISION

    weak, founded, justified, supported = [], [], [], []
    if jobs > 1 and examined > 1:
        chunk = -(-examined // jobs)
        ranges = [(s, min(s + chunk, examined)) for s in range(0, examined, chunk)]
        payloads = [
            (db, program, s, e, essential, need_founded, need_justified,
             need_supported, uni)
            for s, e in ranges
        ]
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            for w, f, j, s in pool.map(_scan, payloads):
                weak.extend(w)
                founded.extend(f)
                justified.extend(j)
                supported.extend(s)
    else:
        weak, founded, justified, supported = _scan(
            (db, program, 0, examined, essential, need_founded, need_justified,
             need_supported, uni)
        )

    if revision_class is RevisionClass.WEAK_REVISION:
        hits = weak
    elif revision_class is RevisionClass.REVISION:
        hits = _minimal(weak)
    elif revision_class is RevisionClass.FOUNDED_WEAK_REVISION:
        hits = founded
    elif revision_class is RevisionClass.FOUNDED_REVISION:
        minimal = set(map(frozenset, _minimal(weak)))
        hits = [u for u in founded if u in minimal]
    elif revision_class is RevisionClass.JUSTIFIED_WEAK_REVISION:
        hits = justified
    elif revision_class is RevisionClass.JUSTIFIED_REVISION:
        minimal = set(map(frozenset, _minimal(weak)))
        hits = [u for u in justified if u in minimal]
    else:
        hits = supported

    report = RevisionReport(
        revision_class, tuple(sorted(hits, key=sort_key)), examined
    )
    if examined < total:
        raise Interrupted(report)
    return report

"""Repair semantics for databases under active integrity constraints.

A candidate is a consistent set of update actions over the universe. The
semantics form a hierarchy: weak repairs only enforce the constraints,
repairs are change-minimal weak repairs, founded (weak) repairs require
every action to be supported by some rule, and justified (weak) repairs
require the stronger grounding property phrased through closed sets.

All ``check_*`` functions are pure membership tests: they return ``False``
for candidates that fail the definition (including inconsistent ones) and
raise only on malformed inputs such as atoms outside the universe.
"""

from __future__ import annotations

import concurrent.futures
import enum
from dataclasses import dataclass
from typing import Iterable

from . import transforms
from .errors import Interrupted, NotNormalProgram
from .model import (
    AicProgram,
    AicRule,
    Limits,
    Literal,
    Universe,
    UpdateAction,
    all_subsets,
    apply_update,
    entails,
    essential_actions,
    is_consistent,
    is_normal,
    lit,
    no_effect_set,
    ordered,
    proper_subsets,
)


class RepairClass(enum.Enum):
    """The repair semantics the engine can enumerate and check."""

    WEAK_REPAIR = "weak-repair"
    REPAIR = "repair"
    FOUNDED_WEAK_REPAIR = "founded-weak-repair"
    FOUNDED_REPAIR = "founded-repair"
    JUSTIFIED_WEAK_REPAIR = "justified-weak-repair"
    JUSTIFIED_REPAIR = "justified-repair"
    JUSTIFIED_WEAK_REPAIR_NORMALIZED = "justified-weak-repair-normalized"
    JUSTIFIED_REPAIR_NORMALIZED = "justified-repair-normalized"


#: Classes whose name carries an implicit normalization step.
_NORMALIZED = {
    RepairClass.JUSTIFIED_WEAK_REPAIR_NORMALIZED: RepairClass.JUSTIFIED_WEAK_REPAIR,
    RepairClass.JUSTIFIED_REPAIR_NORMALIZED: RepairClass.JUSTIFIED_REPAIR,
}


def _universe_for(db, program, actions=(), universe=None) -> Universe:
    if universe is not None:
        universe.require(db, "database")
        universe.require((a.atom for a in actions), "update set")
        for r in program:
            universe.require(r.atoms(), "constraint")
        return universe
    return Universe.collect(db, (a.atom for a in actions), program)


def _essential(db, actions: frozenset[UpdateAction]) -> bool:
    return all((a.atom not in db) == a.insert for a in actions)


def check_weak_repair(db: frozenset[str], program: AicProgram, actions) -> bool:
    """Consistent, every action changes the database, result satisfies all
    constraints."""
    u = frozenset(actions)
    if not is_consistent(u) or not _essential(db, u):
        return False
    return entails(apply_update(db, u), program)


def check_repair(db: frozenset[str], program: AicProgram, actions) -> bool:
    """A weak repair no proper subset of which already enforces the
    constraints."""
    u = frozenset(actions)
    if not check_weak_repair(db, program, u):
        return False
    return not _smaller_enforcing(db, program, u)


def _smaller_enforcing(db, program, u: frozenset[UpdateAction]) -> bool:
    return any(
        entails(apply_update(db, sub), program) for sub in proper_subsets(u)
    )


def is_founded_action(
    db: frozenset[str], program: AicProgram, actions, action: UpdateAction
) -> bool:
    """Some rule has ``action`` in its head, its non-updatable body holds in
    the updated database, and the duals of all other head actions hold too."""
    result = apply_update(db, actions)
    for r in program:
        if action not in r.head:
            continue
        if not entails(result, r.nup):
            continue
        others = r.head - {action}
        if all(entails(result, lit(b).dual()) for b in others):
            return True
    return False


def is_founded_set(db: frozenset[str], program: AicProgram, actions) -> bool:
    u = frozenset(actions)
    return all(is_founded_action(db, program, u, a) for a in u)


def check_founded_weak_repair(db, program: AicProgram, actions) -> bool:
    u = frozenset(actions)
    return check_weak_repair(db, program, u) and is_founded_set(db, program, u)


def check_founded_repair(db, program: AicProgram, actions) -> bool:
    u = frozenset(actions)
    return check_repair(db, program, u) and is_founded_set(db, program, u)


def is_closed(program: AicProgram, actions) -> bool:
    """Closedness under the rules: whenever all non-updatable body literals
    of a rule are made true by the set, the set contains a head action."""
    u = frozenset(actions)
    made_true = frozenset(lit(a) for a in u)
    for r in program:
        if r.nup <= made_true and not (r.head & u):
            return False
    return True


def check_justified_action_set(
    db: frozenset[str], program: AicProgram, actions, universe: Universe | None = None
) -> bool:
    """Consistent, contains all its own no-effect actions, closed, and
    minimal among closed sets with the same no-effect core."""
    u = frozenset(actions)
    if not is_consistent(u):
        return False
    uni = _universe_for(db, program, u, universe)
    ne = no_effect_set(db, apply_update(db, u), uni)
    if not ne <= u:
        return False
    if not is_closed(program, u):
        return False
    for extra in proper_subsets(u - ne):
        if is_closed(program, ne | extra):
            return False
    return True


def check_justified_weak_repair(
    db: frozenset[str], program: AicProgram, actions, universe: Universe | None = None
) -> bool:
    """The candidate together with its no-effect actions must form a
    justified action set, and must itself avoid no-effect actions."""
    e = frozenset(actions)
    if not is_consistent(e):
        return False
    uni = _universe_for(db, program, e, universe)
    ne = no_effect_set(db, apply_update(db, e), uni)
    if e & ne:
        return False
    return check_justified_action_set(db, program, e | ne, uni)


def check_justified_repair(
    db: frozenset[str], program: AicProgram, actions, universe: Universe | None = None
) -> bool:
    e = frozenset(actions)
    if not check_justified_weak_repair(db, program, e, universe):
        return False
    return not _smaller_enforcing(db, program, e)


def least_closure(
    seed: Iterable[UpdateAction], program: AicProgram
) -> frozenset[UpdateAction] | None:
    """The least superset of ``seed`` closed under a normal program, or
    ``None`` when no closed superset exists (a triggered constraint has an
    empty head, which nothing can satisfy)."""
    if not is_normal(program):
        raise NotNormalProgram(next(str(r) for r in program if not r.normal))
    w = set(seed)
    made_true = {lit(a) for a in w}
    changed = True
    while changed:
        changed = False
        for r in program:
            if not r.nup <= made_true:
                continue
            if not r.head:
                return None
            (action,) = r.head
            if action not in w:
                w.add(action)
                made_true.add(lit(action))
                changed = True
    return frozenset(w)


def decide_jwr_normal(
    db: frozenset[str], program: AicProgram, actions, universe: Universe | None = None
) -> bool:
    """Polynomial-time justified-weak-repair test for normal programs.

    For normal programs the unique minimal closed superset of the no-effect
    core can be computed bottom-up, so membership reduces to one fixpoint
    computation instead of a search over subsets.
    """
    if not is_normal(program):
        raise NotNormalProgram(next(str(r) for r in program if not r.normal))
    e = frozenset(actions)
    if not is_consistent(e):
        return False
    uni = _universe_for(db, program, e, universe)
    ne = no_effect_set(db, apply_update(db, e), uni)
    if e & ne:
        return False
    closure = least_closure(ne, program)
    return closure is not None and closure == e | ne


def check_membership(
    db: frozenset[str],
    program: AicProgram,
    repair_class: RepairClass,
    actions,
    universe: Universe | None = None,
) -> bool:
    """Membership test for any repair class, including the normalized ones."""
    base = _NORMALIZED.get(repair_class)
    if base is not None:
        return check_membership(
            db, transforms.normalize_aic(program), base, actions, universe
        )
    checker = {
        RepairClass.WEAK_REPAIR: lambda: check_weak_repair(db, program, actions),
        RepairClass.REPAIR: lambda: check_repair(db, program, actions),
        RepairClass.FOUNDED_WEAK_REPAIR: lambda: check_founded_weak_repair(
            db, program, actions
        ),
        RepairClass.FOUNDED_REPAIR: lambda: check_founded_repair(db, program, actions),
        RepairClass.JUSTIFIED_WEAK_REPAIR: lambda: check_justified_weak_repair(
            db, program, actions, universe
        ),
        RepairClass.JUSTIFIED_REPAIR: lambda: check_justified_repair(
            db, program, actions, universe
        ),
    }[repair_class]
    return checker()


# ---------------------------------------------------------------------------
# Enumeration


@dataclass(frozen=True)
class RepairReport:
    """Outcome of enumerating one repair class over an instance."""

    repair_class: RepairClass
    sets: tuple[frozenset[UpdateAction], ...]
    examined: int


def sort_key(actions: Iterable[UpdateAction]) -> tuple:
    return tuple((a.atom, 0 if a.insert else 1) for a in ordered(actions))


def _candidate(index: int, essential: tuple[UpdateAction, ...]) -> frozenset[UpdateAction]:
    return frozenset(
        a for bit, a in enumerate(essential) if index >> bit & 1
    )


def _scan(args) -> tuple[list, list, list]:
    """Examine candidate indexes [start, end): returns weak repairs plus the
    founded and justified hits among them, in examination order."""
    db, program, start, end, essential, need_founded, need_justified, uni = args
    weak, founded, justified = [], [], []
    for index in range(start, end):
        u = _candidate(index, essential)
        if not entails(apply_update(db, u), program):
            continue
        weak.append(u)
        if need_founded and is_founded_set(db, program, u):
            founded.append(u)
        if need_justified and check_justified_weak_repair(db, program, u, uni):
            justified.append(u)
    return weak, founded, justified


def _minimal(sets: list[frozenset]) -> list[frozenset]:
    return [u for u in sets if not any(v < u for v in sets)]


def enumerate_repairs(
    db: frozenset[str],
    program: AicProgram,
    repair_class: RepairClass,
    universe: Universe | None = None,
    limits: Limits | None = None,
    jobs: int = 1,
) -> RepairReport:
    """Exhaustively enumerate all members of a repair class.

    Candidates are the subsets of the essential actions (one polarity per
    universe atom), so consistency and change-effectiveness hold by
    construction. Results are sorted canonically; with ``jobs > 1`` the
    candidate space is split into contiguous index ranges whose merged
    output is identical to a serial run.
    """
    base = _NORMALIZED.get(repair_class)
    if base is not None:
        report = enumerate_repairs(
            db, transforms.normalize_aic(program), base, universe, limits, jobs
        )
        return RepairReport(repair_class, report.sets, report.examined)

    limits = limits or Limits()
    uni = _universe_for(db, program, universe=universe)
    limits.check_universe(uni)

    essential = essential_actions(db, uni)
    total = 1 << len(essential)
    examined = min(total, limits.max_candidates) if limits.max_candidates else total

    need_founded = repair_class in (
        RepairClass.FOUNDED_WEAK_REPAIR,
        RepairClass.FOUNDED_REPAIR,
    )
    need_justified = repair_class in (
        RepairClass.JUSTIFIED_WEAK_REPAIR,
        RepairClass.JUSTIFIED_REPAIR,
    )

    weak, founded, justified = [], [], []
    if jobs > 1 and examined > 1:
        chunk = -(-examined // jobs)
        ranges = [
            (s, min(s + chunk, examined)) for s in range(0, examined, chunk)
        ]
        payloads = [
            (db, program, s, e, essential, need_founded, need_justified, uni)
            for s, e in ranges
        ]
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            for w, f, j in pool.map(_scan, payloads):
                weak.extend(w)
                founded.extend(f)
                justified.extend(j)
    else:
        weak, founded, justified = _scan(
            (db, program, 0, examined, essential, need_founded, need_justified, uni)
        )

    if repair_class is RepairClass.WEAK_REPAIR:
        hits = weak
    elif repair_class is RepairClass.REPAIR:
        hits = _minimal(weak)
    elif repair_class is RepairClass.FOUNDED_WEAK_REPAIR:
        hits = founded
    elif repair_class is RepairClass.FOUNDED_REPAIR:
        minimal = set(map(frozenset, _minimal(weak)))
        hits = [u for u in founded if u in minimal]
    elif repair_class is RepairClass.JUSTIFIED_WEAK_REPAIR:
        hits = justified
    else:
        minimal = set(map(frozenset, _minimal(weak)))
        hits = [u for u in justified if u in minimal]

    report = RepairReport(
        repair_class, tuple(sorted(hits, key=sort_key)), examined
    )
    if examined < total:
        raise Interrupted(report)
    return report

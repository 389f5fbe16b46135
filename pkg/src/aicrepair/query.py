"""Consistent query answering over repaired databases.

A query is a conjunction of propositional literals. Its status under a
repair or revision class is determined by where it holds among all repaired
databases: everywhere (true), nowhere (false), or some but not all
(unknown). An instance without any repairs in the chosen class gets its own
verdict instead of a vacuous "true".
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .model import (
    Limits,
    Literal,
    Universe,
    apply_revision,
    apply_update,
    entails,
)
from .repairs import RepairClass, enumerate_repairs
from .revisions import RevisionClass, enumerate_revisions


class CqaStatus(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"
    NO_REPAIRS = "no-repairs"


@dataclass(frozen=True)
class CqaVerdict:
    """How often the query held: in ``holding`` of ``total`` repaired
    databases."""

    status: CqaStatus
    holding: int
    total: int


def cqa(
    db: frozenset[str],
    program,
    semantics: RepairClass | RevisionClass,
    query: Iterable[Literal],
    universe: Universe | None = None,
    limits: Limits | None = None,
    jobs: int = 1,
) -> CqaVerdict:
    """Evaluate a conjunctive query against every repaired database of the
    chosen class."""
    query = frozenset(query)
    if isinstance(semantics, RepairClass):
        report = enumerate_repairs(db, program, semantics, universe, limits, jobs)
        repaired = [apply_update(db, u) for u in report.sets]
    else:
        report = enumerate_revisions(db, program, semantics, universe, limits, jobs)
        repaired = [apply_revision(db, u) for u in report.sets]

    if not repaired:
        return CqaVerdict(CqaStatus.NO_REPAIRS, 0, 0)
    holding = sum(1 for r in repaired if entails(r, query))
    if holding == len(repaired):
        status = CqaStatus.TRUE
    elif holding == 0:
        status = CqaStatus.FALSE
    else:
        status = CqaStatus.UNKNOWN
    return CqaVerdict(status, holding, len(repaired))

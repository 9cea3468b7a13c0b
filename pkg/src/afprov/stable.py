"""Enumerate all stable extensions as 2-valued labelings.

Grounded-decided arguments keep their labels in every stable solution, so the
search only branches over the grounded-undecided arguments: pick the least
undecided one, try IN then OUT, propagate the direct consequences, and accept
a full assignment iff the set-based stability predicate holds. Propagation is
unit-style (no lookahead); the final predicate check makes it complete.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ArgumentationFramework, Label
from .grounded import GroundedSolution, solve_grounded
from .semantics import is_stable


@dataclass(frozen=True)
class StableSolution:
    """One stable extension: 1-based index, members, induced 2-valued labeling."""

    index: int
    extension: tuple[str, ...]
    labeling: dict[str, Label]


def _propagate(
    af: ArgumentationFramework, assignment: dict[str, Label], pending: list[str]
) -> bool:
    """Force direct consequences of newly-IN arguments; False on contradiction.

    An IN argument defeats all its targets and must not be attacked by
    another IN argument. OUT arguments carry no unit consequence here; the
    requirement that each has an IN attacker is settled by the final check.
    """
    while pending:
        x = pending.pop()
        for y in af.attackers_of[x]:
            if assignment.get(y) is Label.IN:
                return False
        for t in af.targets_of[x]:
            existing = assignment.get(t)
            if existing is Label.IN:
                return False
            if existing is None:
                assignment[t] = Label.OUT
    return True


def enumerate_stable(af: ArgumentationFramework) -> list[StableSolution]:
    """All stable extensions, sorted by cardinality then lexicographically.

    Returns an empty list when none exist (odd cycles, self-attackers).
    """
    grounded = solve_grounded(af)
    base = {a: lab for a, lab in grounded.labeling.items() if lab is not Label.UNDEC}
    undecided = list(grounded.undec_set)

    found: list[tuple[str, ...]] = []

    def search(assignment: dict[str, Label]) -> None:
        free = [a for a in undecided if a not in assignment]
        if not free:
            extension = tuple(
                a for a in af.arguments if assignment[a] is Label.IN
            )
            if is_stable(af, extension):
                found.append(extension)
            return
        pivot = free[0]
        for choice in (Label.IN, Label.OUT):
            trial = dict(assignment)
            trial[pivot] = choice
            if choice is Label.IN and not _propagate(af, trial, [pivot]):
                continue
            search(trial)

    search(dict(base))

    ordered = sorted(set(found), key=lambda ext: (len(ext), ext))
    return [
        StableSolution(
            index=i,
            extension=ext,
            labeling={
                a: (Label.IN if a in ext else Label.OUT) for a in af.arguments
            },
        )
        for i, ext in enumerate(ordered, start=1)
    ]


def stable_refines_grounded(
    grounded: GroundedSolution, solution: StableSolution
) -> bool:
    """True iff the stable labeling agrees with grounded on decided arguments."""
    return all(
        solution.labeling[a] is lab
        for a, lab in grounded.labeling.items()
        if lab is not Label.UNDEC
    )

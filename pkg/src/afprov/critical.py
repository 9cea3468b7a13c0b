"""Minimal critical attack sets for stable solutions.

A critical attack set for stable solution S is a minimal set of attacks whose
suspension turns the grounded solution of the modified framework into exactly
S. Candidates are the attacks between two grounded-undecided arguments; the
search walks candidate subsets by ascending size, validating each against the
grounded solver, so correctness comes from exhaustiveness rather than
heuristics. A budget on the candidate count guards the exponential blowup.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable

from .core import ArgumentationFramework, Attack, Label
from .errors import BudgetExceeded, NoCriticalSetFound
from .grounded import GroundedSolution, solve_grounded
from .stable import StableSolution

DEFAULT_CANDIDATE_BUDGET = 24


class Minimality(str, Enum):
    CARDINALITY = "cardinality"
    SUBSET = "subset"


@dataclass(frozen=True)
class CriticalAttackSet:
    """One minimal critical attack set for stable solution `stable_index`."""

    stable_index: int
    delta_index: int
    edges: tuple[Attack, ...]
    minimality: Minimality


def candidate_edges(
    af: ArgumentationFramework, grounded: GroundedSolution
) -> tuple[Attack, ...]:
    """Attacks whose attacker and target are both undecided in `grounded`."""
    return tuple(
        e
        for e in af.attacks
        if grounded.labeling[e.attacker] is Label.UNDEC
        and grounded.labeling[e.target] is Label.UNDEC
    )


def _widened_candidates(
    af: ArgumentationFramework, grounded: GroundedSolution, stable: StableSolution
) -> tuple[Attack, ...]:
    """Escape hatch: endpoints may also be decided differently than in `stable`."""

    def qualifies(a: str) -> bool:
        return (
            grounded.labeling[a] is Label.UNDEC
            or grounded.labeling[a] is not stable.labeling[a]
        )

    return tuple(
        e for e in af.attacks if qualifies(e.attacker) and qualifies(e.target)
    )


def validate_delta(
    af: ArgumentationFramework, stable: StableSolution, delta: Iterable[Attack]
) -> bool:
    """True iff suspending `delta` makes the grounded solution equal `stable`.

    The modified framework must solve to a 2-valued labeling whose IN set is
    exactly the stable extension.
    """
    modified = solve_grounded(af.without_attacks(delta))
    return modified.is_two_valued and modified.in_set == stable.extension


def find_critical_sets(
    af: ArgumentationFramework,
    grounded: GroundedSolution,
    stable: StableSolution,
    minimality: Minimality = Minimality.CARDINALITY,
    *,
    budget: int = DEFAULT_CANDIDATE_BUDGET,
    widen: bool = False,
) -> list[CriticalAttackSet]:
    """All minimal critical attack sets of `stable`, deterministically ordered.

    CARDINALITY mode returns every valid set of the smallest size that has
    one; SUBSET mode returns every inclusion-minimal valid set. Deltas are
    sorted lexicographically and numbered from 1. Raises BudgetExceeded when
    the candidate count exceeds `budget` and NoCriticalSetFound when no
    candidate subset validates (then retrying with widen=True enlarges the
    candidate pool).
    """
    minimality = Minimality(minimality)
    candidates = (
        _widened_candidates(af, grounded, stable)
        if widen
        else candidate_edges(af, grounded)
    )
    if len(candidates) > budget:
        raise BudgetExceeded(
            f"{len(candidates)} candidate edges exceed budget {budget}"
        )

    # Ascending-size scan; supersets of an already-valid set are never
    # re-validated, so in SUBSET mode the survivors are exactly the
    # inclusion-minimal valid sets.
    valid: list[frozenset[Attack]] = []
    for size in range(len(candidates) + 1):
        if minimality is Minimality.CARDINALITY and valid:
            break
        for combo in combinations(candidates, size):
            subset = frozenset(combo)
            if any(subset > seen for seen in valid):
                continue
            if validate_delta(af, stable, combo):
                valid.append(subset)

    if not valid:
        raise NoCriticalSetFound(
            f"no critical attack set within {len(candidates)} candidate edges "
            f"for stable solution {stable.index}"
        )

    ordered = sorted(tuple(sorted(s)) for s in valid)
    return [
        CriticalAttackSet(
            stable_index=stable.index,
            delta_index=j,
            edges=edges,
            minimality=minimality,
        )
        for j, edges in enumerate(ordered, start=1)
    ]


# Guess-and-check encoding for external cross-validation with an ASP solver:
# guess a subset of undecided-to-undecided attacks, recompute the grounded
# labeling without them, and require a fully decided result of minimal size.
ASP_CORE_PROGRAM = """\
arg(X) :- attacks(X,_).
arg(X) :- attacks(_,X).

in0(X) :- arg(X), out0(Y) : attacks(Y,X).
out0(X) :- attacks(Y,X), in0(Y).
undec0(X) :- arg(X), not in0(X), not out0(X).

{critical(Y,X)} :- attacks(Y,X), undec0(Y), undec0(X).

attacks1(Y,X) :- attacks(Y,X), not critical(Y,X).

in(X) :- arg(X), out(Y) : attacks1(Y,X).
out(X) :- attacks1(Y,X), in(Y).
undec(X) :- arg(X), not in(X), not out(X).

:- undec(_).

critical_cnt(N) :- N = #count{(X,Y) : critical(X,Y)}.
#minimize {N : critical_cnt(N)}.
"""


def _asp_constants(af: ArgumentationFramework) -> dict[str, str]:
    """Map argument names to ASP constants.

    Plain lowercasing is used when it stays injective and yields valid ASP
    identifiers; otherwise every constant falls back to a quoted string.
    """
    lowered = {a: a.lower() for a in af.arguments}
    ok = len(set(lowered.values())) == len(lowered) and all(
        re.match(r"[a-z][a-z0-9_]*\Z", c) for c in lowered.values()
    )
    if ok:
        return lowered
    return {a: '"' + a.replace('"', '\\"') + '"' for a in af.arguments}


def emit_asp_program(af: ArgumentationFramework, stable: StableSolution) -> str:
    """The search program plus facts for `af` and constraints pinning `stable`."""
    const = _asp_constants(af)
    lines = [ASP_CORE_PROGRAM, "% input framework"]
    lines += [f"attacks({const[e.attacker]},{const[e.target]})." for e in af.attacks]
    # attacks/2 facts cannot carry isolated arguments; declare them directly
    # so the pinning constraints below stay satisfiable.
    attacked_or_attacking = {a for e in af.attacks for a in e}
    lines += [
        f"arg({const[a]})." for a in af.arguments if a not in attacked_or_attacking
    ]
    lines.append("")
    lines.append("% pin the target stable labeling")
    in_set = set(stable.extension)
    for a in af.arguments:
        if a in in_set:
            lines.append(f":- not in({const[a]}).")
        else:
            lines.append(f":- in({const[a]}).")
    return "\n".join(lines) + "\n"

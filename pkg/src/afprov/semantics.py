"""Set-based extension semantics and exhaustive brute-force oracles.

These predicates follow the classical definitions directly (conflict-free,
characteristic function, admissible, complete, stable, grounded as least
fixpoint). They are deliberately independent of the game-based engine so the
two can cross-check each other; keep them simple rather than fast.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Literal

from .core import ArgumentationFramework, Attack
from .errors import MemberNotInAF, TooLargeForOracle

# Brute-force enumeration walks all 2^|V| subsets; guard desk-scale use.
ORACLE_MAX_ARGUMENTS = 20

# The critical-set oracle walks all 2^|candidates| edge subsets.
ORACLE_MAX_CANDIDATE_EDGES = 12

Semantics = Literal["conflict_free", "admissible", "complete", "stable"]

ExtensionSet = tuple[str, ...]


def _as_member_set(af: ArgumentationFramework, s: Iterable[str]) -> frozenset[str]:
    members = frozenset(s)
    stray = members - af.argument_set
    if stray:
        raise MemberNotInAF(f"not arguments of this AF: {sorted(stray)}")
    return members


def is_conflict_free(af: ArgumentationFramework, s: Iterable[str]) -> bool:
    """True iff no attack has both endpoints in `s` (self-attacks count)."""
    members = _as_member_set(af, s)
    return not any(a.attacker in members and a.target in members for a in af.attacks)


def characteristic(af: ArgumentationFramework, s: Iterable[str]) -> ExtensionSet:
    """Arguments defended by `s`: every attacker is counter-attacked from `s`.

    Unattacked arguments are vacuously defended.
    """
    members = _as_member_set(af, s)
    attacked_by_s = {a.target for a in af.attacks if a.attacker in members}
    return tuple(
        x
        for x in af.arguments
        if all(y in attacked_by_s for y in af.attackers_of[x])
    )


def is_admissible(af: ArgumentationFramework, s: Iterable[str]) -> bool:
    """True iff `s` is conflict-free and defends at least itself."""
    members = _as_member_set(af, s)
    return is_conflict_free(af, members) and members <= set(characteristic(af, members))


def is_complete(af: ArgumentationFramework, s: Iterable[str]) -> bool:
    """True iff `s` is conflict-free and exactly defends itself."""
    members = _as_member_set(af, s)
    return is_conflict_free(af, members) and members == set(characteristic(af, members))


def is_stable(af: ArgumentationFramework, s: Iterable[str]) -> bool:
    """True iff `s` is complete and attacks every outside argument."""
    members = _as_member_set(af, s)
    if not is_complete(af, members):
        return False
    attacked_by_s = {a.target for a in af.attacks if a.attacker in members}
    return all(x in attacked_by_s for x in af.argument_set - members)


def grounded_by_least_fixpoint(af: ArgumentationFramework) -> ExtensionSet:
    """The grounded extension: iterate the characteristic function from the
    empty set until it stops growing."""
    current: frozenset[str] = frozenset()
    while True:
        nxt = frozenset(characteristic(af, current))
        if nxt == current:
            return tuple(sorted(current))
        current = nxt


_PREDICATES = {
    "conflict_free": is_conflict_free,
    "admissible": is_admissible,
    "complete": is_complete,
    "stable": is_stable,
}


def enumerate_bruteforce(
    af: ArgumentationFramework, semantics: Semantics
) -> list[ExtensionSet]:
    """All subsets of V satisfying the predicate, sorted by cardinality then
    lexicographically. Raises TooLargeForOracle above the size guard."""
    if len(af.arguments) > ORACLE_MAX_ARGUMENTS:
        raise TooLargeForOracle(
            f"|V|={len(af.arguments)} exceeds oracle guard {ORACLE_MAX_ARGUMENTS}"
        )
    predicate = _PREDICATES[semantics]
    found = []
    for size in range(len(af.arguments) + 1):
        for subset in combinations(af.arguments, size):
            if predicate(af, subset):
                found.append(subset)
    return found


def removal_grounds_extension(
    af: ArgumentationFramework,
    removed_edges: Iterable[tuple[str, str]],
    extension: Iterable[str],
) -> bool:
    """Least-fixpoint check that suspending `removed_edges` makes `extension`
    the grounded extension of the modified framework, with nothing undecided.

    Independent of the game-based solver on purpose: it reuses only the
    characteristic-function fixpoint above.
    """
    modified = af.without_attacks(Attack(*e) for e in removed_edges)
    ground = set(grounded_by_least_fixpoint(modified))
    if ground != set(extension):
        return False
    attacked = {a.target for a in modified.attacks if a.attacker in ground}
    return ground | attacked == modified.argument_set


def critical_sets_bruteforce(
    af: ArgumentationFramework,
    extension: Iterable[str],
    candidates: tuple,
    minimality: str = "cardinality",
) -> list[tuple]:
    """Reference search for minimal critical attack sets: scan every subset
    of `candidates`, validate with removal_grounds_extension, then minimize
    (smallest size, or inclusion-minimal). Sorted lexicographically."""
    if len(candidates) > ORACLE_MAX_CANDIDATE_EDGES:
        raise TooLargeForOracle(
            f"{len(candidates)} candidate edges exceed oracle guard "
            f"{ORACLE_MAX_CANDIDATE_EDGES}"
        )
    target = tuple(sorted(extension))
    valid: list[frozenset] = []
    for size in range(len(candidates) + 1):
        for combo in combinations(candidates, size):
            if removal_grounds_extension(af, combo, target):
                valid.append(frozenset(combo))
    if not valid:
        return []
    if minimality == "cardinality":
        best = min(len(s) for s in valid)
        kept = [s for s in valid if len(s) == best]
    else:
        kept = [s for s in valid if not any(o < s for o in valid)]
    return sorted(tuple(sorted(s)) for s in kept)

"""Grounded solver with game provenance: labels, lengths, and edge types.

The solver reads the framework as a two-player game played along attacks in
the attacked-by direction: accepted (IN) arguments are lost positions for the
skeptic, defeated (OUT) arguments are won, undecided (UNDEC) are drawn. It
iterates two rules stage-wise, strictly alternating:

  even stage k: label IN  every unlabeled x whose attackers are all OUT
                (vacuously the unattacked arguments at stage 0)
  odd stage k:  label OUT every unlabeled x with at least one IN attacker

The stage at which a label first becomes known is the argument's length, so
IN lengths are even and OUT lengths odd; unlabeled arguments at the fixpoint
are UNDEC with infinite length. Lengths are independently recomputed from
their closed-form recurrences afterwards as a guard against off-by-one bugs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .core import (
    BLUNDERS,
    INFINITY,
    ArgumentationFramework,
    Attack,
    EdgeType,
    Label,
    Length,
    ProvenanceSubgraph,
)
from .errors import InvariantViolation, UnknownArgument


@dataclass(frozen=True)
class GroundedSolution:
    """The solved framework: 3-valued labeling plus provenance annotations."""

    af: ArgumentationFramework
    labeling: dict[str, Label]
    lengths: dict[str, Length]
    edge_types: dict[Attack, EdgeType]

    @cached_property
    def in_set(self) -> tuple[str, ...]:
        return tuple(a for a in self.af.arguments if self.labeling[a] is Label.IN)

    @cached_property
    def undec_set(self) -> tuple[str, ...]:
        return tuple(a for a in self.af.arguments if self.labeling[a] is Label.UNDEC)

    @property
    def is_two_valued(self) -> bool:
        return not self.undec_set


def classify_edges(
    af: ArgumentationFramework,
    labeling: dict[str, Label],
    lengths: dict[str, Length],
) -> dict[Attack, EdgeType]:
    """Assign an edge type to every attack from the endpoint labels/lengths.

    For an attack y -> x: a successful attack (x OUT, y IN) is primary when
    it realizes x's defeat length, i.e. |x| = |y| + 1, and secondary
    otherwise; (x IN, y OUT) is a failed attack; two UNDEC endpoints are an
    undecided attack; the OUT/UNDEC-attacker combinations are blunders. The
    remaining three combinations cannot occur in a sound solution and raise
    InvariantViolation.
    """
    types: dict[Attack, EdgeType] = {}
    for edge in af.attacks:
        lx, ly = labeling[edge.target], labeling[edge.attacker]
        if lx is Label.OUT and ly is Label.IN:
            primary = lengths[edge.target] == lengths[edge.attacker] + 1
            types[edge] = (
                EdgeType.SUCCESSFUL_PRIMARY if primary else EdgeType.SUCCESSFUL_SECONDARY
            )
        elif lx is Label.IN and ly is Label.OUT:
            types[edge] = EdgeType.FAILED
        elif lx is Label.UNDEC and ly is Label.UNDEC:
            types[edge] = EdgeType.UNDECIDED
        elif lx is Label.OUT and ly is Label.OUT:
            types[edge] = EdgeType.BLUNDER_B1
        elif lx is Label.OUT and ly is Label.UNDEC:
            types[edge] = EdgeType.BLUNDER_B2
        elif lx is Label.UNDEC and ly is Label.OUT:
            types[edge] = EdgeType.BLUNDER_B3
        else:
            raise InvariantViolation(
                f"impossible label combination on {edge}: "
                f"target {lx.value}, attacker {ly.value}"
            )
    return types


def _check_length_recurrences(
    af: ArgumentationFramework,
    labeling: dict[str, Label],
    lengths: dict[str, Length],
) -> None:
    """Recompute each decided length from its closed form and compare.

    OUT x: |x| = 1 + min over lengths of IN attackers.
    IN  x: |x| = 0 if unattacked, else 1 + max over (all OUT) attackers.
    """
    for x in af.arguments:
        label = labeling[x]
        attackers = af.attackers_of[x]
        if label is Label.OUT:
            in_lengths = [lengths[y] for y in attackers if labeling[y] is Label.IN]
            if not in_lengths:
                raise InvariantViolation(f"OUT argument {x} has no IN attacker")
            expected = 1 + min(in_lengths)
        elif label is Label.IN:
            expected = 1 + max(lengths[y] for y in attackers) if attackers else 0
        else:
            expected = INFINITY
        if lengths[x] != expected:
            raise InvariantViolation(
                f"length recurrence mismatch at {x}: stage {lengths[x]}, "
                f"recurrence {expected}"
            )


def solve_grounded(af: ArgumentationFramework) -> GroundedSolution:
    """Solve the framework under grounded semantics with full provenance."""
    labeling: dict[str, Label] = {}
    lengths: dict[str, Length] = {}
    unlabeled = set(af.arguments)
    attackers_of = af.attackers_of

    stage = 0
    while unlabeled:
        if stage % 2 == 0:
            newly = [
                x
                for x in unlabeled
                if all(labeling.get(y) is Label.OUT for y in attackers_of[x])
            ]
            label = Label.IN
        else:
            newly = [
                x
                for x in unlabeled
                if any(labeling.get(y) is Label.IN for y in attackers_of[x])
            ]
            label = Label.OUT
        if not newly:
            break
        for x in newly:
            labeling[x] = label
            lengths[x] = stage
        unlabeled.difference_update(newly)
        stage += 1

    for x in unlabeled:
        labeling[x] = Label.UNDEC
        lengths[x] = INFINITY

    _check_length_recurrences(af, labeling, lengths)
    return GroundedSolution(
        af=af,
        labeling={a: labeling[a] for a in af.arguments},
        lengths={a: lengths[a] for a in af.arguments},
        edge_types=classify_edges(af, labeling, lengths),
    )


def _provenance(
    sol: GroundedSolution, x: str, keep: frozenset[EdgeType]
) -> ProvenanceSubgraph:
    if x not in sol.af.argument_set:
        raise UnknownArgument(f"no argument named {x!r}")
    nodes = {x}
    edges: dict[Attack, EdgeType] = {}
    frontier = [x]
    incoming: dict[str, list[Attack]] = {a: [] for a in sol.af.arguments}
    for edge in sol.af.attacks:
        incoming[edge.target].append(edge)
    while frontier:
        current = frontier.pop()
        for edge in incoming[current]:
            kind = sol.edge_types[edge]
            if kind not in keep:
                continue
            edges[edge] = kind
            if edge.attacker not in nodes:
                nodes.add(edge.attacker)
                frontier.append(edge.attacker)
    return ProvenanceSubgraph(
        root=x,
        nodes=frozenset(nodes),
        edges={e: edges[e] for e in sorted(edges)},
    )


_ACTUAL_KEEP = frozenset(set(EdgeType) - BLUNDERS - {EdgeType.CRITICAL})
_PRIMARY_KEEP = _ACTUAL_KEEP - {EdgeType.SUCCESSFUL_SECONDARY}


def actual_provenance(sol: GroundedSolution, x: str) -> ProvenanceSubgraph:
    """Subgraph explaining x's status: follow non-blunder attacks backwards
    (target to attacker), transitively."""
    return _provenance(sol, x, _ACTUAL_KEEP)


def primary_provenance(sol: GroundedSolution, x: str) -> ProvenanceSubgraph:
    """Like actual_provenance, but secondary successful attacks are ignored
    as well, leaving only shortest-defeat explanations."""
    return _provenance(sol, x, _PRIMARY_KEEP)

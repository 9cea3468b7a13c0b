"""Provenance overlays: a stable solution rendered over the grounded one.

Suspending a critical attack set turns the grounded solution of the modified
framework into the chosen stable solution. The overlay keeps both views per
argument: the base label/length from the original grounded solution and the
effective label/length from the modified one. Arguments that were undecided
in the base carry primed effective labels; suspended edges are marked
CRITICAL and all surviving edges are re-classified in the modified framework.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from .core import ArgumentationFramework, Attack, EdgeType, Label, Length
from .critical import CriticalAttackSet, validate_delta
from .errors import InvalidDelta
from .grounded import GroundedSolution, solve_grounded
from .stable import StableSolution


class EffectiveLabel(str, Enum):
    """Overlay-side label; primed values mark base-undecided arguments."""

    IN = "in"
    OUT = "out"
    IN_PRIMED = "in_primed"
    OUT_PRIMED = "out_primed"

    @property
    def accepts(self) -> bool:
        return self in (EffectiveLabel.IN, EffectiveLabel.IN_PRIMED)


@dataclass(frozen=True)
class OverlayNodeLabel:
    base: Label
    effective: EffectiveLabel
    base_length: Length
    effective_length: Length
    length_changed: bool


@dataclass(frozen=True)
class ProvenanceOverlay:
    af: ArgumentationFramework
    grounded: GroundedSolution
    stable_index: int
    delta: CriticalAttackSet
    node_labels: dict[str, OverlayNodeLabel]
    edge_types: dict[Attack, EdgeType]

    @cached_property
    def primed_edges(self) -> frozenset[Attack]:
        """Edges drawn primed: at least one endpoint was base-undecided.

        Display convention only; the edge's type already comes from the
        modified framework.
        """
        undec = {
            a
            for a, lab in self.node_labels.items()
            if lab.base is Label.UNDEC
        }
        return frozenset(
            e for e in self.edge_types if e.attacker in undec or e.target in undec
        )

    @cached_property
    def effective_lengths(self) -> dict[str, Length]:
        return {a: lab.effective_length for a, lab in self.node_labels.items()}


def build_overlay(
    af: ArgumentationFramework,
    grounded: GroundedSolution,
    stable: StableSolution,
    delta: CriticalAttackSet,
) -> ProvenanceOverlay:
    """Construct the overlay for (stable, delta); delta must validate."""
    if not validate_delta(af, stable, delta.edges):
        raise InvalidDelta(
            f"delta {[str(e) for e in delta.edges]} does not ground "
            f"stable solution {stable.index}"
        )
    modified = solve_grounded(af.without_attacks(delta.edges))

    node_labels: dict[str, OverlayNodeLabel] = {}
    for a in af.arguments:
        base = grounded.labeling[a]
        effective_plain = modified.labeling[a]
        if base is Label.UNDEC:
            effective = (
                EffectiveLabel.IN_PRIMED
                if effective_plain is Label.IN
                else EffectiveLabel.OUT_PRIMED
            )
        else:
            effective = EffectiveLabel(base.value)
        node_labels[a] = OverlayNodeLabel(
            base=base,
            effective=effective,
            base_length=grounded.lengths[a],
            effective_length=modified.lengths[a],
            length_changed=grounded.lengths[a] != modified.lengths[a],
        )

    edge_types = dict(modified.edge_types)
    for e in delta.edges:
        edge_types[e] = EdgeType.CRITICAL
    edge_types = {e: edge_types[e] for e in sorted(edge_types)}

    return ProvenanceOverlay(
        af=af,
        grounded=grounded,
        stable_index=stable.index,
        delta=delta,
        node_labels=node_labels,
        edge_types=edge_types,
    )

"""Layered layouts: layer = length, undecided arguments in a separate band.

Within-layer ordering uses a barycenter heuristic over provenance-relevant
edges (blunders and suspended edges carry no explanatory weight): one upward
sweep then one downward sweep, ties broken by argument name. The result is
slot indices only; renderers decide geometry.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import BLUNDERS, Attack, EdgeType, Label, Length
from .grounded import GroundedSolution
from .overlay import ProvenanceOverlay

# Band marker used in positions for arguments outside the layering.
UNDEC_BAND = None

Position = tuple[int | None, int]


@dataclass(frozen=True)
class LayeredLayout:
    layers: dict[int, tuple[str, ...]]
    undec_band: tuple[str, ...]
    positions: dict[str, Position]

    @property
    def max_layer(self) -> int:
        return max(self.layers) if self.layers else -1


def _barycenter_order(
    layers: dict[int, list[str]],
    edges: dict[Attack, EdgeType],
) -> dict[int, list[str]]:
    """Two-sweep barycenter sort; nodes without relevant neighbors hold their
    slot, ties fall back to name order."""
    relevant = [
        e for e, t in edges.items() if t not in BLUNDERS and t is not EdgeType.CRITICAL
    ]
    incoming: dict[str, list[str]] = {}
    outgoing: dict[str, list[str]] = {}
    for e in relevant:
        incoming.setdefault(e.target, []).append(e.attacker)
        outgoing.setdefault(e.attacker, []).append(e.target)

    level_of = {
        name: level for level, names in layers.items() for name in names
    }

    def sweep(levels: list[int], neighbors: dict[str, list[str]], below: bool) -> None:
        slot = {
            name: i for names in layers.values() for i, name in enumerate(names)
        }
        for level in levels:
            def key(name: str) -> tuple[float, str]:
                ref = [
                    slot[n]
                    for n in neighbors.get(name, ())
                    if n in slot
                    and (level_of.get(n, level) < level) == below
                    and level_of.get(n, level) != level
                ]
                center = sum(ref) / len(ref) if ref else float(slot[name])
                return (center, name)

            layers[level] = sorted(layers[level], key=key)
            for i, name in enumerate(layers[level]):
                slot[name] = i

    ordered_levels = sorted(layers)
    sweep(ordered_levels, incoming, below=True)
    sweep(list(reversed(ordered_levels)), outgoing, below=False)
    return layers


def _build(
    lengths: dict[str, Length],
    decided: dict[str, bool],
    edges: dict[Attack, EdgeType],
) -> LayeredLayout:
    layers: dict[int, list[str]] = {}
    band = []
    for name in sorted(lengths):
        if decided[name]:
            layers.setdefault(int(lengths[name]), []).append(name)
        else:
            band.append(name)
    layers = {k: layers[k] for k in sorted(layers)}
    layers = _barycenter_order(layers, edges)

    positions: dict[str, Position] = {}
    for level, names in layers.items():
        for i, name in enumerate(names):
            positions[name] = (level, i)
    for i, name in enumerate(band):
        positions[name] = (UNDEC_BAND, i)
    return LayeredLayout(
        layers={k: tuple(v) for k, v in layers.items()},
        undec_band=tuple(band),
        positions=positions,
    )


def layout_grounded(sol: GroundedSolution) -> LayeredLayout:
    """Layout of a grounded solution: decided arguments at layer = length,
    undecided ones in the band (lexicographic order)."""
    decided = {a: lab is not Label.UNDEC for a, lab in sol.labeling.items()}
    return _build(sol.lengths, decided, sol.edge_types)


def layout_overlay(ov: ProvenanceOverlay) -> LayeredLayout:
    """Layout of an overlay using effective lengths; the band is empty since
    every argument is decided once the critical attacks are suspended."""
    decided = {a: True for a in ov.af.arguments}
    return _build(ov.effective_lengths, decided, ov.edge_types)

"""Core data model: argumentation frameworks, labels, lengths, edge types.

Everything here is immutable after construction and ordered deterministically:
arguments sort by name (case-sensitive codepoint order) and attacks by
(attacker, target). All downstream output formats rely on these orders.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, NamedTuple

from .errors import InvalidToken

# Length of an undecided argument; decided arguments have int lengths.
INFINITY = math.inf

Length = int | float

_TOKEN = re.compile(r"^[^\s(),.]+$")


class Label(str, Enum):
    """Acceptance status of an argument in a labeling."""

    IN = "in"
    OUT = "out"
    UNDEC = "undec"


class EdgeType(str, Enum):
    """Role of an attack edge in the solved framework.

    Successful attacks come from IN arguments and defeat their target;
    primary ones are part of a shortest defeat. Failed attacks come from
    OUT arguments against IN targets. Undecided attacks connect two UNDEC
    arguments. The three blunder kinds are irrelevant for argument values:
    B1 = (target OUT, attacker OUT), B2 = (target OUT, attacker UNDEC),
    B3 = (target UNDEC, attacker OUT). CRITICAL marks suspended edges and
    appears only in overlays.
    """

    SUCCESSFUL_PRIMARY = "successful_primary"
    SUCCESSFUL_SECONDARY = "successful_secondary"
    FAILED = "failed"
    UNDECIDED = "undecided"
    BLUNDER_B1 = "blunder_b1"
    BLUNDER_B2 = "blunder_b2"
    BLUNDER_B3 = "blunder_b3"
    CRITICAL = "critical"


BLUNDERS = frozenset({EdgeType.BLUNDER_B1, EdgeType.BLUNDER_B2, EdgeType.BLUNDER_B3})


class Attack(NamedTuple):
    """A directed attack edge: attacker -> target."""

    attacker: str
    target: str

    def __str__(self) -> str:
        return f"{self.attacker}->{self.target}"


def validate_name(name: str) -> str:
    """Check an argument name: nonempty, no whitespace and none of '(' ')' ',' '.'."""
    if not isinstance(name, str) or not _TOKEN.match(name):
        raise InvalidToken(f"invalid argument name: {name!r}")
    return name


@dataclass(frozen=True)
class ArgumentationFramework:
    """A finite digraph of arguments and attacks.

    Instances are built via :func:`build_af`, which validates names,
    deduplicates, auto-registers attack endpoints, and sorts.
    """

    arguments: tuple[str, ...]
    attacks: tuple[Attack, ...]

    @cached_property
    def argument_set(self) -> frozenset[str]:
        return frozenset(self.arguments)

    @cached_property
    def attack_set(self) -> frozenset[Attack]:
        return frozenset(self.attacks)

    @cached_property
    def attackers_of(self) -> dict[str, tuple[str, ...]]:
        """Sorted attackers per argument (total over V)."""
        table: dict[str, list[str]] = {a: [] for a in self.arguments}
        for atk in self.attacks:
            table[atk.target].append(atk.attacker)
        return {a: tuple(sorted(ys)) for a, ys in table.items()}

    @cached_property
    def targets_of(self) -> dict[str, tuple[str, ...]]:
        """Sorted targets per argument (total over V)."""
        table: dict[str, list[str]] = {a: [] for a in self.arguments}
        for atk in self.attacks:
            table[atk.attacker].append(atk.target)
        return {a: tuple(sorted(ts)) for a, ts in table.items()}

    def without_attacks(self, removed: Iterable[Attack]) -> "ArgumentationFramework":
        """The framework with `removed` edges suspended; arguments unchanged."""
        gone = {Attack(*e) for e in removed}
        return ArgumentationFramework(
            arguments=self.arguments,
            attacks=tuple(a for a in self.attacks if a not in gone),
        )


def build_af(
    arguments: Iterable[str] = (),
    attacks: Iterable[tuple[str, str]] = (),
) -> ArgumentationFramework:
    """Build a validated framework from argument names and attack pairs.

    Duplicates are dropped, attack endpoints are auto-added to the argument
    set, and both collections come out sorted, so any two permutations of
    the same input produce structurally equal frameworks.
    """
    names = {validate_name(a) for a in arguments}
    edges = set()
    for attacker, target in attacks:
        edge = Attack(validate_name(attacker), validate_name(target))
        names.add(edge.attacker)
        names.add(edge.target)
        edges.add(edge)
    return ArgumentationFramework(
        arguments=tuple(sorted(names)),
        attacks=tuple(sorted(edges)),
    )


@dataclass(frozen=True)
class ProvenanceSubgraph:
    """Explanation subgraph rooted at one argument.

    Holds the arguments and attack edges (with their types) reachable from
    the root by the extracting traversal; the root is always a node.
    """

    root: str
    nodes: frozenset[str]
    edges: dict[Attack, EdgeType]

    @property
    def edge_set(self) -> frozenset[Attack]:
        return frozenset(self.edges)

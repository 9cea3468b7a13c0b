"""afprov: grounded/stable argumentation solving with game provenance,
critical attack sets, provenance overlays, and layered layouts."""

from .core import (
    INFINITY,
    ArgumentationFramework,
    Attack,
    EdgeType,
    Label,
    ProvenanceSubgraph,
    build_af,
)
from .critical import (
    CriticalAttackSet,
    Minimality,
    candidate_edges,
    emit_asp_program,
    find_critical_sets,
    validate_delta,
)
from .grounded import (
    GroundedSolution,
    actual_provenance,
    classify_edges,
    primary_provenance,
    solve_grounded,
)
from .layout import LayeredLayout, layout_grounded, layout_overlay
from .overlay import EffectiveLabel, OverlayNodeLabel, ProvenanceOverlay, build_overlay
from .semantics import (
    characteristic,
    enumerate_bruteforce,
    grounded_by_least_fixpoint,
    is_admissible,
    is_complete,
    is_conflict_free,
    is_stable,
)
from .stable import StableSolution, enumerate_stable

__version__ = "0.1.0"

__all__ = [
    "INFINITY",
    "ArgumentationFramework",
    "Attack",
    "CriticalAttackSet",
    "EdgeType",
    "EffectiveLabel",
    "GroundedSolution",
    "Label",
    "LayeredLayout",
    "Minimality",
    "OverlayNodeLabel",
    "ProvenanceOverlay",
    "ProvenanceSubgraph",
    "StableSolution",
    "actual_provenance",
    "build_af",
    "build_overlay",
    "candidate_edges",
    "characteristic",
    "classify_edges",
    "emit_asp_program",
    "enumerate_bruteforce",
    "enumerate_stable",
    "find_critical_sets",
    "grounded_by_least_fixpoint",
    "is_admissible",
    "is_complete",
    "is_conflict_free",
    "is_stable",
    "layout_grounded",
    "layout_overlay",
    "primary_provenance",
    "solve_grounded",
    "validate_delta",
]

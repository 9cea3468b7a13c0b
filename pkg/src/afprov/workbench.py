"""Shared assembly helpers used by the CLI and the HTTP service."""

from __future__ import annotations

from .core import ArgumentationFramework
from .critical import (
    DEFAULT_CANDIDATE_BUDGET,
    CriticalAttackSet,
    Minimality,
    find_critical_sets,
)
from .errors import ParseError, UnknownArgument
from .formats import (
    CriticalSetFamily,
    DocumentLayout,
    SolutionDocument,
    parse_af_json,
    parse_apx,
    parse_tgf,
)
from .grounded import solve_grounded
from .layout import layout_grounded, layout_overlay
from .overlay import ProvenanceOverlay, build_overlay
from .stable import StableSolution, enumerate_stable

PARSERS = {
    "apx": parse_apx,
    "tgf": parse_tgf,
    "json": parse_af_json,
}


def sniff_format(filename: str) -> str:
    """Pick a parser from the filename extension; apx wins when unknown."""
    lowered = filename.lower()
    for ext in PARSERS:
        if lowered.endswith("." + ext):
            return ext
    return "apx"


def load_af(text: str, fmt: str) -> ArgumentationFramework:
    if fmt not in PARSERS:
        raise ParseError(f"unknown input format {fmt!r}")
    return PARSERS[fmt](text)


def pick_stable(solutions: list[StableSolution], index: int) -> StableSolution:
    for sol in solutions:
        if sol.index == index:
            return sol
    raise UnknownArgument(
        f"no stable solution with index {index} (found {len(solutions)})"
    )


def pick_delta(sets: list[CriticalAttackSet], index: int) -> CriticalAttackSet:
    for cs in sets:
        if cs.delta_index == index:
            return cs
    raise UnknownArgument(
        f"no critical attack set with index {index} (found {len(sets)})"
    )


def build_document(
    af: ArgumentationFramework,
    *,
    with_stable: bool = False,
    with_critical: bool = False,
    with_overlays: bool = False,
    with_layouts: bool = False,
    minimality: Minimality = Minimality.CARDINALITY,
    budget: int = DEFAULT_CANDIDATE_BUDGET,
) -> SolutionDocument:
    """Compute the requested document sections (later sections imply earlier)."""
    with_critical = with_critical or with_overlays
    with_stable = with_stable or with_critical

    grounded = solve_grounded(af)
    stable = enumerate_stable(af) if with_stable else None
    families: list[CriticalSetFamily] = []
    overlays: list[ProvenanceOverlay] = []
    layouts: list[DocumentLayout] = []

    if with_layouts:
        layouts.append(DocumentLayout(subject="grounded", layout=layout_grounded(grounded)))

    if with_critical:
        for sol in stable:
            sets = find_critical_sets(af, grounded, sol, minimality, budget=budget)
            families.append(
                CriticalSetFamily(
                    stable_index=sol.index, minimality=minimality, sets=tuple(sets)
                )
            )
            if with_overlays:
                for cs in sets:
                    ov = build_overlay(af, grounded, sol, cs)
                    overlays.append(ov)
                    if with_layouts:
                        layouts.append(
                            DocumentLayout(
                                subject="overlay",
                                layout=layout_overlay(ov),
                                stable_index=sol.index,
                                delta_index=cs.delta_index,
                            )
                        )

    return SolutionDocument(
        af=af,
        grounded=grounded,
        stable_solutions=None if stable is None else tuple(stable),
        critical_sets=tuple(families) if with_critical else None,
        overlays=tuple(overlays) if with_overlays else None,
        layouts=tuple(layouts) if with_layouts else None,
    )

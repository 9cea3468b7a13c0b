"""Input parsing (apx, TGF, JSON) and byte-deterministic exports (JSON, DOT).

Every export is a pure function of its input with fixed ordering, fixed
separators, and LF line endings, so identical content always serializes to
identical bytes. Infinite lengths appear as the string "inf" in JSON and as
the infinity sign in DOT labels.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .core import (
    INFINITY,
    ArgumentationFramework,
    Attack,
    EdgeType,
    Label,
    Length,
    build_af,
)
from .critical import CriticalAttackSet, Minimality
from .errors import LayoutMismatch, ParseError
from .grounded import GroundedSolution
from .layout import UNDEC_BAND, LayeredLayout
from .overlay import EffectiveLabel, OverlayNodeLabel, ProvenanceOverlay
from .stable import StableSolution

SCHEMA = "af-prov/1"

# Fixed palette; pale variants are the base hue/value at 40% saturation.
COLOR_IN = "#4A90D9"
COLOR_OUT = "#F5A623"
COLOR_UNDEC = "#F8E71C"
COLOR_IN_PALE = "#A0BCD9"
COLOR_OUT_PALE = "#F5D5A1"
COLOR_CRITICAL = "#D0021B"
COLOR_BLUNDER = "#9B9B9B"
COLOR_FAILED = "#000000"

INF_LABEL = "∞"  # ∞
PRIME = "′"  # ′


# --------------------------------------------------------------------------
# apx / TGF parsing
# --------------------------------------------------------------------------

_APX_STATEMENT = re.compile(
    r"(arg|att)\s*\(\s*([^\s(),.]+)\s*(?:,\s*([^\s(),.]+)\s*)?\)\s*\."
)


def parse_apx(text: str) -> ArgumentationFramework:
    """Parse ASPARTIX-style input: `arg(a).` and `att(a,b).` statements.

    Whitespace is free-form, `%` starts a comment, duplicates are silently
    dropped; anything else is rejected with its line/column.
    """
    arguments: list[str] = []
    attacks: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("%", 1)[0]
        pos = 0
        while pos < len(line):
            if line[pos].isspace():
                pos += 1
                continue
            m = _APX_STATEMENT.match(line, pos)
            if not m:
                raise ParseError("expected arg(..) or att(..,..) statement",
                                 lineno, pos + 1)
            kind, first, second = m.groups()
            if kind == "arg" and second is None:
                arguments.append(first)
            elif kind == "att" and second is not None:
                attacks.append((first, second))
            else:
                raise ParseError(
                    f"{kind} takes {1 if kind == 'arg' else 2} argument(s)",
                    lineno, pos + 1,
                )
            pos = m.end()
    return build_af(arguments, attacks)


def parse_tgf(text: str) -> ArgumentationFramework:
    """Parse Trivial Graph Format: node ids, a `#` line, then edge pairs."""
    arguments: list[str] = []
    attacks: list[tuple[str, str]] = []
    seen_separator = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line == "#":
            if seen_separator:
                raise ParseError("duplicate '#' separator", lineno, 1)
            seen_separator = True
            continue
        tokens = line.split()
        if not seen_separator:
            if len(tokens) != 1:
                raise ParseError("expected one node id per line", lineno, 1)
            arguments.append(tokens[0])
        else:
            if len(tokens) != 2:
                raise ParseError("expected 'source target' edge line", lineno, 1)
            attacks.append((tokens[0], tokens[1]))
    if not seen_separator:
        raise ParseError("missing '#' separator", 1, 1)
    return build_af(arguments, attacks)


# --------------------------------------------------------------------------
# Solution document
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class CriticalSetFamily:
    """All minimal critical sets of one stable solution under one mode."""

    stable_index: int
    minimality: Minimality
    sets: tuple[CriticalAttackSet, ...]


@dataclass(frozen=True)
class DocumentLayout:
    """A layout entry tagged with the subject it was computed for."""

    subject: str  # "grounded" | "overlay"
    layout: LayeredLayout
    stable_index: int | None = None
    delta_index: int | None = None


@dataclass(frozen=True)
class SolutionDocument:
    """Aggregate of everything computed for one framework (schema af-prov/1).

    Optional sections are None when they were not computed; an empty tuple
    means the computation ran and found nothing (kept distinct so exports can
    say "no stable solutions" explicitly).
    """

    af: ArgumentationFramework
    grounded: GroundedSolution
    stable_solutions: tuple[StableSolution, ...] | None = None
    critical_sets: tuple[CriticalSetFamily, ...] | None = None
    overlays: tuple[ProvenanceOverlay, ...] | None = None
    layouts: tuple[DocumentLayout, ...] | None = None


# ---- JSON export ----------------------------------------------------------


def _length_out(value: Length):
    return "inf" if value == INFINITY else int(value)


def _length_in(value) -> Length:
    return INFINITY if value == "inf" else int(value)


def _edges_out(edge_types: dict[Attack, EdgeType]) -> list[list[str]]:
    return [
        [e.attacker, e.target, t.value] for e, t in sorted(edge_types.items())
    ]


def _edges_in(rows) -> dict[Attack, EdgeType]:
    return {Attack(a, t): EdgeType(kind) for a, t, kind in rows}


def grounded_to_jsonable(sol: GroundedSolution) -> dict:
    return {
        "labels": {a: lab.value for a, lab in sol.labeling.items()},
        "lengths": {a: _length_out(n) for a, n in sol.lengths.items()},
        "edge_types": _edges_out(sol.edge_types),
    }


def stable_to_jsonable(sol: StableSolution) -> dict:
    return {
        "index": sol.index,
        "extension": list(sol.extension),
        "labels": {a: lab.value for a, lab in sol.labeling.items()},
    }


def overlay_to_jsonable(ov: ProvenanceOverlay) -> dict:
    return {
        "stable_index": ov.stable_index,
        "delta_index": ov.delta.delta_index,
        "minimality": ov.delta.minimality.value,
        "delta_edges": [[e.attacker, e.target] for e in ov.delta.edges],
        "nodes": {
            a: {
                "base": lab.base.value,
                "effective": lab.effective.value,
                "base_length": _length_out(lab.base_length),
                "effective_length": _length_out(lab.effective_length),
                "length_changed": lab.length_changed,
            }
            for a, lab in ov.node_labels.items()
        },
        "edge_types": _edges_out(ov.edge_types),
    }


def layout_to_jsonable(entry: DocumentLayout) -> dict:
    lay = entry.layout
    out = {
        "subject": entry.subject,
        "layers": {str(k): list(v) for k, v in lay.layers.items()},
        "undec_band": list(lay.undec_band),
        "positions": {
            a: {"layer": "undec" if layer is UNDEC_BAND else layer, "slot": slot}
            for a, (layer, slot) in sorted(lay.positions.items())
        },
    }
    if entry.stable_index is not None:
        out["stable_index"] = entry.stable_index
    if entry.delta_index is not None:
        out["delta_index"] = entry.delta_index
    return out


def document_to_jsonable(doc: SolutionDocument) -> dict:
    out = {
        "schema": SCHEMA,
        "af": {
            "arguments": list(doc.af.arguments),
            "attacks": [[e.attacker, e.target] for e in doc.af.attacks],
        },
        "grounded": grounded_to_jsonable(doc.grounded),
    }
    if doc.stable_solutions is not None:
        out["stable"] = [stable_to_jsonable(s) for s in doc.stable_solutions]
    if doc.critical_sets is not None:
        out["critical"] = [
            {
                "stable_index": fam.stable_index,
                "minimality": fam.minimality.value,
                "sets": [
                    {
                        "delta_index": cs.delta_index,
                        "edges": [[e.attacker, e.target] for e in cs.edges],
                    }
                    for cs in fam.sets
                ],
            }
            for fam in doc.critical_sets
        ]
    if doc.overlays is not None:
        out["overlays"] = [overlay_to_jsonable(ov) for ov in doc.overlays]
    if doc.layouts is not None:
        out["layouts"] = [layout_to_jsonable(entry) for entry in doc.layouts]
    return out


def canonical_json(payload) -> str:
    """Canonical byte form: sorted keys, compact separators, trailing LF."""
    return (
        json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
        + "\n"
    )


def export_json(doc: SolutionDocument) -> str:
    return canonical_json(document_to_jsonable(doc))


# ---- JSON import (round-trip) ---------------------------------------------


def _grounded_from(af: ArgumentationFramework, payload: dict) -> GroundedSolution:
    return GroundedSolution(
        af=af,
        labeling={a: Label(v) for a, v in payload["labels"].items()},
        lengths={a: _length_in(v) for a, v in payload["lengths"].items()},
        edge_types=_edges_in(payload["edge_types"]),
    )


def _stable_from(payload: dict) -> StableSolution:
    return StableSolution(
        index=payload["index"],
        extension=tuple(payload["extension"]),
        labeling={a: Label(v) for a, v in payload["labels"].items()},
    )


def _overlay_from(
    af: ArgumentationFramework, grounded: GroundedSolution, payload: dict
) -> ProvenanceOverlay:
    delta = CriticalAttackSet(
        stable_index=payload["stable_index"],
        delta_index=payload["delta_index"],
        edges=tuple(Attack(a, t) for a, t in payload["delta_edges"]),
        minimality=Minimality(payload["minimality"]),
    )
    node_labels = {
        a: OverlayNodeLabel(
            base=Label(n["base"]),
            effective=EffectiveLabel(n["effective"]),
            base_length=_length_in(n["base_length"]),
            effective_length=_length_in(n["effective_length"]),
            length_changed=n["length_changed"],
        )
        for a, n in payload["nodes"].items()
    }
    return ProvenanceOverlay(
        af=af,
        grounded=grounded,
        stable_index=payload["stable_index"],
        delta=delta,
        node_labels=node_labels,
        edge_types=_edges_in(payload["edge_types"]),
    )


def _layout_from(payload: dict) -> DocumentLayout:
    positions = {
        a: (UNDEC_BAND if p["layer"] == "undec" else p["layer"], p["slot"])
        for a, p in payload["positions"].items()
    }
    return DocumentLayout(
        subject=payload["subject"],
        stable_index=payload.get("stable_index"),
        delta_index=payload.get("delta_index"),
        layout=LayeredLayout(
            layers={int(k): tuple(v) for k, v in payload["layers"].items()},
            undec_band=tuple(payload["undec_band"]),
            positions=positions,
        ),
    )


def parse_json(text: str) -> SolutionDocument:
    """Load a document exported by export_json (schema af-prov/1)."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from exc
    if not isinstance(payload, dict) or payload.get("schema") != SCHEMA:
        raise ParseError(f"expected a document with schema {SCHEMA!r}")
    af = build_af(
        payload["af"]["arguments"],
        [tuple(e) for e in payload["af"]["attacks"]],
    )
    grounded = _grounded_from(af, payload["grounded"])

    def section(key, convert):
        if key not in payload:
            return None
        return tuple(convert(entry) for entry in payload[key])

    return SolutionDocument(
        af=af,
        grounded=grounded,
        stable_solutions=section("stable", _stable_from),
        critical_sets=section(
            "critical",
            lambda fam: CriticalSetFamily(
                stable_index=fam["stable_index"],
                minimality=Minimality(fam["minimality"]),
                sets=tuple(
                    CriticalAttackSet(
                        stable_index=fam["stable_index"],
                        delta_index=cs["delta_index"],
                        edges=tuple(Attack(a, t) for a, t in cs["edges"]),
                        minimality=Minimality(fam["minimality"]),
                    )
                    for cs in fam["sets"]
                ),
            ),
        ),
        overlays=section("overlays", lambda ov: _overlay_from(af, grounded, ov)),
        layouts=section("layouts", _layout_from),
    )


def parse_af_json(text: str) -> ArgumentationFramework:
    """Accept either a full document or a bare {"arguments","attacks"} object."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from exc
    if isinstance(payload, dict) and "af" in payload:
        payload = payload["af"]
    if not isinstance(payload, dict) or "arguments" not in payload:
        raise ParseError("expected an object with 'arguments' and 'attacks'")
    return build_af(
        payload.get("arguments", ()),
        [tuple(e) for e in payload.get("attacks", ())],
    )


# --------------------------------------------------------------------------
# DOT export
# --------------------------------------------------------------------------

_EDGE_STYLE = {
    EdgeType.SUCCESSFUL_PRIMARY: (COLOR_IN, "solid", None),
    EdgeType.SUCCESSFUL_SECONDARY: (COLOR_IN, "dashed", None),
    EdgeType.FAILED: (COLOR_FAILED, "solid", "0.8"),
    EdgeType.UNDECIDED: (COLOR_UNDEC, "solid", None),
    EdgeType.BLUNDER_B1: (COLOR_BLUNDER, "dotted", None),
    EdgeType.BLUNDER_B2: (COLOR_BLUNDER, "dotted", None),
    EdgeType.BLUNDER_B3: (COLOR_BLUNDER, "dotted", None),
    EdgeType.CRITICAL: (COLOR_CRITICAL, "dashed", None),
}

_NODE_FILL = {
    Label.IN: COLOR_IN,
    Label.OUT: COLOR_OUT,
    Label.UNDEC: COLOR_UNDEC,
    EffectiveLabel.IN: COLOR_IN,
    EffectiveLabel.OUT: COLOR_OUT,
    EffectiveLabel.IN_PRIMED: COLOR_IN_PALE,
    EffectiveLabel.OUT_PRIMED: COLOR_OUT_PALE,
}


def _check_layout(subject, layout: LayeredLayout) -> None:
    af = subject.af
    if set(layout.positions) != set(af.arguments):
        raise LayoutMismatch("layout covers a different argument set")
    if isinstance(subject, ProvenanceOverlay):
        lengths = subject.effective_lengths
    else:
        lengths = subject.lengths
    for a, (layer, _slot) in layout.positions.items():
        expected = UNDEC_BAND if lengths[a] == INFINITY else int(lengths[a])
        if layer != expected:
            raise LayoutMismatch(f"layout layer for {a} does not match its length")


def _quote(text: str) -> str:
    """DOT double-quoted string; names may legally contain quotes/backslashes."""
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _node_line(name: str, label: str, fill: str, dashed: bool) -> str:
    style = ', style="filled,dashed"' if dashed else ""
    return f'    {_quote(name)} [label={_quote(label)}, fillcolor="{fill}"{style}];'


def export_dot(
    subject: GroundedSolution | ProvenanceOverlay, layout: LayeredLayout
) -> str:
    """Render the solution or overlay as a layered Graphviz digraph."""
    _check_layout(subject, layout)
    overlay = isinstance(subject, ProvenanceOverlay)

    lines = [
        "digraph afprov {",
        '  rankdir="BT";',
        "  node [shape=ellipse, style=filled, fontname=\"Helvetica\"];",
    ]
    for level in sorted(layout.layers):
        lines.append(f"  {{ rank=same; /* layer {level} */")
        for name in layout.layers[level]:
            if overlay:
                info = subject.node_labels[name]
                n = int(info.effective_length)
                text = f"{name}.{n}{PRIME}" if info.length_changed else f"{name}.{n}"
                fill = _NODE_FILL[info.effective]
                dashed = info.effective in (
                    EffectiveLabel.IN_PRIMED,
                    EffectiveLabel.OUT_PRIMED,
                )
            else:
                text = f"{name}.{int(subject.lengths[name])}"
                fill = _NODE_FILL[subject.labeling[name]]
                dashed = False
            lines.append(_node_line(name, text, fill, dashed))
        lines.append("  }")
    if layout.undec_band:
        lines.append("  { rank=same; /* undec band */")
        for name in layout.undec_band:
            lines.append(
                _node_line(name, f"{name}.{INF_LABEL}", _NODE_FILL[Label.UNDEC], False)
            )
        lines.append("  }")

    for edge, kind in sorted(subject.edge_types.items()):
        color, style, penwidth = _EDGE_STYLE[kind]
        attrs = f'color="{color}", style={style}'
        if penwidth:
            attrs += f', penwidth={penwidth}'
        lines.append(f'  {_quote(edge.attacker)} -> {_quote(edge.target)} [{attrs}];')
    lines.append("}")
    return "\n".join(lines) + "\n"

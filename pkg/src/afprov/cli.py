"""Command-line front door: solve, critical, overlay, layout, export, oracle,
serve. stdout carries exactly one machine-parseable payload (JSON or DOT);
all diagnostics go to stderr.

Exit codes: 0 success, 1 usage error, 2 input error, 3 no critical set found
or search budget exceeded, 4 engine/oracle disagreement (oracle subcommand).
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .critical import (
    DEFAULT_CANDIDATE_BUDGET,
    Minimality,
    candidate_edges,
    emit_asp_program,
    find_critical_sets,
)
from .errors import (
    AfError,
    BudgetExceeded,
    InvariantViolation,
    NoCriticalSetFound,
)
from .formats import (
    CriticalSetFamily,
    DocumentLayout,
    SolutionDocument,
    canonical_json,
    export_dot,
    export_json,
)
from .layout import layout_grounded, layout_overlay
from .overlay import build_overlay
from .semantics import (
    ORACLE_MAX_CANDIDATE_EDGES,
    critical_sets_bruteforce,
    enumerate_bruteforce,
    grounded_by_least_fixpoint,
)
from .workbench import (
    build_document,
    load_af,
    pick_delta,
    pick_stable,
    sniff_format,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_SEARCH = 3
EXIT_DISAGREEMENT = 4


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad usage; remap to this tool's convention (1)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _env_budget() -> int:
    raw = os.environ.get("AF_PROV_BUDGET")
    if raw is None:
        return DEFAULT_CANDIDATE_BUDGET
    try:
        return int(raw)
    except ValueError:
        print(f"warning: ignoring non-integer AF_PROV_BUDGET={raw!r}", file=sys.stderr)
        return DEFAULT_CANDIDATE_BUDGET


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="af-prov",
        description="Argumentation workbench: grounded/stable solving, "
        "game provenance, critical attack sets, overlays, layered layouts.",
        epilog="exit codes: 0 success, 1 usage error, 2 input error, "
        "3 no critical set / budget exceeded, 4 oracle disagreement. "
        "AF_PROV_BUDGET overrides the critical-set candidate budget.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("-i", "--input", required=True,
                       help="input file (.apx/.tgf/.json), '-' for stdin")
        p.add_argument("--format", choices=["apx", "tgf", "json"],
                       help="override the extension-based format sniffing")
        p.add_argument("-o", "--output", help="write payload here instead of stdout")

    p = sub.add_parser("solve", help="compute grounded or stable solutions")
    add_input(p)
    p.add_argument("--semantics", choices=["grounded", "stable"], default="grounded")
    p.add_argument("--layout", action="store_true", help="include the layered layout")

    p = sub.add_parser("critical", help="minimal critical attack sets of one stable solution")
    add_input(p)
    p.add_argument("--stable", type=int, required=True, help="1-based stable solution index")
    p.add_argument("--minimality", choices=["cardinality", "subset"], default="cardinality")
    p.add_argument("--widen", action="store_true",
                   help="widen the candidate pool (escape hatch after a failed search)")
    p.add_argument("--budget", type=int, default=None,
                   help=f"candidate budget (default {DEFAULT_CANDIDATE_BUDGET}, "
                        "env AF_PROV_BUDGET)")
    p.add_argument("--asp", action="store_true",
                   help="emit the guess-and-check ASP program instead of JSON")

    p = sub.add_parser("overlay", help="provenance overlay for one (stable, delta) pair")
    add_input(p)
    p.add_argument("--stable", type=int, required=True)
    p.add_argument("--delta", type=int, default=1, help="1-based delta index (default 1)")
    p.add_argument("--minimality", choices=["cardinality", "subset"], default="cardinality")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--layout", action="store_true")

    p = sub.add_parser("layout", help="layered layout of the grounded solution or an overlay")
    add_input(p)
    p.add_argument("--stable", type=int, default=None)
    p.add_argument("--delta", type=int, default=1)
    p.add_argument("--minimality", choices=["cardinality", "subset"], default="cardinality")
    p.add_argument("--budget", type=int, default=None)

    p = sub.add_parser("export", help="export a DOT rendering or the full JSON document")
    add_input(p)
    p.add_argument("--as", dest="as_format", choices=["dot", "json"], default="dot")
    p.add_argument("--subject", choices=["grounded", "overlay"], default="grounded")
    p.add_argument("--stable", type=int, default=None)
    p.add_argument("--delta", type=int, default=1)
    p.add_argument("--minimality", choices=["cardinality", "subset"], default="cardinality")
    p.add_argument("--budget", type=int, default=None)

    p = sub.add_parser("oracle", help="cross-check every engine against brute force")
    add_input(p)
    p.add_argument("--budget", type=int, default=None)

    p = sub.add_parser("serve", help="run the HTTP service (and explorer UI if built)")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8080)
    p.add_argument("--ui-dir", default=None,
                   help="static assets directory (default: ./frontend/dist if present)")
    p.add_argument("--session-ttl", type=float, default=3600.0)

    return parser


def _read_input(args) -> str:
    if args.input == "-":
        return sys.stdin.read()
    return Path(args.input).read_text(encoding="utf-8")


def _load(args):
    fmt = args.format or sniff_format(args.input if args.input != "-" else "stdin.apx")
    return load_af(_read_input(args), fmt)


def _emit(args, payload: str) -> None:
    if args.output:
        Path(args.output).write_text(payload, encoding="utf-8")
    else:
        sys.stdout.write(payload)


def _budget(args) -> int:
    return args.budget if args.budget is not None else _env_budget()


def _cmd_solve(args) -> int:
    af = _load(args)
    doc = build_document(
        af, with_stable=args.semantics == "stable", with_layouts=args.layout
    )
    _emit(args, export_json(doc))
    return EXIT_OK


def _cmd_critical(args) -> int:
    af = _load(args)
    doc = build_document(af, with_stable=True)
    sol = pick_stable(list(doc.stable_solutions), args.stable)
    if args.asp:
        _emit(args, emit_asp_program(af, sol))
        return EXIT_OK
    sets = find_critical_sets(
        af, doc.grounded, sol, Minimality(args.minimality),
        budget=_budget(args), widen=args.widen,
    )
    out = SolutionDocument(
        af=af,
        grounded=doc.grounded,
        stable_solutions=doc.stable_solutions,
        critical_sets=(
            CriticalSetFamily(
                stable_index=sol.index,
                minimality=Minimality(args.minimality),
                sets=tuple(sets),
            ),
        ),
    )
    _emit(args, export_json(out))
    return EXIT_OK


def _overlay_parts(args, af):
    doc = build_document(af, with_stable=True)
    sol = pick_stable(list(doc.stable_solutions), args.stable)
    sets = find_critical_sets(
        af, doc.grounded, sol, Minimality(args.minimality), budget=_budget(args)
    )
    delta = pick_delta(sets, args.delta)
    overlay = build_overlay(af, doc.grounded, sol, delta)
    return doc, sol, sets, delta, overlay


def _cmd_overlay(args) -> int:
    af = _load(args)
    doc, sol, sets, delta, overlay = _overlay_parts(args, af)
    layouts = None
    if args.layout:
        layouts = (
            DocumentLayout(
                subject="overlay",
                layout=layout_overlay(overlay),
                stable_index=sol.index,
                delta_index=delta.delta_index,
            ),
        )
    out = SolutionDocument(
        af=af,
        grounded=doc.grounded,
        stable_solutions=doc.stable_solutions,
        critical_sets=(
            CriticalSetFamily(
                stable_index=sol.index,
                minimality=Minimality(args.minimality),
                sets=tuple(sets),
            ),
        ),
        overlays=(overlay,),
        layouts=layouts,
    )
    _emit(args, export_json(out))
    return EXIT_OK


def _cmd_layout(args) -> int:
    af = _load(args)
    if args.stable is None:
        doc = build_document(af)
        out = SolutionDocument(
            af=af,
            grounded=doc.grounded,
            layouts=(
                DocumentLayout(subject="grounded", layout=layout_grounded(doc.grounded)),
            ),
        )
    else:
        doc, sol, _sets, delta, overlay = _overlay_parts(args, af)
        out = SolutionDocument(
            af=af,
            grounded=doc.grounded,
            layouts=(
                DocumentLayout(
                    subject="overlay",
                    layout=layout_overlay(overlay),
                    stable_index=sol.index,
                    delta_index=delta.delta_index,
                ),
            ),
        )
    _emit(args, export_json(out))
    return EXIT_OK


def _cmd_export(args) -> int:
    af = _load(args)
    if args.as_format == "json":
        doc = build_document(
            af, with_overlays=True, with_layouts=True,
            minimality=Minimality(args.minimality), budget=_budget(args),
        )
        _emit(args, export_json(doc))
        return EXIT_OK
    if args.subject == "grounded":
        doc = build_document(af)
        _emit(args, export_dot(doc.grounded, layout_grounded(doc.grounded)))
        return EXIT_OK
    if args.stable is None:
        print("af-prov: --subject overlay requires --stable", file=sys.stderr)
        return EXIT_USAGE
    _doc, _sol, _sets, _delta, overlay = _overlay_parts(args, af)
    _emit(args, export_dot(overlay, layout_overlay(overlay)))
    return EXIT_OK


def _cmd_oracle(args) -> int:
    af = _load(args)
    doc = build_document(af, with_stable=True)
    grounded = doc.grounded
    checks = []

    lfp = grounded_by_least_fixpoint(af)
    complete = enumerate_bruteforce(af, "complete")
    ok = grounded.in_set == lfp and (not complete or complete[0] == lfp) and all(
        set(lfp) <= set(c) for c in complete
    )
    checks.append({"name": "grounded_vs_least_fixpoint_and_complete", "ok": ok})

    engine_stable = [s.extension for s in doc.stable_solutions]
    brute_stable = enumerate_bruteforce(af, "stable")
    checks.append({
        "name": "stable_vs_bruteforce",
        "ok": engine_stable == brute_stable,
    })

    skipped = 0
    ok_all = True
    for sol in doc.stable_solutions:
        cands = candidate_edges(af, grounded)
        if len(cands) > min(_budget(args), ORACLE_MAX_CANDIDATE_EDGES):
            skipped += 1
            continue
        for mode in Minimality:
            engine = [
                cs.edges
                for cs in find_critical_sets(af, grounded, sol, mode, budget=_budget(args))
            ]
            brute = critical_sets_bruteforce(af, sol.extension, cands, mode.value)
            if engine != brute:
                ok_all = False
    checks.append({
        "name": "critical_sets_vs_bruteforce",
        "ok": ok_all,
        "skipped_solutions": skipped,
    })

    agreement = all(c["ok"] for c in checks)
    _emit(args, canonical_json({"agreement": agreement, "checks": checks}))
    return EXIT_OK if agreement else EXIT_DISAGREEMENT


def _cmd_serve(args) -> int:
    import uvicorn

    from .server import create_app

    ui_dir = args.ui_dir
    if ui_dir is None:
        default = Path("frontend") / "dist"
        ui_dir = str(default) if default.is_dir() else None
    app = create_app(ui_dir=ui_dir, session_ttl=args.session_ttl)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


_COMMANDS = {
    "solve": _cmd_solve,
    "critical": _cmd_critical,
    "overlay": _cmd_overlay,
    "layout": _cmd_layout,
    "export": _cmd_export,
    "oracle": _cmd_oracle,
    "serve": _cmd_serve,
}


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (NoCriticalSetFound, BudgetExceeded) as exc:
        print(f"af-prov: {exc}", file=sys.stderr)
        return EXIT_SEARCH
    except InvariantViolation:
        raise  # solver bug: keep the traceback
    except (AfError, OSError) as exc:
        print(f"af-prov: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

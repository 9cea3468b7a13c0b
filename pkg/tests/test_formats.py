"""Parsers, canonical JSON, DOT export, golden-file byte stability."""

from __future__ import annotations

from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from afprov import Attack, build_af, solve_grounded
from afprov.errors import LayoutMismatch, ParseError
from afprov.formats import (
    export_dot,
    export_json,
    parse_af_json,
    parse_apx,
    parse_json,
    parse_tgf,
)
from afprov.layout import layout_grounded, layout_overlay
from afprov.workbench import build_document

from helpers import running_example, random_suite

GOLDEN = Path(__file__).parent / "golden"
DATA = Path(__file__).parent / "data"


# ---- apx -------------------------------------------------------------------


def test_parse_apx_inline():
    af = parse_apx("arg(a). arg(b). att(a,b).")
    assert af.arguments == ("a", "b")
    assert af.attacks == (Attack("a", "b"),)


def test_parse_apx_running_example_file():
    assert parse_apx((DATA / "example.apx").read_text()) == running_example()


def test_parse_apx_selfloop_without_arg_decl():
    af = parse_apx("att(x,x).")
    assert af.arguments == ("x",)
    assert af.attacks == (Attack("x", "x"),)


def test_parse_apx_comments_and_whitespace():
    text = "% header\n  arg( a ).   % trailing\n\natt( a , a ).\n"
    af = parse_apx(text)
    assert af.attacks == (Attack("a", "a"),)


def test_parse_apx_rejects_unknown_directive():
    with pytest.raises(ParseError) as err:
        parse_apx("arg(a).\nfoo(a).")
    assert err.value.line == 2


def test_parse_apx_rejects_arity_mismatch():
    with pytest.raises(ParseError):
        parse_apx("arg(a,b).")
    with pytest.raises(ParseError):
        parse_apx("att(a).")


def test_parse_apx_duplicates_silently_dropped():
    af = parse_apx("arg(a). arg(a). att(a,a). att(a,a).")
    assert len(af.arguments) == 1 and len(af.attacks) == 1


# ---- TGF -------------------------------------------------------------------


def test_parse_tgf_minimal():
    af = parse_tgf("1\n2\n#\n1 2")
    assert af.arguments == ("1", "2")
    assert af.attacks == (Attack("1", "2"),)


def test_parse_tgf_empty_is_missing_separator():
    with pytest.raises(ParseError) as err:
        parse_tgf("")
    assert "separator" in str(err.value)


def test_parse_tgf_bad_edge_line():
    with pytest.raises(ParseError):
        parse_tgf("1\n#\n1 2 3")


def test_apx_tgf_cross_parse_equal():
    apx = "arg(A). arg(B). arg(C). arg(D). att(A,B). att(B,C). att(C,D). att(D,C)."
    tgf = "A\nB\nC\nD\n#\nA B\nB C\nC D\nD C\n"
    assert parse_apx(apx) == parse_tgf(tgf) == running_example()


_token = st.text(
    alphabet=st.characters(
        whitelist_categories=["Ll", "Lu", "Nd"], max_codepoint=0x2FF
    ),
    min_size=1,
    max_size=4,
)


@given(st.lists(_token, max_size=5), st.lists(st.tuples(_token, _token), max_size=8))
def test_apx_and_tgf_round_trip_any_af(names, attacks):
    af = build_af(names, attacks)
    apx = "\n".join(
        [f"arg({a})." for a in af.arguments]
        + [f"att({e.attacker},{e.target})." for e in af.attacks]
    )
    tgf = "\n".join(
        list(af.arguments) + ["#"] + [f"{e.attacker} {e.target}" for e in af.attacks]
    )
    assert parse_apx(apx) == af
    assert parse_tgf(tgf) == af


# ---- JSON ------------------------------------------------------------------


def test_export_contains_inf_lengths():
    doc = build_document(running_example())
    assert '"lengths":{"A":0,"B":1,"C":"inf","D":"inf"}' in export_json(doc)


def test_empty_af_document_is_minimal():
    doc = build_document(build_af([], []))
    text = export_json(doc)
    assert '"schema":"af-prov/1"' in text
    assert parse_json(text) == doc


def test_round_trip_identity_full_document():
    doc = build_document(running_example(), with_overlays=True, with_layouts=True)
    text = export_json(doc)
    again = parse_json(text)
    assert again == doc
    assert export_json(again) == text


def test_round_trip_identity_on_random_suite():
    for af in random_suite(25, seed=31337, max_args=7):
        doc = build_document(af, with_stable=True)
        assert parse_json(export_json(doc)) == doc


def test_parse_af_json_accepts_bare_and_document():
    af = running_example()
    bare = '{"arguments":["A","B","C","D"],"attacks":[["A","B"],["B","C"],["C","D"],["D","C"]]}'
    assert parse_af_json(bare) == af
    assert parse_af_json(export_json(build_document(af))) == af


def test_parse_json_rejects_wrong_schema():
    with pytest.raises(ParseError):
        parse_json('{"schema":"other/9"}')
    with pytest.raises(ParseError):
        parse_json("not json")


# ---- DOT -------------------------------------------------------------------


def test_dot_grounded_fragments():
    sol = solve_grounded(running_example())
    dot = export_dot(sol, layout_grounded(sol))
    assert '"A" [label="A.0", fillcolor="#4A90D9"];' in dot
    assert '"B" -> "C" [color="#9B9B9B", style=dotted];' in dot
    assert '"C" [label="C.∞", fillcolor="#F8E71C"];' in dot


def test_dot_overlay_fragments():
    doc = build_document(running_example(), with_overlays=True, with_layouts=True)
    ov = next(o for o in doc.overlays if o.stable_index == 2)
    dot = export_dot(ov, layout_overlay(ov))
    assert '"C" -> "D" [color="#D0021B", style=dashed];' in dot
    assert '"D" [label="D.0′", fillcolor="#A0BCD9", style="filled,dashed"];' in dot


def test_dot_empty_af():
    af = build_af([], [])
    sol = solve_grounded(af)
    dot = export_dot(sol, layout_grounded(sol))
    assert dot.startswith("digraph afprov {")
    assert dot.endswith("}\n")


def test_dot_layout_mismatch_rejected():
    sol = solve_grounded(running_example())
    other = layout_grounded(solve_grounded(build_af([], [("A", "B")])))
    with pytest.raises(LayoutMismatch):
        export_dot(sol, other)


def test_dot_escapes_quotes_and_backslashes_in_names():
    af = build_af([], [('he"said', "back\\slash")])
    sol = solve_grounded(af)
    dot = export_dot(sol, layout_grounded(sol))
    assert '"he\\"said"' in dot
    assert '"back\\\\slash"' in dot


# ---- golden files ----------------------------------------------------------


def test_golden_document_bytes():
    doc = build_document(running_example(), with_overlays=True, with_layouts=True)
    assert export_json(doc) == (GOLDEN / "example_doc.json").read_text(encoding="utf-8")


def test_golden_grounded_dot_bytes():
    sol = solve_grounded(running_example())
    expected = (GOLDEN / "example_grounded.dot").read_text(encoding="utf-8")
    assert export_dot(sol, layout_grounded(sol)) == expected


def test_golden_overlay_dot_bytes():
    doc = build_document(running_example(), with_overlays=True, with_layouts=True)
    ov = next(o for o in doc.overlays if o.stable_index == 2)
    expected = (GOLDEN / "example_overlay_s2_d1.dot").read_text(encoding="utf-8")
    assert export_dot(ov, layout_overlay(ov)) == expected


def test_byte_determinism_across_runs():
    for _ in range(3):
        doc = build_document(running_example(), with_overlays=True, with_layouts=True)
        assert export_json(doc) == (GOLDEN / "example_doc.json").read_text(encoding="utf-8")

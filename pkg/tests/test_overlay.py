"""Provenance overlays: primed labels, recomputed lengths, CRITICAL marks."""

from __future__ import annotations

import pytest

from afprov import (
    Attack,
    EdgeType,
    EffectiveLabel,
    Label,
    Minimality,
    build_af,
    build_overlay,
    enumerate_stable,
    find_critical_sets,
    solve_grounded,
)
from afprov.critical import CriticalAttackSet
from afprov.errors import InvalidDelta

from helpers import running_example, random_suite


def _overlay_for(af, extension, delta_index=1):
    grounded = solve_grounded(af)
    sol = next(
        s for s in enumerate_stable(af) if s.extension == tuple(sorted(extension))
    )
    sets = find_critical_sets(af, grounded, sol, Minimality.CARDINALITY)
    delta = next(cs for cs in sets if cs.delta_index == delta_index)
    return build_overlay(af, grounded, sol, delta)


def test_example_overlay_for_ad():
    ov = _overlay_for(running_example(), ("A", "D"))
    nodes = ov.node_labels
    assert nodes["D"].effective is EffectiveLabel.IN_PRIMED
    assert nodes["D"].effective_length == 0
    assert nodes["C"].effective is EffectiveLabel.OUT_PRIMED
    assert nodes["C"].effective_length == 1
    assert nodes["A"].effective is EffectiveLabel.IN
    assert not nodes["A"].length_changed
    assert nodes["B"].effective is EffectiveLabel.OUT
    assert not nodes["B"].length_changed
    assert ov.edge_types[Attack("C", "D")] is EdgeType.CRITICAL
    assert ov.edge_types[Attack("D", "C")] is EdgeType.SUCCESSFUL_PRIMARY


def test_example_overlay_for_ac():
    ov = _overlay_for(running_example(), ("A", "C"))
    nodes = ov.node_labels
    assert nodes["C"].effective is EffectiveLabel.IN_PRIMED
    assert nodes["C"].effective_length == 2
    assert nodes["D"].effective is EffectiveLabel.OUT_PRIMED
    assert nodes["D"].effective_length == 3
    assert ov.edge_types[Attack("D", "C")] is EdgeType.CRITICAL


def test_empty_delta_overlay_equals_grounded():
    af = build_af([], [("A", "B")])
    ov = _overlay_for(af, ("A",))
    assert ov.delta.edges == ()
    for a, lab in ov.node_labels.items():
        assert lab.base is not Label.UNDEC
        assert lab.effective.value == lab.base.value
        assert not lab.length_changed
    assert EdgeType.CRITICAL not in ov.edge_types.values()


def test_invalid_delta_rejected():
    af = running_example()
    grounded = solve_grounded(af)
    sol = next(s for s in enumerate_stable(af) if s.extension == ("A", "D"))
    bogus = CriticalAttackSet(
        stable_index=sol.index,
        delta_index=1,
        edges=(Attack("D", "C"),),
        minimality=Minimality.CARDINALITY,
    )
    with pytest.raises(InvalidDelta):
        build_overlay(af, grounded, sol, bogus)


def test_primed_edges_touch_base_undecided_nodes():
    ov = _overlay_for(running_example(), ("A", "D"))
    assert ov.primed_edges == {
        Attack("B", "C"), Attack("C", "D"), Attack("D", "C"),
    }


SUITE = random_suite(60, seed=90210, max_args=8)


def _all_overlays(suite):
    for af in suite:
        grounded = solve_grounded(af)
        for sol in enumerate_stable(af):
            cands = [
                e for e in af.attacks
                if grounded.labeling[e.attacker] is Label.UNDEC
                and grounded.labeling[e.target] is Label.UNDEC
            ]
            if len(cands) > 12:
                continue
            for cs in find_critical_sets(af, grounded, sol, Minimality.CARDINALITY):
                yield af, grounded, sol, cs, build_overlay(af, grounded, sol, cs)


def test_effective_labeling_matches_stable():
    for _af, _grounded, sol, _cs, ov in _all_overlays(SUITE):
        members = set(sol.extension)
        for a, lab in ov.node_labels.items():
            assert lab.effective.accepts == (a in members)
            assert lab.effective_length != float("inf")


def test_no_undecided_in_effective_layer():
    for _af, _grounded, _sol, _cs, ov in _all_overlays(SUITE[:30]):
        assert EdgeType.UNDECIDED not in ov.edge_types.values()
        assert all(
            lab.effective in EffectiveLabel for lab in ov.node_labels.values()
        )


def test_reinstating_delta_reconstructs_original():
    for af, _grounded, _sol, cs, ov in _all_overlays(SUITE[:30]):
        survivors = {e for e, t in ov.edge_types.items() if t is not EdgeType.CRITICAL}
        criticals = {e for e, t in ov.edge_types.items() if t is EdgeType.CRITICAL}
        assert criticals == set(cs.edges)
        assert survivors | criticals == af.attack_set


def test_decided_lengths_unchanged_under_candidate_deltas():
    # Suspended edges sit between base-undecided arguments, and decided
    # derivations never route through those, so decided lengths persist.
    for _af, grounded, _sol, _cs, ov in _all_overlays(SUITE[:30]):
        for a, lab in ov.node_labels.items():
            if lab.base is not Label.UNDEC:
                assert lab.effective_length == grounded.lengths[a]
                assert not lab.length_changed

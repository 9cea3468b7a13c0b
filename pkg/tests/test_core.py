"""Data-model tests: construction, validation, deterministic ordering."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from afprov import Attack, build_af
from afprov.errors import InvalidToken

from helpers import running_example


def test_running_example_shape():
    af = running_example()
    assert len(af.arguments) == 4
    assert len(af.attacks) == 4
    assert af.arguments == ("A", "B", "C", "D")
    assert Attack("D", "C") in af.attack_set


def test_empty_af():
    af = build_af([], [])
    assert af.arguments == ()
    assert af.attacks == ()


def test_endpoints_auto_registered():
    af = build_af([], [("X", "X")])
    assert af.arguments == ("X",)
    assert af.attacks == (Attack("X", "X"),)


def test_duplicates_removed():
    af = build_af(["A", "A", "B"], [("A", "B"), ("A", "B")])
    assert af.arguments == ("A", "B")
    assert af.attacks == (Attack("A", "B"),)


@pytest.mark.parametrize("bad", ["", "a b", "x(", "y)", "p,q", "dot.ted", "new\nline"])
def test_invalid_names_rejected(bad):
    with pytest.raises(InvalidToken):
        build_af([bad], [])
    with pytest.raises(InvalidToken):
        build_af([], [(bad, "ok")])


def test_name_comparison_case_sensitive():
    af = build_af(["a", "A"], [])
    assert af.arguments == ("A", "a")


def test_adjacency_tables():
    af = running_example()
    assert af.attackers_of["C"] == ("B", "D")
    assert af.attackers_of["A"] == ()
    assert af.targets_of["C"] == ("D",)


def test_without_attacks():
    af = running_example()
    trimmed = af.without_attacks([Attack("C", "D")])
    assert trimmed.arguments == af.arguments
    assert Attack("C", "D") not in trimmed.attack_set
    assert len(trimmed.attacks) == 3


_name = st.text(
    alphabet=st.characters(whitelist_categories=["Ll", "Lu", "Nd"], max_codepoint=0x2FF),
    min_size=1,
    max_size=4,
)
_af_inputs = st.tuples(
    st.lists(_name, max_size=6),
    st.lists(st.tuples(_name, _name), max_size=10),
)


@given(_af_inputs)
def test_build_af_idempotent(inputs):
    names, attacks = inputs
    af = build_af(names, attacks)
    again = build_af(af.arguments, af.attacks)
    assert again == af


@given(_af_inputs, st.randoms(use_true_random=False))
def test_build_af_order_independent(inputs, rng):
    names, attacks = inputs
    af = build_af(names, attacks)
    shuffled_names = list(names)
    shuffled_attacks = list(attacks)
    rng.shuffle(shuffled_names)
    rng.shuffle(shuffled_attacks)
    assert build_af(shuffled_names, shuffled_attacks) == af

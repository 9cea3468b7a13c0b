"""Stable-extension enumeration against the brute-force oracle."""

from __future__ import annotations

from afprov import Label, build_af, enumerate_bruteforce, enumerate_stable, solve_grounded
from afprov.stable import stable_refines_grounded

from helpers import running_example, random_suite


def test_running_example_stable_solutions():
    sols = enumerate_stable(running_example())
    assert [s.extension for s in sols] == [("A", "C"), ("A", "D")]
    assert [s.index for s in sols] == [1, 2]
    first = sols[0]
    assert first.labeling == {
        "A": Label.IN, "B": Label.OUT, "C": Label.IN, "D": Label.OUT,
    }


def test_self_attacker_has_no_stable_solution():
    assert enumerate_stable(build_af([], [("X", "X")])) == []


def test_three_cycle_has_no_stable_solution():
    cycle = build_af([], [("A", "B"), ("B", "C"), ("C", "A")])
    assert enumerate_stable(cycle) == []
    assert enumerate_bruteforce(cycle, "stable") == []


def test_labelings_are_two_valued():
    for sol in enumerate_stable(running_example()):
        assert Label.UNDEC not in sol.labeling.values()


def test_repeated_calls_identical():
    af = running_example()
    assert enumerate_stable(af) == enumerate_stable(af)


SUITE = random_suite(150, seed=2024, max_args=9)


def test_matches_bruteforce_on_random_suite():
    for af in SUITE:
        engine = [s.extension for s in enumerate_stable(af)]
        assert engine == enumerate_bruteforce(af, "stable")


def test_refines_grounded_on_random_suite():
    for af in SUITE:
        grounded = solve_grounded(af)
        for sol in enumerate_stable(af):
            assert stable_refines_grounded(grounded, sol)
            assert Label.UNDEC not in sol.labeling.values()

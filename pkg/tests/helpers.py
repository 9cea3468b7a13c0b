"""Shared test utilities: canonical fixtures and the random AF suite."""

from __future__ import annotations

import random

from afprov import ArgumentationFramework, build_af

# The running example: A -> B -> C, C and D attack each other.
EXAMPLE_ARGS = ["A", "B", "C", "D"]
EXAMPLE_ATTACKS = [("A", "B"), ("B", "C"), ("C", "D"), ("D", "C")]


def running_example() -> ArgumentationFramework:
    return build_af(EXAMPLE_ARGS, EXAMPLE_ATTACKS)


def random_af(rng: random.Random, max_args: int = 10) -> ArgumentationFramework:
    """One random framework: 2..max_args arguments, edge density 0.1..0.5,
    self-loops allowed."""
    n = rng.randint(2, max_args)
    names = [f"n{i}" for i in range(n)]
    density = rng.uniform(0.1, 0.5)
    attacks = [
        (a, b)
        for a in names
        for b in names
        if rng.random() < density
    ]
    return build_af(names, attacks)


def random_suite(count: int, seed: int = 20250809, max_args: int = 10):
    rng = random.Random(seed)
    return [random_af(rng, max_args) for _ in range(count)]

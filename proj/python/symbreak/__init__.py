"""Python interface to the symbreak solver."""

from ._symbreak import (
    GroupTooLarge,
    Model,
    Symmetry,
    efpa,
    expected_restart_cost,
    graph_coloring,
    magic_square,
    most_perfect_magic_square,
    robustness_ratio,
    simulate_restart_cost,
    solve,
    square_symmetry,
    verify,
)

__all__ = [
    "GroupTooLarge",
    "Model",
    "Symmetry",
    "efpa",
    "expected_restart_cost",
    "graph_coloring",
    "magic_square",
    "most_perfect_magic_square",
    "robustness_ratio",
    "simulate_restart_cost",
    "solve",
    "square_symmetry",
    "verify",
]

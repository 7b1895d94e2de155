"""Shared graph fixtures for the test suite.

The fixture names follow the scenario each graph family exercises: a
buy/sell weighing that flips after a compound update (market), an attack
whose direction is swapped between updates (attack swap), an inverted edge
whose reversal mixtures can form a cycle (inverted edge), two parallel
supporters sharing one crucial attacker (twin supports), and a pair of
attack-only frameworks whose acceptance statuses trade places.
"""

from pathlib import Path

import pytest

from qbafx import Scenario, af, qbaf

GOLDEN = Path(__file__).resolve().parent.parent / "golden"


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN


@pytest.fixture
def market_before():
    return qbaf(
        {"a": 1.0, "b": 1.0, "c": 5.0},
        attacks=[("a", "c")],
        supports=[("a", "b")],
    )


@pytest.fixture
def market_after():
    return qbaf(
        {"a": 2.0, "b": 1.0, "c": 5.0, "d": 1.0, "e": 3.0},
        attacks=[("a", "c"), ("e", "c"), ("d", "a")],
        supports=[("a", "b"), ("d", "e")],
    )


@pytest.fixture
def market_scenario(market_before, market_after):
    return Scenario(market_before, market_after, "b", "c", "naive-sum")


def swap_graphs():
    base = {"a": 2.0, "b": 2.0, "c": 1.0}
    g = qbaf(base)
    g_fwd = qbaf(base, attacks=[("a", "b")])
    g_rev = qbaf(base, attacks=[("b", "a")])
    return g, g_fwd, g_rev


@pytest.fixture
def attack_swap():
    return swap_graphs()


@pytest.fixture
def swap_cycle_graph():
    # The reversal of the second swap w.r.t. everything but b: a and b attack
    # each other, c stands alone.
    return qbaf({"a": 2.0, "b": 2.0, "c": 1.0}, attacks=[("a", "b"), ("b", "a")])


def inverted_edge_graphs():
    g = qbaf(
        {"a": 1.0, "b": 2.0, "c": 1.0, "d": 1.0},
        attacks=[("a", "d"), ("d", "b"), ("d", "c")],
    )
    g2 = qbaf(
        {"a": 1.0, "b": 2.0, "c": 3.0, "d": 1.0},
        attacks=[("d", "a"), ("d", "b"), ("d", "c")],
    )
    return g, g2


@pytest.fixture
def inverted_edge():
    return inverted_edge_graphs()


@pytest.fixture
def twin_supports():
    g = qbaf({"a": 1.0, "b": 6.0})
    g2 = qbaf(
        {"a": 1.0, "b": 6.0, "c": 2.0, "d": 2.0, "e": 4.0},
        attacks=[("e", "b")],
        supports=[("c", "a"), ("d", "a")],
    )
    return g, g2


@pytest.fixture
def acceptance_afs():
    before = af(["a", "b", "c"], [("a", "b"), ("b", "a"), ("c", "b")])
    after = af(
        ["a", "b", "c", "d", "e", "f"],
        [
            ("a", "b"),
            ("b", "a"),
            ("c", "b"),
            ("c", "f"),
            ("d", "c"),
            ("d", "f"),
            ("e", "a"),
            ("f", "b"),
        ],
    )
    return before, after


def family(explanation_set):
    """Explanation sets as a set of sorted tuples, convenient to compare."""
    return {tuple(sorted(s)) for s in explanation_set.sets}

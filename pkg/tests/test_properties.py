"""Randomised invariants, each checked against definition-level oracles."""

import random

from hypothesis import given, settings, strategies as st

from qbafx import (
    GenSpec,
    Scenario,
    UpdateSpec,
    candidate_space,
    diff,
    evaluate,
    is_acyclic,
    is_ssi,
    minimal_nx,
    minimal_sx_cx,
    oracle,
    qbaf,
    random_qbaf,
    random_scenario,
    random_update,
    restrict,
    reverse,
    strength_consistent,
    topological_order,
)
from qbafx.semantics import CANONICAL_NAMES

from conftest import family

seeds = st.integers(min_value=0, max_value=2**32 - 1)
semantics_names = st.sampled_from(CANONICAL_NAMES)


def acyclic_graph(seed, max_args=10, degree=1.5):
    rng = random.Random(seed)
    return random_qbaf(GenSpec(rng.randint(1, max_args), degree, seed=seed))


def maybe_cyclic_graph(seed, max_args=9):
    """A random graph that frequently contains cycles."""
    g = acyclic_graph(seed, max_args)
    rng = random.Random(seed ^ 0xC1C1C1)
    names = sorted(g.args)
    attacks, supports = set(g.attacks), set(g.supports)
    for _ in range(rng.randint(0, 4)):
        u, v = rng.choice(names), rng.choice(names)
        if (u, v) not in supports and (u, v) not in attacks:
            attacks.add((u, v))
    return qbaf(g.tau, attacks, supports)


def graph_pair(seed, max_args=9):
    g = acyclic_graph(seed, max_args)
    fraction = min(1.0, max(0.2, 1.5 / len(g.args)))
    g2 = random_update(g, UpdateSpec(change_fraction=fraction, seed=seed + 1))
    return g, g2


def cycle_tainted(g):
    """Arguments on a cycle or reachable from one, found by plain DFS."""
    succ = {a: [] for a in g.args}
    for u, v in g.edges:
        succ[u].append(v)
    on_cycle, state = set(), {}
    path = []

    def visit(node):
        state[node] = "active"
        path.append(node)
        for nxt in succ[node]:
            if state.get(nxt) == "active":
                on_cycle.update(path[path.index(nxt):])
            elif nxt not in state:
                visit(nxt)
        path.pop()
        state[node] = "done"

    for a in sorted(g.args):
        if a not in state:
            visit(a)
    tainted = set(on_cycle)
    frontier = list(on_cycle)
    while frontier:
        node = frontier.pop()
        for nxt in succ[node]:
            if nxt not in tainted:
                tainted.add(nxt)
                frontier.append(nxt)
    return tainted


def ancestors(g, target):
    pred = {a: [] for a in g.args}
    for u, v in g.edges:
        pred[v].append(u)
    seen = set()
    frontier = [target]
    while frontier:
        node = frontier.pop()
        for parent in pred[node]:
            if parent not in seen:
                seen.add(parent)
                frontier.append(parent)
    return seen


class TestModelProperties:
    @given(seed=seeds, pick=st.integers(0, 2**30))
    @settings(max_examples=40, deadline=None)
    def test_restrict_composes_with_intersection(self, seed, pick):
        g = acyclic_graph(seed)
        rng = random.Random(pick)
        names = sorted(g.args)
        s1 = {a for a in names if rng.random() < 0.6}
        s2 = {a for a in names if rng.random() < 0.6}
        assert restrict(restrict(g, s1), s2) == restrict(g, s1 & s2)

    @given(seed=seeds)
    @settings(max_examples=40, deadline=None)
    def test_topological_order_respects_every_edge(self, seed):
        g = acyclic_graph(seed)
        assert is_acyclic(g)
        order = topological_order(g)
        position = {a: i for i, a in enumerate(order)}
        assert all(position[u] < position[v] for (u, v) in g.edges)

    @given(seed=seeds)
    @settings(max_examples=40, deadline=None)
    def test_diff_roles_swap_with_the_arguments(self, seed):
        g, g2 = graph_pair(seed)
        forward, backward = diff(g, g2), diff(g2, g)
        assert forward.added == backward.removed
        assert forward.removed == backward.added
        parts = [forward.added, forward.removed, forward.modified, forward.unchanged]
        assert frozenset().union(*parts) == g.args | g2.args
        assert sum(map(len, parts)) == len(g.args | g2.args)


class TestSemanticsProperties:
    @given(seed=seeds, name=semantics_names)
    @settings(max_examples=50, deadline=None)
    def test_leaves_keep_their_initial_strength(self, seed, name):
        g = acyclic_graph(seed)
        sigma = evaluate(g, name)
        targets = {v for (_, v) in g.edges}
        for leaf in g.args - targets:
            if name == "naive-sum":
                assert sigma[leaf] == g.tau[leaf]
            else:
                assert abs(sigma[leaf] - g.tau[leaf]) <= 1e-12

    @given(seed=seeds, name=semantics_names)
    @settings(max_examples=40, deadline=None)
    def test_directional_connectedness(self, seed, name):
        g = acyclic_graph(seed, max_args=8)
        sigma = evaluate(g, name)
        for x in g.args:
            part = restrict(g, {x} | ancestors(g, x))
            assert abs(evaluate(part, name)[x] - sigma[x]) <= 1e-9

    @given(seed=seeds, name=semantics_names)
    @settings(max_examples=40, deadline=None)
    def test_composed_strengths_stay_in_the_unit_interval(self, seed, name):
        if name == "naive-sum":
            return
        g = acyclic_graph(seed)
        assert all(0.0 <= v <= 1.0 for v in evaluate(g, name).values())

    @given(seed=seeds)
    @settings(max_examples=50, deadline=None)
    def test_undefined_exactly_on_and_after_cycles(self, seed):
        g = maybe_cyclic_graph(seed)
        sigma = evaluate(g, "naive-sum")
        tainted = cycle_tainted(g)
        assert {a for a, v in sigma.items() if v is None} == tainted

    @given(seed=seeds, name=semantics_names)
    @settings(max_examples=30, deadline=None)
    def test_evaluation_is_deterministic(self, seed, name):
        g = acyclic_graph(seed)
        assert evaluate(g, name) == evaluate(g, name)


class TestChangeProperties:
    @given(seed=seeds)
    @settings(max_examples=40, deadline=None)
    def test_reversal_fixed_points(self, seed):
        g, g2 = graph_pair(seed)
        assert reverse(g, g2, frozenset()) == g2
        assert reverse(g, g2, g.args | g2.args) == g

    @given(seed=seeds, pick=st.integers(0, 2**30))
    @settings(max_examples=40, deadline=None)
    def test_reversal_argument_sets_follow_the_set_algebra(self, seed, pick):
        g, g2 = graph_pair(seed)
        rng = random.Random(pick)
        union = sorted(g.args | g2.args)
        s = frozenset(a for a in union if rng.random() < 0.5)
        assert reverse(g, g2, s).args == (g2.args | s) - (s - g.args)

    @given(seed=seeds)
    @settings(max_examples=30, deadline=None)
    def test_every_graph_is_consistent_with_itself(self, seed):
        g = acyclic_graph(seed, max_args=6)
        names = sorted(g.args)
        for x in names:
            for y in names:
                assert strength_consistent(Scenario(g, g, x, y, "naive-sum"))

    @given(seed=seeds)
    @settings(max_examples=40, deadline=None)
    def test_strict_consistency_is_symmetric_and_implies_weak(self, seed):
        scn = random_scenario(seed, n_args=7, semantics="naive-sum")
        swapped = Scenario(
            scn.before, scn.after, scn.topic_y, scn.topic_x, scn.semantics, scn.qbaf_class
        )
        assert strength_consistent(scn) == strength_consistent(swapped)
        weak = Scenario(
            scn.before, scn.after, scn.topic_x, scn.topic_y, scn.semantics, scn.qbaf_class, "weak"
        )
        if strength_consistent(scn):
            assert strength_consistent(weak)


class TestSearchProperties:
    @given(seed=seeds, name=st.sampled_from(["naive-sum", "quadratic-energy"]))
    @settings(max_examples=60, deadline=None)
    def test_soundness_and_completeness(self, seed, name):
        scn = random_scenario(seed, n_args=8, semantics=name)
        families = [
            minimal_sx_cx(scn, "ssi"),
            minimal_sx_cx(scn, "csi"),
            minimal_nx(scn),
        ]
        if strength_consistent(scn):
            for fam in families:
                assert fam.sets == frozenset([frozenset()])
        else:
            for fam in families:
                assert len(fam.sets) >= 1
                assert frozenset() not in fam.sets

    @given(seed=seeds)
    @settings(max_examples=25, deadline=None)
    def test_counterfactual_sets_are_sufficient(self, seed):
        scn = random_scenario(seed, n_args=8, semantics="naive-sum")
        for s in minimal_sx_cx(scn, "csi").sets:
            assert is_ssi(scn, s)

    @given(seed=seeds)
    @settings(max_examples=25, deadline=None)
    def test_necessary_sets_hit_every_minimal_sufficient_set(self, seed):
        scn = random_scenario(seed, n_args=8, semantics="naive-sum")
        mssis = minimal_sx_cx(scn, "ssi").sets
        base = candidate_space(scn).base
        for n in minimal_nx(scn).sets:
            assert n <= base
            assert all(n & s for s in mssis) or n == frozenset()

    @given(seed=seeds)
    @settings(max_examples=25, deadline=None)
    def test_minimal_families_are_antichains(self, seed):
        scn = random_scenario(seed, n_args=8, semantics="quadratic-energy")
        for kind in ("ssi", "csi"):
            sets = minimal_sx_cx(scn, kind).sets
            assert not any(s < t for s in sets for t in sets)

    @given(
        seed=seeds,
        name=st.sampled_from(["naive-sum", "quadratic-energy"]),
        qbaf_class=st.sampled_from(["acyclic", "all"]),
    )
    @settings(max_examples=30, deadline=None)
    def test_pruned_search_equals_the_oracle(self, seed, name, qbaf_class):
        scn = random_scenario(seed, n_args=6, semantics=name, qbaf_class=qbaf_class)
        assert family(minimal_sx_cx(scn, "ssi")) == family(oracle(scn, "ssi"))
        assert family(minimal_sx_cx(scn, "csi")) == family(oracle(scn, "csi"))
        assert family(minimal_nx(scn)) == family(oracle(scn, "nsi"))


class TestBenchProperties:
    @given(seed=seeds)
    @settings(max_examples=30, deadline=None)
    def test_generated_pairs_stay_acyclic_and_validate(self, seed):
        g, g2 = graph_pair(seed)
        assert is_acyclic(g) and is_acyclic(g2)
        assert qbaf(g2.tau, g2.attacks, g2.supports) == g2

    @given(seed=seeds)
    @settings(max_examples=20, deadline=None)
    def test_scenarios_feed_the_search(self, seed):
        scn = random_scenario(seed, n_args=7)
        fam = minimal_sx_cx(scn, "ssi")
        assert fam.cyclic_rejections <= fam.candidates_checked or fam.consistent

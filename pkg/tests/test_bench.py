import json

import pytest

from qbafx import (
    BenchConfig,
    DomainViolation,
    GenSpec,
    UpdateSpec,
    is_acyclic,
    random_qbaf,
    random_scenario,
    random_update,
    run_benchmark,
    serialize_qbaf,
    strength_consistent,
    validate,
)
from qbafx.bench import planned_operations


class TestRandomQbaf:
    def test_seeded_generation_is_deterministic(self):
        spec = GenSpec(n_args=30, avg_out_degree=2.0, seed=42)
        assert random_qbaf(spec) == random_qbaf(spec)

    def test_different_seeds_differ(self):
        a = random_qbaf(GenSpec(20, 2.0, seed=1))
        b = random_qbaf(GenSpec(20, 2.0, seed=2))
        assert a != b

    def test_zero_degree_gives_isolated_arguments(self):
        g = random_qbaf(GenSpec(5, 0.0, seed=1))
        assert len(g.args) == 5
        assert not g.attacks and not g.supports

    def test_edge_count_tracks_the_requested_degree(self):
        g = random_qbaf(GenSpec(100, 3.0, seed=7))
        edges = len(g.attacks) + len(g.supports)
        assert 225 <= edges <= 375  # within 25% of 300

    def test_generated_graphs_validate_and_are_acyclic(self):
        for seed in range(10):
            g = random_qbaf(GenSpec(25, 2.5, seed=seed))
            validate(g.tau, g.attacks, g.supports)
            assert is_acyclic(g)
            assert all(0.0 <= w <= 1.0 for w in g.tau.values())

    def test_needs_at_least_one_argument(self):
        with pytest.raises(DomainViolation):
            random_qbaf(GenSpec(0, 1.0, seed=0))


class TestRandomUpdate:
    def test_seeded_updates_are_deterministic(self):
        g = random_qbaf(GenSpec(40, 1.5, seed=3))
        spec = UpdateSpec(change_fraction=0.2, seed=9)
        first, second = random_update(g, spec), random_update(g, spec)
        assert first == second
        assert json.dumps(serialize_qbaf(first)) == json.dumps(serialize_qbaf(second))

    def test_a_fifth_of_fifty_arguments_means_ten_operations(self):
        g = random_qbaf(GenSpec(50, 1.1, seed=0))
        assert planned_operations(g, UpdateSpec(change_fraction=0.2, seed=0)) == 10

    def test_added_arguments_lean_outgoing(self):
        # Additions default to two expected outgoing edges against one incoming.
        out_total = in_total = added = 0
        for seed in range(40):
            g = random_qbaf(GenSpec(12, 1.0, seed=seed))
            g2 = random_update(
                g, UpdateSpec(change_fraction=0.5, seed=seed + 1, mix=(0, 0, 0, 0, 1.0))
            )
            for new in g2.args - g.args:
                added += 1
                out_total += len(g2.outgoing_attacks(new)) + len(g2.outgoing_supports(new))
                in_total += sum(1 for (u, v) in g2.edges if v == new)
        assert added > 50
        assert out_total > in_total

    def test_updates_stay_acyclic_and_valid(self):
        for seed in range(10):
            g = random_qbaf(GenSpec(30, 1.5, seed=seed))
            g2 = random_update(g, UpdateSpec(change_fraction=0.3, seed=seed + 100))
            validate(g2.tau, g2.attacks, g2.supports)
            assert is_acyclic(g2)

    def test_pure_strength_updates_keep_the_structure(self):
        g = random_qbaf(GenSpec(20, 1.5, seed=5))
        spec = UpdateSpec(change_fraction=0.5, seed=6, mix=(1.0, 0.0, 0.0, 0.0, 0.0))
        g2 = random_update(g, spec)
        assert g2.args == g.args
        assert g2.attacks == g.attacks and g2.supports == g.supports
        assert g2.tau != g.tau

    def test_too_small_a_change_fraction_is_rejected(self):
        g = random_qbaf(GenSpec(3, 1.0, seed=0))
        with pytest.raises(DomainViolation):
            random_update(g, UpdateSpec(change_fraction=0.1, seed=0))

    def test_mix_must_sum_to_one(self):
        with pytest.raises(DomainViolation):
            UpdateSpec(mix=(0.5, 0.5, 0.5, 0.0, 0.0))


class TestRandomScenario:
    def test_topics_live_in_both_graphs(self):
        for seed in range(8):
            scn = random_scenario(seed, n_args=8)
            assert scn.topic_x in scn.before.args and scn.topic_x in scn.after.args
            assert scn.topic_y in scn.before.args and scn.topic_y in scn.after.args
            assert scn.topic_x != scn.topic_y

    def test_deterministic(self):
        assert random_scenario(11) == random_scenario(11)

    def test_scenarios_are_usable_end_to_end(self):
        scn = random_scenario(2, n_args=6, semantics="naive-sum")
        strength_consistent(scn)  # must not raise


class TestRunBenchmark:
    def test_rows_cover_requested_sizes_and_kinds(self):
        config = BenchConfig(sizes=(4, 6), kinds=("eval", "ssi"), samples=3)
        result = run_benchmark(config)
        got = {(row.size, row.kind) for row in result.rows}
        assert got == {(4, "eval"), (6, "eval"), (4, "ssi"), (6, "ssi")}
        assert all(row.samples == 3 for row in result.rows)
        assert all(row.max_s >= row.mean_s >= 0 for row in result.rows)

    def test_no_sizes_means_no_rows(self):
        result = run_benchmark(BenchConfig(sizes=(), samples=2))
        assert result.rows == []

    def test_csv_layout(self):
        config = BenchConfig(sizes=(4,), kinds=("eval",), samples=2)
        text = run_benchmark(config).to_csv()
        lines = text.strip().splitlines()
        assert lines[0] == "size,kind,samples,mean_s,max_s"
        assert lines[1].startswith("4,eval,2,")

    def test_explanation_queries_report_cyclic_statistics(self):
        config = BenchConfig(sizes=(8,), kinds=("ssi",), samples=4)
        result = run_benchmark(config)
        assert result.queries == 4
        assert result.candidates_checked >= 0
        assert 0.0 <= result.cyclic_fraction <= 1.0

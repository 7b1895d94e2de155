"""Seeded random graphs, random updates, and the timing study.

Graphs are acyclic by construction: arguments get a random rank and edges
only ever point from higher to lower rank.  Updates apply a seeded mix of
five operation types (strength update, edge removal, edge addition,
argument removal, argument addition) and keep the graph acyclic.  The
benchmark times final-strength evaluation across sizes and the three
explanation searches on generated update scenarios, writing CSV rows of
(size, kind, samples, mean_s, max_s).
"""

from __future__ import annotations

import csv
import io
import random
import time
from dataclasses import dataclass, field

from .change import ACYCLIC, STRICT, Scenario
from .errors import DomainViolation
from .model import Qbaf, topological_order, validate
from .search import CSI, NSI, SSI, minimal_nx, minimal_sx_cx

EVAL = "eval"
BENCH_KINDS = (EVAL, SSI, CSI, NSI)

#: Operation mix for updates: even split across the five types by default.
UPDATE_OPS = (
    "strength-update",
    "edge-removal",
    "edge-addition",
    "argument-removal",
    "argument-addition",
)


@dataclass(frozen=True)
class GenSpec:
    """Parameters for one random acyclic graph."""

    n_args: int
    avg_out_degree: float = 3.0
    seed: int = 0


@dataclass(frozen=True)
class UpdateSpec:
    """Parameters for one random update.

    ``change_fraction`` of the argument count, rounded, gives the number of
    operations applied.  ``mix`` weighs the five operation types and must
    sum to 1.  Added arguments receive on average ``added_out`` outgoing
    and ``added_in`` incoming edges.
    """

    change_fraction: float = 0.2
    seed: int = 0
    mix: tuple = (0.2, 0.2, 0.2, 0.2, 0.2)
    added_out: float = 2.0
    added_in: float = 1.0

    def __post_init__(self):
        if len(self.mix) != len(UPDATE_OPS):
            raise DomainViolation(f"mix needs {len(UPDATE_OPS)} weights")
        if abs(sum(self.mix) - 1.0) > 1e-9:
            raise DomainViolation("mix weights must sum to 1")
        if not 0.0 < self.change_fraction <= 1.0:
            raise DomainViolation("change_fraction must be in (0, 1]")


def _arg_name(i: int, width: int) -> str:
    return f"a{i:0{width}d}"


def random_qbaf(spec: GenSpec) -> Qbaf:
    """A seeded random acyclic QBAF with uniform strengths in [0, 1].

    Each ordered pair respecting the hidden rank order becomes an edge with
    the probability that makes the expected out-degree ``avg_out_degree``;
    each edge is an attack or a support with equal probability.
    """
    if spec.n_args < 1:
        raise DomainViolation("need at least one argument")
    rng = random.Random(spec.seed)
    width = max(2, len(str(spec.n_args - 1)))
    names = [_arg_name(i, width) for i in range(spec.n_args)]
    rank = {a: r for a, r in zip(names, rng.sample(range(spec.n_args), spec.n_args))}
    tau = {a: rng.random() for a in names}
    n = spec.n_args
    prob = min(1.0, 2.0 * spec.avg_out_degree / (n - 1)) if n > 1 else 0.0
    attacks, supports = set(), set()
    for u in names:
        for v in names:
            if rank[u] > rank[v] and rng.random() < prob:
                (attacks if rng.random() < 0.5 else supports).add((u, v))
    return validate(tau, attacks=attacks, supports=supports)


def _rank_of(g: Qbaf) -> dict:
    # Positions in a topological order: edges go from higher to lower position
    # once we rank ancestors first, so additions against this rank stay acyclic.
    order = topological_order(g)
    return {a: i for i, a in enumerate(reversed(order))}


def planned_operations(g: Qbaf, spec: UpdateSpec) -> int:
    """How many update operations ``spec`` applies to this graph."""
    return round(spec.change_fraction * len(g.args))


def random_update(g: Qbaf, spec: UpdateSpec) -> Qbaf:
    """Apply a seeded batch of update operations; the result stays acyclic."""
    ops = planned_operations(g, spec)
    if ops < 1:
        raise DomainViolation("change_fraction too small for this graph")
    rng = random.Random(spec.seed)
    tau = dict(g.tau)
    attacks, supports = set(g.attacks), set(g.supports)
    rank = dict(_rank_of(g))
    next_new = 0

    def args_sorted():
        return sorted(tau)

    def all_edges():
        return sorted(attacks) + sorted(supports)

    def add_edge(u, v):
        if (u, v) in attacks or (u, v) in supports:
            return False
        (attacks if rng.random() < 0.5 else supports).add((u, v))
        return True

    for _ in range(ops):
        op = rng.choices(UPDATE_OPS, weights=spec.mix)[0]
        names = args_sorted()
        if op == "strength-update" and names:
            tau[rng.choice(names)] = rng.random()
        elif op == "edge-removal":
            edges = all_edges()
            if edges:
                u, v = rng.choice(edges)
                attacks.discard((u, v))
                supports.discard((u, v))
        elif op == "edge-addition" and len(names) >= 2:
            for _attempt in range(8):
                u, v = rng.sample(names, 2)
                if rank[u] < rank[v]:
                    u, v = v, u
                if add_edge(u, v):
                    break
        elif op == "argument-removal" and len(names) > 1:
            victim = rng.choice(names)
            del tau[victim]
            del rank[victim]
            attacks = {(u, v) for (u, v) in attacks if victim not in (u, v)}
            supports = {(u, v) for (u, v) in supports if victim not in (u, v)}
        elif op == "argument-addition":
            new = f"u{next_new:02d}"
            next_new += 1
            tau[new] = rng.random()
            # Splice the newcomer into the rank order: outgoing edges go to
            # lower-ranked arguments, incoming come from higher-ranked ones.
            position = rng.uniform(0, max(rank.values(), default=0) + 1)
            rank[new] = position
            lower = [a for a in names if rank[a] < position]
            higher = [a for a in names if rank[a] > position]
            for pool, expected, outgoing in ((lower, spec.added_out, True),
                                             (higher, spec.added_in, False)):
                if not pool:
                    continue
                count = min(len(pool), _poisson_like(rng, expected))
                for other in rng.sample(pool, count):
                    add_edge(new, other) if outgoing else add_edge(other, new)
    return validate(tau, attacks=attacks, supports=supports)


def _poisson_like(rng: random.Random, mean: float) -> int:
    # Small-count sampler: binomial with n = 2 * ceil(mean) trials.
    trials = max(1, int(2 * mean + 0.5))
    p = mean / trials
    return sum(rng.random() < p for _ in range(trials))


def random_scenario(
    seed: int,
    n_args: int = 8,
    avg_out_degree: float = 1.1,
    change_fraction: float = 0.2,
    semantics="quadratic-energy",
    qbaf_class: str = ACYCLIC,
    mode: str = STRICT,
) -> Scenario:
    """A seeded scenario: random graph, random update, random topics.

    Retries with follow-up seeds until the update leaves at least two
    arguments in common to serve as topics, so the result is total.
    """
    attempt = seed
    while True:
        g = random_qbaf(GenSpec(n_args, avg_out_degree, seed=attempt))
        cf = min(1.0, max(change_fraction, 1.5 / len(g.args)))
        g2 = random_update(g, UpdateSpec(change_fraction=cf, seed=attempt + 1))
        common = sorted(g.args & g2.args)
        if len(common) >= 2:
            rng = random.Random(attempt + 2)
            x, y = rng.sample(common, 2)
            return Scenario(g, g2, x, y, semantics, qbaf_class=qbaf_class, mode=mode)
        attempt += 1_000_003


@dataclass(frozen=True)
class BenchConfig:
    """What to measure: which sizes, densities, and benchmark kinds."""

    sizes: tuple = (5, 10, 20)
    kinds: tuple = BENCH_KINDS
    samples: int = 50
    eval_degree: float = 3.0
    explain_degree: float = 1.1
    change_fraction: float = 0.2
    seed: int = 0
    eval_semantics: str = "quadratic-energy"


@dataclass(frozen=True)
class BenchRow:
    size: int
    kind: str
    samples: int
    mean_s: float
    max_s: float


@dataclass
class BenchResult:
    rows: list = field(default_factory=list)
    queries: int = 0
    candidates_checked: int = 0
    cyclic_rejections: int = 0

    @property
    def cyclic_fraction(self) -> float:
        """Share of membership checks rejected for a cyclic reversal."""
        if not self.candidates_checked:
            return 0.0
        return self.cyclic_rejections / self.candidates_checked

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["size", "kind", "samples", "mean_s", "max_s"])
        for row in self.rows:
            writer.writerow(
                [row.size, row.kind, row.samples, f"{row.mean_s:.6g}", f"{row.max_s:.6g}"]
            )
        return out.getvalue()


def _time_one(fn) -> float:
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


def run_benchmark(config: BenchConfig) -> BenchResult:
    """Time evaluation and/or explanation searches over random inputs.

    Evaluation timing uses ``eval_degree`` and the configured semantics;
    explanation timing generates an update scenario per sample and times
    each requested explanation kind separately.  One warm-up run per size
    is excluded from the numbers.
    """
    from .semantics import evaluate  # local import keeps module load light

    result = BenchResult()
    for size in config.sizes:
        if EVAL in config.kinds:
            durations = []
            for i in range(config.samples):
                g = random_qbaf(GenSpec(size, config.eval_degree, seed=config.seed + 7919 * i))
                if i == 0:
                    evaluate(g, config.eval_semantics)  # warm-up
                durations.append(_time_one(lambda: evaluate(g, config.eval_semantics)))
            result.rows.append(
                BenchRow(size, EVAL, config.samples, sum(durations) / len(durations), max(durations))
            )
        wanted = [k for k in (SSI, CSI, NSI) if k in config.kinds]
        if not wanted:
            continue
        per_kind = {k: [] for k in wanted}
        for i in range(config.samples):
            scenario = random_scenario(
                seed=config.seed + 104_729 * (i + 1),
                n_args=size,
                avg_out_degree=config.explain_degree,
                change_fraction=config.change_fraction,
                semantics=config.eval_semantics,
            )
            for kind in wanted:
                start = time.perf_counter()
                if kind == NSI:
                    family = minimal_nx(scenario)
                else:
                    family = minimal_sx_cx(scenario, kind)
                per_kind[kind].append(time.perf_counter() - start)
                result.queries += 1
                result.candidates_checked += family.candidates_checked
                result.cyclic_rejections += family.cyclic_rejections
        for kind in wanted:
            times = per_kind[kind]
            result.rows.append(
                BenchRow(size, kind, config.samples, sum(times) / len(times), max(times))
            )
    return result


def write_benchmark(result: BenchResult, path: str, plot_path: str | None = None) -> None:
    """Write the CSV table, and optionally a line plot of mean times."""
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(result.to_csv())
    if plot_path:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        fig, ax = plt.subplots(figsize=(7, 4))
        kinds = sorted({row.kind for row in result.rows})
        for kind in kinds:
            rows = sorted((r for r in result.rows if r.kind == kind), key=lambda r: r.size)
            ax.plot([r.size for r in rows], [r.mean_s for r in rows], marker="o", label=kind)
        ax.set_xlabel("arguments")
        ax.set_ylabel("mean seconds")
        ax.legend()
        fig.tight_layout()
        fig.savefig(plot_path)
        plt.close(fig)

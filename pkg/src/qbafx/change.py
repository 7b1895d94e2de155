"""Comparing two QBAFs: consistency of topic strengths and change reversal.

A scenario pairs an original graph with an updated one and names two topic
arguments whose relative final strengths are under scrutiny.  The update is
*strength-consistent* for the topics when their strict order, equality and
comparability all carry over from the original to the update.  Reversal
undoes the update for a chosen set of arguments, which is the primitive the
explanation search is built on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CyclicQbaf, DomainViolation, IdCollision, UnknownArgument
from .model import Qbaf, is_acyclic, validate
from .semantics import (
    QUALITATIVE_STABLE,
    SemanticsSpec,
    compare,
    evaluate,
    resolve_semantics,
)
from . import stable

ACYCLIC = "acyclic"
ALL = "all"
STRICT = "strict"
WEAK = "weak"

DEFAULT_EPSILON = 1e-9


@dataclass(frozen=True)
class Scenario:
    """One explanation query: two graphs, two topics, and the ground rules.

    ``qbaf_class`` restricts which reversals count ("acyclic" or "all");
    ``mode`` selects strict or weak consistency; ``epsilon`` is the absolute
    tolerance under which two numeric strengths count as equal.
    """

    before: Qbaf
    after: Qbaf
    topic_x: str
    topic_y: str
    semantics: SemanticsSpec
    qbaf_class: str = ACYCLIC
    mode: str = STRICT
    epsilon: float = DEFAULT_EPSILON

    def __post_init__(self):
        object.__setattr__(self, "semantics", resolve_semantics(self.semantics))
        for topic in (self.topic_x, self.topic_y):
            if topic not in self.before.args or topic not in self.after.args:
                raise UnknownArgument(f"topic {topic!r} must occur in both graphs")
        if self.qbaf_class not in (ACYCLIC, ALL):
            raise DomainViolation(f"unknown graph class {self.qbaf_class!r}")
        if self.mode not in (STRICT, WEAK):
            raise DomainViolation(f"unknown consistency mode {self.mode!r}")
        if self.epsilon < 0:
            raise DomainViolation("epsilon must be non-negative")
        if self.qbaf_class == ACYCLIC:
            for label, g in (("original", self.before), ("updated", self.after)):
                if not is_acyclic(g):
                    raise CyclicQbaf(f"the {label} graph is cyclic but the class is acyclic")

    @property
    def union_args(self) -> frozenset:
        return self.before.args | self.after.args

    def in_class(self, g: Qbaf) -> bool:
        return self.qbaf_class == ALL or is_acyclic(g)


def final_strengths(g: Qbaf, semantics) -> dict:
    """Evaluate ``g`` under any named semantics, acceptance-based included."""
    spec = resolve_semantics(semantics)
    if spec.kind == QUALITATIVE_STABLE:
        return stable.acceptance_strengths(g)
    return evaluate(g, spec)


def comparable(g: Qbaf, a: str, b: str, semantics, eps: float = DEFAULT_EPSILON) -> bool:
    """True iff both arguments have defined final strengths in ``g``.

    The strength domains in use are totally ordered, so two defined
    strengths always stand in some order; comparability can only fail
    through an undefined strength.
    """
    for arg in (a, b):
        if arg not in g.args:
            raise UnknownArgument(f"unknown argument {arg!r}")
    sigma = final_strengths(g, semantics)
    return sigma[a] is not None and sigma[b] is not None


def _consistent(order_before, order_after, mode: str) -> bool:
    # order_* is "lt"/"eq"/"gt" or None for incomparable topics.
    if (order_before is None) != (order_after is None):
        return False  # comparability must be preserved either way
    if order_before is None:
        return True
    if mode == STRICT:
        return order_before == order_after
    # Weak mode: only an outright flip of the strict order breaks consistency.
    flip = {"lt": "gt", "gt": "lt"}
    return flip.get(order_before) != order_after


def consistency_orders(scenario: Scenario, after: Qbaf | None = None):
    """The topic order in the original graph and in ``after`` (default: the update)."""
    spec = scenario.semantics
    target = scenario.after if after is None else after
    sb = final_strengths(scenario.before, spec)
    sa = final_strengths(target, spec)
    x, y = scenario.topic_x, scenario.topic_y
    dom = spec.domain
    return (
        compare(dom, sb[x], sb[y], scenario.epsilon),
        compare(dom, sa[x], sa[y], scenario.epsilon),
    )


def strength_consistent(scenario: Scenario, after: Qbaf | None = None) -> bool:
    """Do the topics relate the same way after the update as before?

    With ``after`` given, that graph is checked against the scenario's
    original instead of the recorded update; the search uses this to test
    reversals.
    """
    order_before, order_after = consistency_orders(scenario, after)
    return _consistent(order_before, order_after, scenario.mode)


def reverse(g: Qbaf, g2: Qbaf, s) -> Qbaf:
    """Undo the update ``g -> g2`` for every argument in ``s``.

    Arguments of ``s`` removed by the update are restored, those added by
    it are deleted, and the initial strengths and outgoing attacks and
    supports of the remaining members of ``s`` are reset to their state in
    ``g``.  Everything outside ``s`` keeps its updated state.
    """
    s = frozenset(s)
    union = g.args | g2.args
    stray = s - union
    if stray:
        raise UnknownArgument(f"cannot reverse unknown argument {sorted(stray)[0]!r}")
    args_star = (g2.args | s) - (s - g.args)

    def mixed(old_edges, new_edges):
        kept = {(u, v) for (u, v) in new_edges if not (u in s and v in g.args)}
        restored = {(u, v) for (u, v) in old_edges if u in s and v in args_star}
        return frozenset(
            (u, v) for (u, v) in kept | restored if u in args_star and v in args_star
        )

    tau_star = {
        x: (g.tau[x] if (x in g.args and x in s) else g2.tau[x]) for x in args_star
    }
    return Qbaf(
        args=args_star,
        tau=tau_star,
        attacks=mixed(g.attacks, g2.attacks),
        supports=mixed(g.supports, g2.supports),
    )


def with_dummy_topic(
    g: Qbaf,
    g2: Qbaf,
    topic: str,
    threshold,
    semantics,
    dummy_id: str = "ref",
    **scenario_kwargs,
) -> Scenario:
    """Build a single-topic query by pairing ``topic`` with a reference point.

    An isolated argument with initial strength ``threshold`` is added to
    both graphs; explanations for the pair ``(topic, dummy)`` then explain
    how ``topic`` moved relative to the fixed threshold.
    """
    if dummy_id in g.args or dummy_id in g2.args:
        raise IdCollision(f"argument name {dummy_id!r} is already taken")

    def extended(graph: Qbaf) -> Qbaf:
        tau = dict(graph.tau)
        tau[dummy_id] = threshold
        return validate(tau, attacks=graph.attacks, supports=graph.supports)

    return Scenario(
        before=extended(g),
        after=extended(g2),
        topic_x=topic,
        topic_y=dummy_id,
        semantics=resolve_semantics(semantics),
        **scenario_kwargs,
    )

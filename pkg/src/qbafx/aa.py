"""Explaining acceptance-status changes in attack-only frameworks.

Attack graphs map onto QBAFs over the qualitative chain n < c < s: the
attack relation carries over, the support relation stays empty, and initial
strengths are left unassigned because the acceptance semantics ignores
them.  Final strengths are the stable-semantics acceptance statuses, and
the regular explanation machinery then answers why the relative status of
two topic arguments changed between two frameworks.

Frameworks here may be cyclic (mutual attacks are the norm), so queries run
over the unrestricted graph class.  Weak consistency mode is available for
callers who only care about outright rank flips, not moves to equality.
"""

from __future__ import annotations

from .change import ALL, STRICT, Scenario
from .model import Qbaf
from .search import KINDS, ExplanationSet, explain
from .stable import Af, af, af_acceptance, stable_extensions

__all__ = [
    "Af",
    "af",
    "af_acceptance",
    "stable_extensions",
    "as_qbaf",
    "aa_scenario",
    "aa_explain",
]


def as_qbaf(framework: Af) -> Qbaf:
    """The qualitative QBAF image of an attack-only framework."""
    return Qbaf(
        args=framework.arguments,
        tau={a: None for a in framework.arguments},
        attacks=framework.attacks,
        supports=frozenset(),
    )


def aa_scenario(before: Af, after: Af, x: str, y: str, mode: str = STRICT) -> Scenario:
    """A scenario over the acceptance semantics and the unrestricted class."""
    return Scenario(
        before=as_qbaf(before),
        after=as_qbaf(after),
        topic_x=x,
        topic_y=y,
        semantics="stable",
        qbaf_class=ALL,
        mode=mode,
    )


def aa_explain(
    before: Af,
    after: Af,
    x: str,
    y: str,
    mode: str = STRICT,
    kind: str = "ssi",
    use_oracle: bool = False,
) -> ExplanationSet:
    """Minimal explanations for the topics' acceptance-status change."""
    if kind not in KINDS:
        raise ValueError(f"unknown explanation kind {kind!r}")
    return explain(aa_scenario(before, after, x, y, mode), kind, use_oracle=use_oracle)

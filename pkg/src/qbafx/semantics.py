"""Gradual semantics: final strengths for every argument of a QBAF.

Two families are evaluated here.  The naive additive rule works on the real
line: an argument's final strength is its initial strength plus the summed
final strengths of its supporters minus those of its attackers.  The
composed rules work on the unit interval and plug an aggregation function
(sum, product or top) into a parameterised influence function (linear,
Euler-based or p-max).

Both families are defined for acyclic graphs only.  Arguments lying on a
cycle, or reachable from one, receive the undefined strength ``None``;
evaluation never raises because of cycles.

The qualitative acceptance semantics for attack-only graphs lives in
:mod:`qbafx.stable`; it shares the :class:`SemanticsSpec` surface so that
scenarios can carry any of the seven named semantics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainViolation, MissingStrength, OutOfRangeStrength
from .model import Qbaf, _peel

UNDEFINED = None

NAIVE_SUM = "naive-sum"
COMPOSED = "composed"
QUALITATIVE_STABLE = "qualitative-stable"

SUM = "sum"
PRODUCT = "product"
TOP = "top"

ACCEPTANCE_LEVELS = ("n", "c", "s")


@dataclass(frozen=True)
class StrengthDomain:
    """A totally ordered strength domain.

    ``kind`` is ``"real"`` (whole real line), ``"unit"`` (the interval
    [0, 1]) or ``"chain"`` (a finite ordered set of labels).
    """

    kind: str
    levels: tuple = ()

    def contains(self, value) -> bool:
        if value is UNDEFINED:
            return False
        if self.kind == "chain":
            return value in self.levels
        if not isinstance(value, float):
            return False
        return self.kind == "real" or 0.0 <= value <= 1.0


REAL_LINE = StrengthDomain("real")
UNIT_INTERVAL = StrengthDomain("unit")
ACCEPTANCE_CHAIN = StrengthDomain("chain", ACCEPTANCE_LEVELS)


@dataclass(frozen=True)
class Influence:
    """An influence function family with its parameters."""

    family: str  # "linear" | "euler-based" | "p-max"
    p: int | None = None
    k: float | None = None


@dataclass(frozen=True)
class SemanticsSpec:
    """A named gradual semantics.

    ``kind`` selects the evaluation rule; composed semantics additionally
    carry an aggregation name and an :class:`Influence`.
    """

    name: str
    kind: str
    aggregation: str | None = None
    influence: Influence | None = None

    @property
    def domain(self) -> StrengthDomain:
        if self.kind == NAIVE_SUM:
            return REAL_LINE
        if self.kind == QUALITATIVE_STABLE:
            return ACCEPTANCE_CHAIN
        return UNIT_INTERVAL


SEMANTICS = {
    "naive-sum": SemanticsSpec("naive-sum", NAIVE_SUM),
    "quadratic-energy": SemanticsSpec(
        "quadratic-energy", COMPOSED, SUM, Influence("p-max", p=2, k=1.0)
    ),
    "squared-dfquad": SemanticsSpec(
        "squared-dfquad", COMPOSED, PRODUCT, Influence("p-max", p=1, k=1.0)
    ),
    "euler-top": SemanticsSpec("euler-top", COMPOSED, TOP, Influence("euler-based")),
    "euler": SemanticsSpec("euler", COMPOSED, SUM, Influence("euler-based")),
    "dfquad": SemanticsSpec("dfquad", COMPOSED, PRODUCT, Influence("linear", k=1.0)),
    "stable": SemanticsSpec("stable", QUALITATIVE_STABLE),
}

#: Names accepted by the CLI ``--semantics`` flag (numeric semantics only;
#: the qualitative one is driven through the ``aa`` subcommand).
CANONICAL_NAMES = (
    "naive-sum",
    "quadratic-energy",
    "squared-dfquad",
    "euler-top",
    "euler",
    "dfquad",
)


def resolve_semantics(spec) -> SemanticsSpec:
    """Accept either a :class:`SemanticsSpec` or a canonical name."""
    if isinstance(spec, SemanticsSpec):
        return spec
    try:
        return SEMANTICS[spec]
    except KeyError:
        raise DomainViolation(
            f"unknown semantics {spec!r}; expected one of {', '.join(sorted(SEMANTICS))}"
        ) from None


def aggregate(kind: str, parents: Sequence) -> float:
    """Aggregate parent strengths into one number.

    ``parents`` holds ``(sign, strength)`` pairs with sign -1 for attackers
    and +1 for supporters; strengths must lie in [0, 1].  An empty parent
    list aggregates to 0 under every kind, so that influence functions map
    unattacked arguments back to their initial strength.
    """
    for sign, s in parents:
        if sign not in (-1, 1):
            raise DomainViolation(f"parent sign must be -1 or +1, got {sign!r}")
        if not isinstance(s, float) or not 0.0 <= s <= 1.0:
            raise OutOfRangeStrength(f"parent strength {s!r} outside [0, 1]")
    if kind == SUM:
        return sum(sign * s for sign, s in parents)
    if kind == PRODUCT:
        att = math.prod(1.0 - s for sign, s in parents if sign == -1)
        supp = math.prod(1.0 - s for sign, s in parents if sign == 1)
        return att - supp
    if kind == TOP:
        forward = max([0.0] + [sign * s for sign, s in parents])
        backward = max([0.0] + [-sign * s for sign, s in parents])
        return forward - backward
    raise DomainViolation(f"unknown aggregation {kind!r}")


def _h(x: float, p: int) -> float:
    m = max(0.0, x)
    return m**p / (1.0 + m**p)


def influence(inf: Influence, w: float, s: float) -> float:
    """Blend an aggregate ``s`` into the initial strength ``w``."""
    if inf.family == "linear":
        k = inf.k
        if abs(s) > k:
            raise DomainViolation(f"linear influence needs |s| <= {k}, got {s}")
        return w - (w / k) * max(0.0, -s) + ((1.0 - w) / k) * max(0.0, s)
    if inf.family == "euler-based":
        return 1.0 - (1.0 - w * w) / (1.0 + w * math.exp(s))
    if inf.family == "p-max":
        return w - w * _h(-s / inf.k, inf.p) + (1.0 - w) * _h(s / inf.k, inf.p)
    raise DomainViolation(f"unknown influence family {inf.family!r}")


def _numeric_tau(g: Qbaf, spec: SemanticsSpec) -> dict:
    tau = {}
    for a in g.args:
        w = g.tau[a]
        if w is UNDEFINED:
            raise MissingStrength(f"argument {a!r} has no initial strength")
        if not isinstance(w, float):
            raise OutOfRangeStrength(f"argument {a!r} has non-numeric strength {w!r}")
        if spec.kind == COMPOSED and not 0.0 <= w <= 1.0:
            raise OutOfRangeStrength(
                f"initial strength of {a!r} is {w}, outside [0, 1] required by {spec.name}"
            )
        tau[a] = w
    return tau


def evaluate(g: Qbaf, spec) -> dict:
    """Compute final strengths for all arguments of ``g``.

    Arguments on or downstream of a cycle map to ``None``; all others are
    computed in topological order, leaves keeping their initial strength.
    The result is deterministic: parents are combined in lexicographic
    order.
    """
    spec = resolve_semantics(spec)
    if spec.kind == QUALITATIVE_STABLE:
        raise DomainViolation(
            "the qualitative acceptance semantics is evaluated through qbafx.stable"
        )
    tau = _numeric_tau(g, spec)
    order, tainted = _peel(g)
    sigma = {a: UNDEFINED for a in tainted}
    att_of = {a: [] for a in g.args}
    supp_of = {a: [] for a in g.args}
    for u, v in g.attacks:
        att_of[v].append(u)
    for u, v in g.supports:
        supp_of[v].append(u)
    for x in order:
        attackers = sorted(att_of[x])
        supporters = sorted(supp_of[x])
        if spec.kind == NAIVE_SUM:
            sigma[x] = tau[x] + sum(sigma[y] for y in supporters) - sum(sigma[z] for z in attackers)
        else:
            parents = [(-1, sigma[z]) for z in attackers] + [(1, sigma[y]) for y in supporters]
            sigma[x] = influence(spec.influence, tau[x], aggregate(spec.aggregation, parents))
    return sigma


def compare(domain: StrengthDomain, a, b, eps: float = 0.0) -> str | None:
    """Order two strengths within a domain.

    Returns ``"lt"``, ``"eq"`` or ``"gt"``, or ``None`` when either side is
    undefined.  Numeric comparison treats values within ``eps`` as equal.
    """
    if a is UNDEFINED or b is UNDEFINED:
        return None
    if domain.kind == "chain":
        ra, rb = domain.levels.index(a), domain.levels.index(b)
        return "eq" if ra == rb else ("lt" if ra < rb else "gt")
    if abs(a - b) <= eps:
        return "eq"
    return "lt" if a < b else "gt"

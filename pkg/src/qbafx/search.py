"""Searching for minimal strength-inconsistency explanations.

An explanation is a set of arguments whose changes account for the topics'
strength order breaking between the original graph and its update:

* sufficient (ssi): keeping only these changes and undoing all others still
  breaks the order;
* counterfactual (csi): sufficient, and undoing exactly these changes while
  keeping the rest restores the order;
* necessary (nsi): sufficient, and overlapping every sufficient set, so the
  inconsistency entails a change to at least one member.

When the scenario restricts reversals to acyclic graphs, a candidate whose
reversal is cyclic fails the membership test outright; such rejections are
counted and reported.

The searches enumerate candidate sets level by level, smallest first and
lexicographic within a level, skip supersets of anything already found, and
stop once an entire level consists of such supersets.  Two prunings shrink
the candidate universe: arguments untouched by the update can never occur
in a minimal explanation (the reversal ignores them), and, for semantics
where influence only flows along edges, neither can non-topic arguments
with no directed path to a topic in the combined edge set of both graphs.

A deliberately unoptimised :func:`oracle` recomputes the same families from
their definitions over the whole powerset; the test suite holds the fast
search to it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .change import Scenario, _consistent, final_strengths, reverse
from .errors import TooLarge, UnknownArgument
from .model import diff
from .semantics import QUALITATIVE_STABLE, compare

SSI = "ssi"
CSI = "csi"
NSI = "nsi"
KINDS = (SSI, CSI, NSI)

DEFAULT_ORACLE_CAP = 14

_EMPTY_FAMILY = frozenset([frozenset()])


@dataclass(frozen=True)
class ExplanationSet:
    """A family of explanation sets plus bookkeeping from the search."""

    kind: str
    minimal_only: bool
    sets: frozenset
    scenario: Scenario
    candidates_checked: int = 0
    cyclic_rejections: int = 0

    @property
    def consistent(self) -> bool:
        """A family of exactly the empty set marks a strength-consistent scenario."""
        return self.sets == _EMPTY_FAMILY

    def sorted_sets(self) -> list:
        """Sets as sorted name lists, ordered by cardinality then lexicographically."""
        return sorted((sorted(s) for s in self.sets), key=lambda s: (len(s), s))


@dataclass(frozen=True)
class CandidateSpace:
    """The pruned universe explanation candidates are drawn from."""

    base: frozenset

    def subsets(self) -> Iterator:
        """Non-empty subsets of the base, by cardinality then lexicographic order."""
        names = sorted(self.base)
        for size in range(1, len(names) + 1):
            for combo in combinations(names, size):
                yield frozenset(combo)


class _Search:
    """Per-scenario state shared by the membership checks.

    The original graph is evaluated once; every candidate then costs one
    reversal plus one evaluation (two for counterfactual checks).
    """

    def __init__(self, scenario: Scenario):
        self.scenario = scenario
        self.union = scenario.union_args
        spec = scenario.semantics
        sigma = final_strengths(scenario.before, spec)
        self.order_before = compare(
            spec.domain, sigma[scenario.topic_x], sigma[scenario.topic_y], scenario.epsilon
        )
        self.inconsistent = not self._consistent_with(scenario.after)
        self.checked = 0
        self.cyclic = 0

    def _consistent_with(self, target) -> bool:
        scn = self.scenario
        sigma = final_strengths(target, scn.semantics)
        order_after = compare(
            scn.semantics.domain, sigma[scn.topic_x], sigma[scn.topic_y], scn.epsilon
        )
        return _consistent(self.order_before, order_after, scn.mode)

    def reversal(self, subset) -> object | None:
        """The reversal for ``subset``, or None when it falls outside the class."""
        rev = reverse(self.scenario.before, self.scenario.after, subset)
        if not self.scenario.in_class(rev):
            self.cyclic += 1
            return None
        return rev

    def is_ssi(self, candidate) -> bool:
        self.checked += 1
        rev = self.reversal(self.union - candidate)
        return rev is not None and not self._consistent_with(rev)

    def is_csi(self, candidate) -> bool:
        if not self.is_ssi(candidate):
            return False
        rev = self.reversal(frozenset(candidate))
        return rev is not None and self._consistent_with(rev)

    def member(self, kind: str, candidate) -> bool:
        return self.is_ssi(candidate) if kind == SSI else self.is_csi(candidate)


def _check_subset(scenario: Scenario, subset) -> frozenset:
    subset = frozenset(subset)
    stray = subset - scenario.union_args
    if stray:
        raise UnknownArgument(f"{sorted(stray)[0]!r} occurs in neither graph")
    return subset


def is_ssi(scenario: Scenario, subset: Iterable) -> bool:
    """Is ``subset`` a sufficient explanation for this scenario?

    For a consistent scenario only the empty set qualifies.  Otherwise the
    subset qualifies when the inconsistency persists after reversing every
    other argument, with that reversal inside the scenario's graph class.
    """
    subset = _check_subset(scenario, subset)
    search = _Search(scenario)
    if not search.inconsistent:
        return subset == frozenset()
    return search.is_ssi(subset)


def is_csi(scenario: Scenario, subset: Iterable) -> bool:
    """Is ``subset`` a counterfactual explanation?

    It must be sufficient, and reversing exactly it (keeping all other
    changes) must land inside the graph class and restore consistency.
    """
    subset = _check_subset(scenario, subset)
    search = _Search(scenario)
    if not search.inconsistent:
        return subset == frozenset()
    return search.is_csi(subset)


def candidate_space(scenario: Scenario) -> CandidateSpace:
    """Prune the argument universe down to possible explanation members.

    Arguments whose initial strength and outgoing attacks and supports the
    update left untouched are dropped: every reversal treats them
    identically, so no minimal explanation contains them.  Under semantics
    that propagate influence along edges only, arguments that are not
    topics and cannot reach a topic in the union of both graphs' edge sets
    are dropped as well; the stable acceptance semantics is global, so
    there the reachability cut is not applied.
    """
    scn = scenario
    changed = diff(scn.before, scn.after).changed
    if scn.semantics.kind == QUALITATIVE_STABLE:
        return CandidateSpace(base=frozenset(changed))
    # Ancestors of the topics in the union graph, plus the topics themselves:
    # an argument's own change always bears on its own strength.
    pred = {a: set() for a in scn.union_args}
    for g in (scn.before, scn.after):
        for u, v in g.edges:
            pred[v].add(u)
    keep = {scn.topic_x, scn.topic_y}
    frontier = list(keep)
    while frontier:
        node = frontier.pop()
        for parent in pred[node]:
            if parent not in keep:
                keep.add(parent)
                frontier.append(parent)
    return CandidateSpace(base=frozenset(changed & keep))


def _level_search(base, exclude, member, found):
    """Enumerate subsets of ``base`` smallest-first, collecting minimal members.

    ``exclude`` may veto candidates (their supersets can still qualify);
    supersets of found sets are skipped outright.  A level where everything
    was skipped as a superset ends the search: all larger sets would be
    skipped too.
    """
    names = sorted(base)
    for size in range(1, len(names) + 1):
        saw_candidate = False
        for combo in combinations(names, size):
            candidate = frozenset(combo)
            if any(f <= candidate for f in found):
                continue
            saw_candidate = True
            if exclude is not None and exclude(candidate):
                continue
            if member(candidate):
                found.append(candidate)
        if found and not saw_candidate:
            break
    return found


def minimal_sx_cx(scenario: Scenario, kind: str = SSI) -> ExplanationSet:
    """All minimal sufficient (or counterfactual) explanations."""
    if kind not in (SSI, CSI):
        raise ValueError(f"kind must be {SSI!r} or {CSI!r}, got {kind!r}")
    search = _Search(scenario)
    if not search.inconsistent:
        return ExplanationSet(kind, True, _EMPTY_FAMILY, scenario)
    base = candidate_space(scenario).base
    found = _level_search(base, None, lambda c: search.member(kind, c), [])
    return ExplanationSet(
        kind,
        True,
        frozenset(found),
        scenario,
        candidates_checked=search.checked,
        cyclic_rejections=search.cyclic,
    )


def minimal_nx(scenario: Scenario) -> ExplanationSet:
    """All minimal necessary explanations.

    Candidates come from the same pruned base as the sufficient-set search:
    a set whose sufficiency hinges on reverting an unchanged or unreachable
    argument cannot exist, so necessary sets avoid them too.  A candidate
    disjoint from some minimal sufficient set is excluded without a
    membership check, since a sufficient set disjoint from the candidate is
    exactly what necessity forbids, and every sufficient set contains a
    minimal one.  Necessary sets are not confined to the union of the
    minimal sufficient sets, though: sufficiency is not monotone, so a
    minimal hitting set may need extra members before it becomes sufficient
    itself.
    """
    mssis = minimal_sx_cx(scenario, SSI)
    if mssis.consistent:
        return ExplanationSet(NSI, True, _EMPTY_FAMILY, scenario)
    search = _Search(scenario)
    universe = candidate_space(scenario).base

    def misses_some_mssi(candidate) -> bool:
        return any(not (candidate & s) for s in mssis.sets)

    found = _level_search(universe, misses_some_mssi, search.is_ssi, [])
    return ExplanationSet(
        NSI,
        True,
        frozenset(found),
        scenario,
        candidates_checked=mssis.candidates_checked + search.checked,
        cyclic_rejections=mssis.cyclic_rejections + search.cyclic,
    )


def _minimal_members(family) -> frozenset:
    return frozenset(s for s in family if not any(t < s for t in family))


def oracle(
    scenario: Scenario,
    kind: str,
    minimal_only: bool = True,
    cap: int = DEFAULT_ORACLE_CAP,
) -> ExplanationSet:
    """Definition-literal enumeration over the whole powerset, no pruning.

    Serves as the independent reference the fast search is verified
    against; necessity is checked against *all* sufficient sets here, not
    just the minimal ones.  Refuses scenarios with more than ``cap``
    arguments overall.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown explanation kind {kind!r}")
    names = sorted(scenario.union_args)
    if len(names) > cap:
        raise TooLarge(f"{len(names)} arguments exceed the oracle cap of {cap}")
    search = _Search(scenario)
    if not search.inconsistent:
        return ExplanationSet(kind, minimal_only, _EMPTY_FAMILY, scenario)
    subsets = [
        frozenset(combo)
        for size in range(0, len(names) + 1)
        for combo in combinations(names, size)
    ]
    ssi_family = [s for s in subsets if search.is_ssi(s)]
    if kind == SSI:
        family = ssi_family
    elif kind == CSI:
        family = []
        for s in ssi_family:
            rev = search.reversal(s)
            if rev is not None and search._consistent_with(rev):
                family.append(s)
    else:
        family = [
            n for n in ssi_family if all(n & s for s in ssi_family)
        ]
        minimal_only = True  # necessity is minimal by definition
    sets = _minimal_members(family) if minimal_only else frozenset(family)
    return ExplanationSet(
        kind,
        minimal_only,
        sets,
        scenario,
        candidates_checked=search.checked,
        cyclic_rejections=search.cyclic,
    )


def explain(scenario: Scenario, kind: str, use_oracle: bool = False) -> ExplanationSet:
    """Front door: the minimal family of the requested kind."""
    if kind not in KINDS:
        raise ValueError(f"unknown explanation kind {kind!r}")
    if use_oracle:
        return oracle(scenario, kind)
    if kind == NSI:
        return minimal_nx(scenario)
    return minimal_sx_cx(scenario, kind)

"""Immutable quantitative bipolar argumentation frameworks.

A QBAF is a finite set of named arguments, each with an initial strength,
plus two disjoint binary relations over the arguments: attacks and
supports.  Values are immutable after validation, so they can be shared
freely between threads and reused across derived graphs.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import (
    AttackSupportOverlap,
    CyclicQbaf,
    DanglingEdge,
    DuplicateArg,
    SchemaError,
    UnknownArgument,
)

ArgId = str
# Initial/final strengths: a float for numeric domains, a label such as
# "n"/"c"/"s" for qualitative domains, or None when unassigned/undefined.
Strength = float | str | None
Edge = tuple[str, str]


@dataclass(frozen=True)
class Qbaf:
    """A validated QBAF. Construct via :func:`validate` or :func:`qbaf`."""

    args: frozenset
    tau: dict
    attacks: frozenset
    supports: frozenset

    def initial_strength(self, arg: str):
        if arg not in self.args:
            raise UnknownArgument(f"unknown argument {arg!r}")
        return self.tau[arg]

    def attackers_of(self, arg: str) -> set:
        return {u for (u, v) in self.attacks if v == arg}

    def supporters_of(self, arg: str) -> set:
        return {u for (u, v) in self.supports if v == arg}

    def outgoing_attacks(self, arg: str) -> frozenset:
        return frozenset((u, v) for (u, v) in self.attacks if u == arg)

    def outgoing_supports(self, arg: str) -> frozenset:
        return frozenset((u, v) for (u, v) in self.supports if u == arg)

    @property
    def edges(self) -> frozenset:
        """All edges of the underlying directed graph, attacks and supports alike."""
        return self.attacks | self.supports

    def __repr__(self) -> str:  # keep reprs short in test output
        return (
            f"Qbaf(args={sorted(self.args)}, attacks={sorted(self.attacks)}, "
            f"supports={sorted(self.supports)})"
        )


@dataclass(frozen=True)
class QbafDiff:
    """Partition of the arguments of two QBAFs by what an update did to them.

    An argument present in both graphs is ``unchanged`` when its initial
    strength and its sets of outgoing attacks and outgoing supports are
    identical in both; otherwise it is ``modified``.  Arguments occurring in
    only one graph are ``added`` or ``removed``.
    """

    added: frozenset
    removed: frozenset
    modified: frozenset
    unchanged: frozenset

    @property
    def changed(self) -> frozenset:
        return self.added | self.removed | self.modified


def _check_name(name) -> str:
    if not isinstance(name, str) or not name:
        raise SchemaError(f"argument names must be non-empty strings, got {name!r}")
    return name


def validate(arguments, attacks: Iterable = (), supports: Iterable = ()) -> Qbaf:
    """Check a raw QBAF description and build an immutable :class:`Qbaf`.

    ``arguments`` maps argument names to initial strengths; it may also be
    an iterable of ``(name, strength)`` pairs, in which case duplicate names
    are rejected.  A strength of ``None`` means "unassigned", which is only
    meaningful for graphs evaluated by acceptance-based semantics.
    """
    if isinstance(arguments, Mapping):
        pairs = list(arguments.items())
    else:
        pairs = list(arguments)
    tau = {}
    for name, strength in pairs:
        _check_name(name)
        if name in tau:
            raise DuplicateArg(f"argument {name!r} declared twice")
        if isinstance(strength, bool) or not isinstance(strength, (int, float, str, type(None))):
            raise SchemaError(f"bad strength for {name!r}: {strength!r}")
        tau[name] = float(strength) if isinstance(strength, (int, float)) else strength
    args = frozenset(tau)

    def edge_set(raw, label):
        out = set()
        for pair in raw:
            u, v = pair
            for end in (u, v):
                if end not in args:
                    raise DanglingEdge(f"{label} ({u!r}, {v!r}) mentions unknown argument {end!r}")
            out.add((u, v))
        return frozenset(out)

    att = edge_set(attacks, "attack")
    supp = edge_set(supports, "support")
    overlap = att & supp
    if overlap:
        u, v = sorted(overlap)[0]
        raise AttackSupportOverlap(f"({u!r}, {v!r}) is both an attack and a support")
    return Qbaf(args=args, tau=tau, attacks=att, supports=supp)


def qbaf(arguments, attacks: Iterable = (), supports: Iterable = ()) -> Qbaf:
    """Shorthand for :func:`validate`."""
    return validate(arguments, attacks, supports)


def restrict(g: Qbaf, keep) -> Qbaf:
    """Restrict ``g`` to the arguments in ``keep``; unknown names are ignored."""
    kept = g.args & frozenset(keep)
    return Qbaf(
        args=kept,
        tau={a: g.tau[a] for a in kept},
        attacks=frozenset((u, v) for (u, v) in g.attacks if u in kept and v in kept),
        supports=frozenset((u, v) for (u, v) in g.supports if u in kept and v in kept),
    )


def _successors(g: Qbaf) -> dict:
    succ = {a: [] for a in g.args}
    for u, v in g.edges:
        succ[u].append(v)
    return succ


def reachable(g: Qbaf, frm: str, to: str) -> bool:
    """True iff a directed path of at least one edge leads from ``frm`` to ``to``.

    Attacks and supports count alike.  There are no length-zero paths, so an
    argument reaches itself only through an actual cycle.
    """
    for end in (frm, to):
        if end not in g.args:
            raise UnknownArgument(f"unknown argument {end!r}")
    succ = _successors(g)
    seen = set()
    stack = list(succ[frm])
    while stack:
        node = stack.pop()
        if node == to:
            return True
        if node in seen:
            continue
        seen.add(node)
        stack.extend(succ[node])
    return False


def _peel(g: Qbaf):
    """Kahn-style peeling of the acyclic part.

    Returns ``(order, tainted)`` where ``order`` lists the arguments whose
    ancestors are all cycle-free, parents before children and lexicographic
    among ties, and ``tainted`` is the set of arguments lying on a cycle or
    downstream of one.
    """
    indeg = {a: 0 for a in g.args}
    succ = {a: [] for a in g.args}
    for u, v in g.edges:
        indeg[v] += 1
        succ[u].append(v)
    ready = [a for a in g.args if indeg[a] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        node = heapq.heappop(ready)
        order.append(node)
        for nxt in succ[node]:
            indeg[nxt] -= 1
            if indeg[nxt] == 0:
                heapq.heappush(ready, nxt)
    tainted = g.args - set(order)
    return order, tainted


def is_acyclic(g: Qbaf) -> bool:
    """True iff no argument is reachable from itself."""
    _, tainted = _peel(g)
    return not tainted


def topological_order(g: Qbaf) -> list:
    """List every argument after all of its attackers and supporters."""
    order, tainted = _peel(g)
    if tainted:
        raise CyclicQbaf(f"graph has a cycle through {sorted(tainted)}")
    return order


def diff(g: Qbaf, g2: Qbaf) -> QbafDiff:
    """Classify every argument of either graph by what changed from ``g`` to ``g2``."""
    added = g2.args - g.args
    removed = g.args - g2.args
    modified = set()
    unchanged = set()
    for a in g.args & g2.args:
        same = (
            g.tau[a] == g2.tau[a]
            and g.outgoing_attacks(a) == g2.outgoing_attacks(a)
            and g.outgoing_supports(a) == g2.outgoing_supports(a)
        )
        (unchanged if same else modified).add(a)
    return QbafDiff(
        added=frozenset(added),
        removed=frozenset(removed),
        modified=frozenset(modified),
        unchanged=frozenset(unchanged),
    )

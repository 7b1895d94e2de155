"""Stable semantics for attack-only frameworks and the acceptance chain.

An abstract argumentation framework is a directed attack graph without
weights.  A set of arguments is a stable extension when it is conflict-free
and attacks every argument outside itself.  Acceptance statuses are read
off the family of stable extensions: ``s`` (sceptical) for members of every
extension, ``c`` (credulous) for members of some but not all, ``n`` for the
rest.  With no stable extension at all, every argument is ``n``: nothing is
accepted by a framework that admits no coherent labelling.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import DomainViolation, TooLarge
from .model import Qbaf, validate

#: Exhaustive extension enumeration is exponential; refuse beyond this size.
DEFAULT_SIZE_CAP = 20


@dataclass(frozen=True)
class Af:
    """An attack-only framework over named arguments."""

    arguments: frozenset
    attacks: frozenset


def af(arguments: Iterable, attacks: Iterable = ()) -> Af:
    """Validate and build an :class:`Af` (endpoints must be declared)."""
    g = validate({a: None for a in arguments}, attacks=attacks)
    return Af(arguments=g.args, attacks=g.attacks)


def stable_extensions(framework: Af, size_cap: int = DEFAULT_SIZE_CAP) -> list:
    """All stable extensions, as a sorted list of frozensets.

    The search enumerates every subset, so it is limited to ``size_cap``
    arguments.
    """
    names = sorted(framework.arguments)
    n = len(names)
    if n > size_cap:
        raise TooLarge(f"{n} arguments exceed the cap of {size_cap} for extension enumeration")
    index = {a: i for i, a in enumerate(names)}
    attacked_by = [0] * n  # attacked_by[i]: bitmask of arguments that argument i attacks
    for u, v in framework.attacks:
        attacked_by[index[u]] |= 1 << index[v]
    full = (1 << n) - 1
    found = []
    for mask in range(1 << n):
        hit = 0
        for i in range(n):
            if mask >> i & 1:
                hit |= attacked_by[i]
        if hit & mask:
            continue  # not conflict-free
        if hit | mask == full:
            found.append(frozenset(names[i] for i in range(n) if mask >> i & 1))
    found.sort(key=lambda s: (len(s), sorted(s)))
    return found


def af_acceptance(framework: Af, size_cap: int = DEFAULT_SIZE_CAP) -> dict:
    """Acceptance status (``n`` / ``c`` / ``s``) for every argument."""
    exts = stable_extensions(framework, size_cap)
    if not exts:
        return {a: "n" for a in framework.arguments}
    everywhere = frozenset.intersection(*exts)
    somewhere = frozenset.union(*exts)
    status = {}
    for a in framework.arguments:
        if a in everywhere:
            status[a] = "s"
        elif a in somewhere:
            status[a] = "c"
        else:
            status[a] = "n"
    return status


def acceptance_strengths(g: Qbaf, size_cap: int = DEFAULT_SIZE_CAP) -> dict:
    """Final strengths of a support-free QBAF under the acceptance semantics.

    Initial strengths are ignored; the attack graph alone determines the
    statuses, which are total (never undefined).
    """
    if g.supports:
        raise DomainViolation("the acceptance semantics is defined for attack-only graphs")
    return af_acceptance(Af(arguments=g.args, attacks=g.attacks), size_cap)

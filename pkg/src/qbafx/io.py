"""JSON documents for graphs and scenarios.

A QBAF document looks like::

    {"arguments": [{"id": "a", "strength": 1.0}],
     "attacks": [["a", "c"]],
     "supports": [["a", "b"]]}

Numeric strengths are JSON numbers; qualitative ones are the strings "n",
"c" or "s"; an argument without a strength simply omits the key (only valid
for attack-only frameworks fed to the acceptance semantics).  A scenario
document wraps two graph documents::

    {"before": {...}, "after": {...}, "topics": ["b", "c"],
     "semantics": "naive-sum", "class": "acyclic", "mode": "strict",
     "epsilon": 1e-9}

Parsing and serialising round-trip losslessly up to key order.
"""

from __future__ import annotations

import json
from typing import Mapping

from .change import ACYCLIC, ALL, DEFAULT_EPSILON, STRICT, WEAK, Scenario
from .errors import DanglingEdge, DuplicateArg, MissingStrength, QbafxError, SchemaError
from .model import Qbaf, validate
from .semantics import SEMANTICS, resolve_semantics
from .stable import Af


def _require(doc, key, path, kind=None):
    if not isinstance(doc, Mapping):
        raise SchemaError(f"{path or 'document'}: expected an object")
    if key not in doc:
        raise SchemaError(f"{path}{key}: missing")
    value = doc[key]
    if kind is not None and not isinstance(value, kind):
        raise SchemaError(f"{path}{key}: wrong type {type(value).__name__}")
    return value


def parse_qbaf(doc, require_strengths: bool = True, path: str = "") -> Qbaf:
    """Build a validated QBAF from a document, pointing errors at their source."""
    raw_args = _require(doc, "arguments", path, list)
    pairs = []
    ids = set()
    for i, entry in enumerate(raw_args):
        where = f"{path}arguments[{i}]"
        if not isinstance(entry, Mapping) or "id" not in entry:
            raise SchemaError(f"{where}: expected an object with an 'id'")
        name = entry["id"]
        if not isinstance(name, str) or not name:
            raise SchemaError(f"{where}.id: must be a non-empty string")
        if name in ids:
            raise DuplicateArg(f"{where}.id: duplicate argument {name!r}")
        ids.add(name)
        if "strength" in entry:
            strength = entry["strength"]
            if isinstance(strength, bool) or not isinstance(strength, (int, float, str)):
                raise SchemaError(f"{where}.strength: expected a number or a label")
        elif require_strengths:
            raise MissingStrength(f"{where}: argument {name!r} has no strength")
        else:
            strength = None
        pairs.append((name, strength))
    edges = {}
    for relation in ("attacks", "supports"):
        raw = doc.get(relation, [])
        if not isinstance(raw, list):
            raise SchemaError(f"{path}{relation}: expected a list of pairs")
        edges[relation] = []
        for i, pair in enumerate(raw):
            where = f"{path}{relation}[{i}]"
            if not isinstance(pair, list) or len(pair) != 2:
                raise SchemaError(f"{where}: expected a pair [source, target]")
            u, v = pair
            for end in (u, v):
                if end not in ids:
                    raise DanglingEdge(f"{where}: unknown argument {end!r}")
            edges[relation].append((u, v))
    return validate(pairs, attacks=edges["attacks"], supports=edges["supports"])


def serialize_qbaf(g: Qbaf) -> dict:
    """The document form of a QBAF, with deterministic ordering."""
    arguments = []
    for name in sorted(g.args):
        entry = {"id": name}
        if g.tau[name] is not None:
            entry["strength"] = g.tau[name]
        arguments.append(entry)
    return {
        "arguments": arguments,
        "attacks": [list(e) for e in sorted(g.attacks)],
        "supports": [list(e) for e in sorted(g.supports)],
    }


def parse_af(doc, path: str = "") -> Af:
    """An attack-only framework: the QBAF schema minus strengths and supports."""
    g = parse_qbaf(doc, require_strengths=False, path=path)
    if g.supports:
        raise SchemaError(f"{path}supports: must be empty for an attack-only framework")
    return Af(arguments=g.args, attacks=g.attacks)


_CLASSES = {"acyclic": ACYCLIC, "all": ALL}
_MODES = {"strict": STRICT, "weak": WEAK}


def parse_scenario(
    doc,
    semantics: str | None = None,
    qbaf_class: str | None = None,
    mode: str | None = None,
    epsilon: float | None = None,
    require_strengths: bool = True,
) -> Scenario:
    """Build a scenario from a document; keyword arguments override its fields."""
    before = parse_qbaf(_require(doc, "before", "", Mapping), require_strengths, "before.")
    after = parse_qbaf(_require(doc, "after", "", Mapping), require_strengths, "after.")
    topics = _require(doc, "topics", "", list)
    if len(topics) != 2 or not all(isinstance(t, str) for t in topics):
        raise SchemaError("topics: expected a pair of argument names")
    semantics = semantics if semantics is not None else doc.get("semantics")
    if semantics is None:
        raise SchemaError("semantics: missing")
    if semantics not in SEMANTICS:
        raise SchemaError(f"semantics: unknown name {semantics!r}")
    cls = qbaf_class if qbaf_class is not None else doc.get("class", "acyclic")
    if cls not in _CLASSES:
        raise SchemaError(f"class: expected 'acyclic' or 'all', got {cls!r}")
    chosen_mode = mode if mode is not None else doc.get("mode", "strict")
    if chosen_mode not in _MODES:
        raise SchemaError(f"mode: expected 'strict' or 'weak', got {chosen_mode!r}")
    eps = epsilon if epsilon is not None else doc.get("epsilon", DEFAULT_EPSILON)
    if isinstance(eps, bool) or not isinstance(eps, (int, float)) or eps < 0:
        raise SchemaError("epsilon: expected a non-negative number")
    if semantics == "stable" and (before.supports or after.supports):
        raise SchemaError("supports: must be empty under the acceptance semantics")
    return Scenario(
        before=before,
        after=after,
        topic_x=topics[0],
        topic_y=topics[1],
        semantics=resolve_semantics(semantics),
        qbaf_class=_CLASSES[cls],
        mode=_MODES[chosen_mode],
        epsilon=float(eps),
    )


def serialize_scenario(scenario: Scenario) -> dict:
    return {
        "before": serialize_qbaf(scenario.before),
        "after": serialize_qbaf(scenario.after),
        "topics": [scenario.topic_x, scenario.topic_y],
        "semantics": scenario.semantics.name,
        "class": scenario.qbaf_class,
        "mode": scenario.mode,
        "epsilon": scenario.epsilon,
    }


def load_json(path: str):
    """Read a JSON file, mapping syntax problems to :class:`SchemaError`."""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except FileNotFoundError:
        raise QbafxError(f"no such file: {path}") from None
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from None


def load_qbaf(path: str) -> Qbaf:
    return parse_qbaf(load_json(path))


def load_scenario(path: str, **overrides) -> Scenario:
    return parse_scenario(load_json(path), **overrides)


def load_aa_scenario(path: str, mode: str | None = None) -> Scenario:
    """An acceptance-change scenario: attack-only graphs, unrestricted class."""
    doc = load_json(path)
    return parse_scenario(
        doc,
        semantics="stable",
        qbaf_class=doc.get("class", "all"),
        mode=mode,
        require_strengths=False,
    )

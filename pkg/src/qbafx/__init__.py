"""Gradual semantics over QBAFs and explanations for strength-order changes.

The package models quantitative bipolar argumentation frameworks, evaluates
gradual semantics over them, and, given an original and an updated graph
plus two topic arguments, finds the minimal sets of changed arguments that
are sufficient, counterfactual or necessary for the topics' strength order
breaking between the two.
"""

from .aa import Af, aa_explain, aa_scenario, af, af_acceptance, as_qbaf, stable_extensions
from .bench import (
    BenchConfig,
    BenchResult,
    GenSpec,
    UpdateSpec,
    random_qbaf,
    random_scenario,
    random_update,
    run_benchmark,
)
from .change import (
    Scenario,
    comparable,
    final_strengths,
    reverse,
    strength_consistent,
    with_dummy_topic,
)
from .errors import (
    AttackSupportOverlap,
    CyclicQbaf,
    DanglingEdge,
    DomainViolation,
    DuplicateArg,
    IdCollision,
    MissingStrength,
    OutOfRangeStrength,
    QbafxError,
    SchemaError,
    TooLarge,
    UnknownArgument,
)
from .io import (
    load_qbaf,
    load_scenario,
    parse_af,
    parse_qbaf,
    parse_scenario,
    serialize_qbaf,
    serialize_scenario,
)
from .model import Qbaf, QbafDiff, diff, is_acyclic, qbaf, reachable, restrict, topological_order, validate
from .search import (
    CSI,
    NSI,
    SSI,
    CandidateSpace,
    ExplanationSet,
    candidate_space,
    explain,
    is_csi,
    is_ssi,
    minimal_nx,
    minimal_sx_cx,
    oracle,
)
from .semantics import (
    SEMANTICS,
    Influence,
    SemanticsSpec,
    StrengthDomain,
    aggregate,
    evaluate,
    influence,
    resolve_semantics,
)

__version__ = "0.1.0"

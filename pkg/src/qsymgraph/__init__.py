"""Quantum symmetries of finite simple graphs.

A graph has quantum symmetries when the defining algebra of its quantum
automorphism group is noncommutative.  This package decides the question
by combining a disjoint-automorphism certificate, walk-count zero
patterns, and a commutativity check via two-sided Groebner bases in the
free algebra.
"""

from .automorphisms import (
    AutGroup,
    are_disjoint,
    automorphism_group,
    cycle_notation,
    find_disjoint_pair,
    group_order,
)
from .classify import (
    CheckResult,
    CheckStatus,
    ClassifyConfig,
    Presentation,
    Verdict,
    VerdictKind,
    build_relations,
    classify,
    commutators,
    qsym_check,
)
from .freealg import DEGLEX, Generators, Poly, Word, WordOrder, word, word_cmp
from .fulton import ZeroPattern, is_identity_forced, render_pattern, zero_pattern
from .graphs import (
    Graph,
    GraphError,
    canonical_form,
    enumerate_connected,
    is_connected,
    matrix_power,
    parse_adjacency,
    parse_graph6,
    permute,
    to_graph6,
)
from .groebner import (
    EngineLimits,
    GBasis,
    Membership,
    Obstruction,
    Reducer,
    ResourceCapError,
    complete,
    find_obstructions,
    ideal_member,
    membership_certificate,
    normal_form,
)
from .pipeline import BatchReport, GraphRecord, OrderRow, RunConfig, render_table, run_batch

__all__ = [name for name in dir() if not name.startswith("_")]

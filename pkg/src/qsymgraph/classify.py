"""Quantum-symmetry classification of a graph.

The decision combines two one-sided criteria:

* a pair of non-trivial disjoint automorphisms proves the graph HAS
  quantum symmetries;
* commutativity of the universal algebra presented by the magic-unitary
  relations (orthogonality within rows and columns, row and column sums
  equal to 1, and vanishing products forced by adjacency mismatches)
  proves it has NONE.

Walk-count zero patterns shrink the presentation before the Groebner
engine runs: forced generators are deleted from the presentation by
default, or kept and pinned to zero by explicit relations in the
"relations" mode, which exists so the two treatments can be checked
against each other.

If neither criterion fires the graph stays Undecided.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .automorphisms import (
    Permutation,
    are_disjoint,
    automorphism_group,
    find_disjoint_pair,
    is_automorphism,
)
from .freealg import DEGLEX, Generators, Poly
from .fulton import ZeroPattern, zero_pattern
from .graphs import Graph
from .groebner import EngineLimits, Reducer, complete


class DegenerateAlgebraError(ValueError):
    """A row or column lost all generators, so the algebra collapses to zero."""


class CriteriaConflictError(RuntimeError):
    """Both positive criteria fired on the same graph; this must never happen."""


@dataclass(frozen=True)
class Presentation:
    """Relation ideal of the universal algebra over the surviving generators."""

    n: int
    gens: Generators
    relations: tuple[Poly, ...]
    graph: Graph
    fulton_mode: str = "delete"


class CheckStatus(Enum):
    COMMUTATIVE = "commutative"
    NOT_SHOWN_COMMUTATIVE = "not_shown_commutative"
    TRUNCATED = "truncated"


@dataclass(frozen=True)
class CheckResult:
    """Outcome of the commutativity check, with machine-checkable context."""

    status: CheckStatus
    commutator_count: int
    degree_bound: int | None = None
    basis_size: int | None = None
    witness: Poly | None = None
    vacuous: bool = False


class VerdictKind(Enum):
    QUANTUM_SYMMETRIC = "QuantumSymmetric"
    NOT_QUANTUM_SYMMETRIC = "NotQuantumSymmetric"
    UNDECIDED = "Undecided"


@dataclass(frozen=True)
class ClassifyConfig:
    fulton_max_power: int | None = None  # None: vertex count squared
    fulton_mode: str = "delete"  # or "relations"
    gb_start_bound: int = 4
    gb_bound_step: int = 2
    gb_degree_cap: int = 12
    limits: EngineLimits = field(default_factory=EngineLimits)
    cross_check: bool = False


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    aut_order: int
    disjoint_pair: tuple[Permutation, Permutation] | None = None
    algebra: CheckResult | None = None

    @property
    def qsym_output(self) -> int | None:
        """1 if the algebra was shown commutative, 0 if shown not, else None."""
        if self.algebra is None:
            return None
        if self.algebra.status is CheckStatus.COMMUTATIVE:
            return 1
        if self.algebra.status is CheckStatus.NOT_SHOWN_COMMUTATIVE:
            return 0
        return None


def build_relations(g: Graph, pattern: ZeroPattern, mode: str = "delete") -> Presentation:
    """Emit the defining relations over the generators the pattern leaves alive.

    In "delete" mode forced generators are removed from the presentation
    (products containing them vanish, sums simply omit them).  In
    "relations" mode all n^2 generators stay and each forced one
    contributes an explicit vanishing relation.  The relation list is
    deduplicated structurally.
    """
    n = g.n
    if mode == "delete":
        positions = pattern.alive()
    elif mode == "relations":
        positions = [(i, j) for i in range(n) for j in range(n)]
    else:
        raise ValueError(f"unknown fulton mode {mode!r}")
    alive = set(positions)
    gens = Generators.from_alive(positions)
    flat = {pos: gens.index(pos[0] + 1, pos[1] + 1) for pos in positions}

    relations: list[Poly] = []
    seen: set = set()

    def add(p: Poly):
        k = p.key()
        if k not in seen:
            seen.add(k)
            relations.append(p)

    # orthogonality within each row and each column, diagonal cases idempotent
    for i in range(n):
        for j in range(n):
            if (i, j) not in alive:
                continue
            a = flat[(i, j)]
            ga = Poly.gen(a)
            for k in range(n):
                if (i, k) in alive:
                    b = flat[(i, k)]
                    if j == k:
                        add(ga * ga - ga)
                    else:
                        add(ga * Poly.gen(b))
                if (k, j) in alive:
                    b = flat[(k, j)]
                    if i == k:
                        add(ga * ga - ga)
                    else:
                        add(ga * Poly.gen(b))

    # each row and column sums to 1
    for i in range(n):
        row = [flat[(i, k)] for k in range(n) if (i, k) in alive]
        if not row:
            raise DegenerateAlgebraError(f"row {i + 1} has no generators left")
        acc = Poly.zero()
        for b in row:
            acc = acc + Poly.gen(b)
        add(acc - 1)
    for j in range(n):
        col = [flat[(k, j)] for k in range(n) if (k, j) in alive]
        if not col:
            raise DegenerateAlgebraError(f"column {j + 1} has no generators left")
        acc = Poly.zero()
        for b in col:
            acc = acc + Poly.gen(b)
        add(acc - 1)

    # products vanish whenever adjacency disagrees between source and image
    adj = g.adj
    for i in range(n):
        for j in range(n):
            eij = adj[i][j]
            for k in range(n):
                if (i, k) not in alive:
                    continue
                a = flat[(i, k)]
                for l in range(n):
                    if adj[k][l] != eij:
                        if (j, l) in alive:
                            add(Poly.gen(a) * Poly.gen(flat[(j, l)]))

    if mode == "relations":
        for i in range(n):
            for j in range(n):
                if pattern.is_forced(i, j):
                    add(Poly.gen(flat[(i, j)]))

    return Presentation(n, gens, tuple(relations), g, mode)


def commutators(p: Presentation) -> list[Poly]:
    """All pairwise commutators of distinct generators, deterministic order.

    When only diagonal generators survive, each one is pinned to 1 by its
    row sum, so the algebra is trivially commutative and the list is empty.
    """
    if all(r == c for r, c in p.gens.labels):
        return []
    m = len(p.gens)
    out = []
    for a in range(m):
        for b in range(a + 1, m):
            out.append(Poly({bytes((a, b)): 1, bytes((b, a)): -1}, _trusted=True))
    return out


def qsym_check(p: Presentation, cfg: ClassifyConfig = ClassifyConfig()) -> CheckResult:
    """Decide commutativity of the presented algebra by iterative deepening.

    Zero normal forms are conclusive at any truncation degree, so the
    bound is raised only while some commutator stays unresolved under an
    incomplete basis.
    """
    coms = commutators(p)
    if not coms:
        return CheckResult(CheckStatus.COMMUTATIVE, 0, vacuous=True)
    rel_degree = max(r.degree() for r in p.relations)
    bound = max(min(cfg.gb_start_bound, cfg.gb_degree_cap), rel_degree)
    last_bound = bound
    last_size = None
    while bound <= cfg.gb_degree_cap:
        basis = complete(p.relations, DEGLEX, degree_bound=bound, limits=cfg.limits)
        reducer = Reducer(basis.polys, DEGLEX)
        witness = None
        unresolved = False
        for c in coms:
            if reducer.normal_form(c).is_zero():
                continue
            if basis.complete:
                witness = c
            unresolved = True
            break
        if not unresolved:
            return CheckResult(
                CheckStatus.COMMUTATIVE, len(coms),
                degree_bound=bound, basis_size=basis.size)
        if witness is not None:
            return CheckResult(
                CheckStatus.NOT_SHOWN_COMMUTATIVE, len(coms),
                degree_bound=bound, basis_size=basis.size, witness=witness)
        last_bound, last_size = bound, basis.size
        bound += cfg.gb_bound_step
    return CheckResult(
        CheckStatus.TRUNCATED, len(coms),
        degree_bound=last_bound, basis_size=last_size)


def classify(g: Graph, cfg: ClassifyConfig = ClassifyConfig()) -> Verdict:
    """Full per-graph decision.

    The cheap automorphism-pair certificate is tried first; the algebra
    check runs only when no pair exists, unless ``cross_check`` forces
    both channels and asserts they never both fire.
    """
    group = automorphism_group(g)
    pair = find_disjoint_pair(group)
    algebra = None
    if pair is None or cfg.cross_check:
        pattern = zero_pattern(g, cfg.fulton_max_power)
        presentation = build_relations(g, pattern, cfg.fulton_mode)
        algebra = qsym_check(presentation, cfg)
    if pair is not None:
        s, t = pair
        if not (are_disjoint(s, t) and is_automorphism(g, s) and is_automorphism(g, t)):
            raise AssertionError("disjoint pair evidence failed validation")
        if algebra is not None and algebra.status is CheckStatus.COMMUTATIVE:
            raise CriteriaConflictError(
                "disjoint automorphism pair coexists with a commutative algebra")
        return Verdict(VerdictKind.QUANTUM_SYMMETRIC, group.order,
                       disjoint_pair=pair, algebra=algebra)
    if algebra.status is CheckStatus.COMMUTATIVE:
        return Verdict(VerdictKind.NOT_QUANTUM_SYMMETRIC, group.order, algebra=algebra)
    return Verdict(VerdictKind.UNDECIDED, group.order, algebra=algebra)

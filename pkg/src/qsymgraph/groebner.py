"""Two-sided Groebner bases in the free algebra, degree truncated.

Buchberger-style completion over overlap ambiguities of leading words.
The basis is kept monic and interreduced throughout: no leading word
contains another as a subword, and every tail is in normal form.

Reductions are sound at any truncation degree (a zero normal form always
certifies ideal membership); a nonzero normal form certifies
non-membership only when completion terminated with no deferred
ambiguities, i.e. the basis is a genuine Groebner basis.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from enum import Enum

from .freealg import DEGLEX, EMPTY_WORD, Generators, Poly, Word, WordOrder, exact_div


class ResourceCapError(RuntimeError):
    """A configured engine cap was exceeded; distinct from degree truncation."""


@dataclass(frozen=True)
class EngineLimits:
    """Hard caps that abort completion loudly instead of silently truncating."""

    max_basis: int = 20000
    max_terms: int = 2_000_000


class Membership(Enum):
    MEMBER = "member"
    NON_MEMBER = "non_member"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Obstruction:
    """Ambiguity word in which two leading words overlap.

    ``word[left_shift:]`` starts with the left leading word and
    ``word[right_shift:]`` with the right one; for proper overlaps
    ``left_shift`` is 0, for containments the whole left lead is the word.
    """

    left: int
    right: int
    left_shift: int
    right_shift: int
    word: Word

    @property
    def degree(self) -> int:
        return len(self.word)


@dataclass
class GBasis:
    polys: list[Poly]
    order: WordOrder
    degree_bound: int
    complete: bool

    @property
    def size(self) -> int:
        return len(self.polys)


class Reducer:
    """Two-sided rewriting by a fixed list of monic polynomials."""

    def __init__(self, polys, order: WordOrder = DEGLEX):
        self.order = order
        self.leads: list[Word] = []
        self.tails: list[dict] = []
        self.index: dict[int, list[int]] = {}
        self.unit_rule: int | None = None
        for rid, p in enumerate(polys):
            lw, lc = p.leading_term(order)
            if lc != 1:
                raise ValueError(f"basis element {rid} is not monic")
            tail = {w: c for w, c in p.terms.items() if w != lw}
            self.leads.append(lw)
            self.tails.append(tail)
            if lw == EMPTY_WORD:
                if self.unit_rule is None:
                    self.unit_rule = rid
            else:
                self.index.setdefault(lw[0], []).append(rid)

    def find(self, w: Word):
        """Leftmost reducible position, lowest rule id; None if irreducible."""
        if self.unit_rule is not None:
            return self.unit_rule, 0, EMPTY_WORD
        for pos in range(len(w)):
            bucket = self.index.get(w[pos])
            if not bucket:
                continue
            for rid in bucket:
                lead = self.leads[rid]
                if w.startswith(lead, pos):
                    return rid, pos, lead
        return None

    def find_all(self, w: Word):
        hits = []
        if self.unit_rule is not None:
            hits.append((self.unit_rule, 0, EMPTY_WORD))
        for pos in range(len(w)):
            bucket = self.index.get(w[pos])
            if not bucket:
                continue
            for rid in bucket:
                lead = self.leads[rid]
                if w.startswith(lead, pos):
                    hits.append((rid, pos, lead))
        return hits

    def normal_form(self, f: Poly, *, trace: list | None = None, chooser=None) -> Poly:
        out = _reduce_terms(f.terms, self, trace=trace, chooser=chooser)
        return Poly(out, _trusted=True)


def _inv(w: Word) -> bytes:
    return bytes(255 - x for x in w)


def _reduce_terms(terms: dict, rules, *, trace=None, chooser=None) -> dict:
    """Worklist normal form; each rewrite strictly decreases in the order.

    Terms are processed largest first.  Rewriting a word produces only
    strictly smaller words, so finished words are never revisited.
    """
    work = dict(terms)
    heap = [(-len(w), _inv(w), w) for w in work]
    heapq.heapify(heap)
    out: dict = {}
    while heap:
        _, _, w = heapq.heappop(heap)
        c = work.pop(w, 0)
        if not c:
            continue
        if chooser is None:
            hit = rules.find(w)
        else:
            hits = rules.find_all(w)
            hit = chooser(hits) if hits else None
        if hit is None:
            out[w] = c
            continue
        rid, pos, lead = hit
        if trace is not None:
            trace.append((c, w[:pos], rid, w[pos + len(lead):]))
        a = w[:pos]
        b = w[pos + len(lead):]
        for tw, tc in rules.tails[rid].items():
            nw = a + tw + b
            prev = work.get(nw)
            acc = (prev if prev is not None else 0) - c * tc
            if acc:
                work[nw] = acc
                if prev is None:
                    heapq.heappush(heap, (-len(nw), _inv(nw), nw))
            else:
                work.pop(nw, None)
    return out


def normal_form(f: Poly, basis, order: WordOrder = DEGLEX, *,
                trace: list | None = None, chooser=None) -> Poly:
    """Fully reduce ``f`` by a list of monic polynomials (or a GBasis).

    With ``trace`` a list, appends ``(coeff, left, rule_index, right)``
    rewrite records such that f - normal_form(f) equals the sum of
    coeff * left * basis[rule_index] * right.
    """
    polys = basis.polys if isinstance(basis, GBasis) else list(basis)
    rules = Reducer(polys, order)
    return rules.normal_form(f, trace=trace, chooser=chooser)


def _proper_overlaps(left_lead: Word, right_lead: Word):
    """Overlap lengths k where a proper suffix of left equals a proper prefix of right."""
    top = min(len(left_lead), len(right_lead))
    for k in range(1, top):
        if left_lead[-k:] == right_lead[:k]:
            yield k


def find_obstructions(basis, order: WordOrder = DEGLEX) -> list[Obstruction]:
    """All minimal ambiguities among leading words, containments included."""
    polys = basis.polys if isinstance(basis, GBasis) else list(basis)
    leads = [p.leading_term(order)[0] for p in polys]
    found: list[Obstruction] = []
    for i, a in enumerate(leads):
        for k in _proper_overlaps(a, a):
            found.append(Obstruction(i, i, 0, len(a) - k, a + a[k:]))
        for j, b in enumerate(leads):
            if i == j:
                continue
            for k in _proper_overlaps(a, b):
                found.append(Obstruction(i, j, 0, len(a) - k, a + b[k:]))
            if len(b) < len(a) or (len(b) == len(a) and i < j):
                start = 0
                while True:
                    pos = a.find(b, start)
                    if pos < 0:
                        break
                    found.append(Obstruction(i, j, 0, pos, a))
                    start = pos + 1
    found.sort(key=lambda o: (len(o.word), o.left, o.right, o.right_shift))
    return found


class _Engine:
    """Mutable completion state; single run, exclusively owned."""

    def __init__(self, order: WordOrder, bound: int, limits: EngineLimits):
        self.order = order
        self.bound = bound
        self.limits = limits
        self.leads: dict[int, Word] = {}
        self.tails: dict[int, dict] = {}
        self.live: set[int] = set()
        self.index: dict[int, list[int]] = {}
        self.unit_rid: int | None = None
        self.heap: list[tuple[int, int, int, int]] = []
        self.deferred: list[tuple[int, int, int, int]] = []
        self.pending: deque = deque()
        self.next_rid = 0
        self.term_count = 0
        self.overflow = False

    # Reducer protocol: find / tails
    def find(self, w: Word):
        if self.unit_rid is not None:
            return self.unit_rid, 0, EMPTY_WORD
        for pos in range(len(w)):
            bucket = self.index.get(w[pos])
            if not bucket:
                continue
            for rid in bucket:
                if rid in self.live and w.startswith(self.leads[rid], pos):
                    return rid, pos, self.leads[rid]
        return None

    def _nf(self, terms: dict) -> dict:
        return _reduce_terms(terms, self)

    def _push_overlaps(self, i: int, j: int):
        a = self.leads[i]
        b = self.leads[j]
        for k in _proper_overlaps(a, b):
            entry = (len(a) + len(b) - k, i, j, k)
            if entry[0] <= self.bound:
                heapq.heappush(self.heap, entry)
            else:
                self.deferred.append(entry)

    def insert(self, terms: dict):
        nf = self._nf(terms)
        if not nf:
            return
        lw = max(nf, key=self.order.key)
        lc = nf.pop(lw)
        if lc != 1:
            nf = {w: exact_div(c, lc) for w, c in nf.items()}
        if len(lw) > self.bound:
            self.overflow = True
            return
        rid = self.next_rid
        self.next_rid += 1
        # interreduction, step 1: retire elements whose lead the new lead divides
        if lw:
            for s in sorted(self.live):
                if lw in self.leads[s]:
                    self.live.discard(s)
                    full = dict(self.tails[s])
                    full[self.leads[s]] = 1
                    self.term_count -= len(full)
                    self.pending.append(full)
        else:
            # constant 1 entered the ideal: everything reduces to zero
            for s in sorted(self.live):
                self.live.discard(s)
                self.term_count -= len(self.tails[s]) + 1
        self.leads[rid] = lw
        self.tails[rid] = nf
        self.live.add(rid)
        self.term_count += len(nf) + 1
        if lw == EMPTY_WORD:
            self.unit_rid = rid
        else:
            self.index.setdefault(lw[0], []).append(rid)
        if len(self.live) > self.limits.max_basis:
            raise ResourceCapError(
                f"basis size cap exceeded ({self.limits.max_basis})")
        if self.term_count > self.limits.max_terms:
            raise ResourceCapError(
                f"total term cap exceeded ({self.limits.max_terms})")
        # interreduction, step 2: re-reduce tails the new lead touches
        for s in sorted(self.live):
            if s == rid:
                continue
            tail = self.tails[s]
            if any(lw in w for w in tail):
                self.term_count -= len(tail)
                new_tail = self._nf(dict(tail))
                self.tails[s] = new_tail
                self.term_count += len(new_tail)
        for s in sorted(self.live):
            if s == rid:
                self._push_overlaps(rid, rid)
            else:
                self._push_overlaps(rid, s)
                self._push_overlaps(s, rid)

    def spoly(self, i: int, j: int, k: int) -> dict:
        a = self.leads[i]
        b = self.leads[j]
        right = b[k:]
        left = a[:len(a) - k]
        out: dict = {}
        for w, c in self.tails[i].items():
            nw = w + right
            acc = out.get(nw, 0) + c
            if acc:
                out[nw] = acc
            else:
                del out[nw]
        for w, c in self.tails[j].items():
            nw = left + w
            acc = out.get(nw, 0) - c
            if acc:
                out[nw] = acc
            else:
                del out[nw]
        return out

    def run(self, gen_dicts) -> None:
        self.pending.extend(gen_dicts)
        while True:
            if self.pending:
                self.insert(self.pending.popleft())
                continue
            entry = None
            while self.heap:
                cand = heapq.heappop(self.heap)
                if cand[1] in self.live and cand[2] in self.live:
                    entry = cand
                    break
            if entry is None:
                break
            _, i, j, k = entry
            self.insert(self.spoly(i, j, k))

    def is_complete(self) -> bool:
        if self.overflow:
            return False
        return not any(
            i in self.live and j in self.live for _, i, j, _ in self.deferred
        )

    def basis_polys(self) -> list[Poly]:
        out = []
        for rid in sorted(self.live, key=lambda r: self.order.key(self.leads[r])):
            terms = dict(self.tails[rid])
            terms[self.leads[rid]] = 1
            out.append(Poly(terms, _trusted=True))
        return out


def complete(gens, order: WordOrder = DEGLEX, *, degree_bound: int,
             limits: EngineLimits = EngineLimits()) -> GBasis:
    """Complete a generating set into a degree-truncated Groebner basis.

    Ambiguities are processed smallest degree first; those whose overlap
    word exceeds ``degree_bound`` are deferred and, if still relevant when
    the queue empties, mark the basis incomplete.
    """
    gen_list = list(gens)
    if not gen_list:
        raise ValueError("empty generating set")
    for i, g in enumerate(gen_list):
        if g.is_zero():
            raise ValueError(f"generator {i} is zero")
    max_deg = max(g.degree() for g in gen_list)
    if degree_bound < max_deg:
        raise ValueError(
            f"degree bound {degree_bound} below generator degree {max_deg}")
    engine = _Engine(order, degree_bound, limits)
    engine.run(dict(g.terms) for g in gen_list)
    return GBasis(engine.basis_polys(), order, degree_bound, engine.is_complete())


def membership_certificate(f: Poly, basis: GBasis, gens: Generators) -> str:
    """Printable evidence for a membership answer.

    For members, the cofactor decomposition f = sum of
    coeff * left * element * right over basis elements; otherwise the
    irreducible normal form.  Stable across runs.
    """
    trace: list = []
    reducer = Reducer(basis.polys, basis.order)
    nf = reducer.normal_form(f, trace=trace)

    def word_str(w: Word) -> str:
        return "*".join(gens.gen_name(x) for x in w) if w else "1"

    if nf.is_zero():
        lines = ["member"]
        for coeff, left, rid, right in trace:
            element = basis.polys[rid].render(gens)
            lines.append(f"({coeff}) * {word_str(left)} * [{element}] * {word_str(right)}")
        return "\n".join(lines)
    status = "non_member" if basis.complete else "unknown"
    return f"{status}\nnormal_form: {nf.render(gens)}"


def ideal_member(f: Poly, basis: GBasis, reducer: Reducer | None = None) -> Membership:
    """Tri-state ideal membership via normal form.

    A zero normal form is conclusive at any truncation degree; a nonzero
    one is conclusive only for a complete basis.
    """
    rules = reducer if reducer is not None else Reducer(basis.polys, basis.order)
    nf = rules.normal_form(f)
    if nf.is_zero():
        return Membership.MEMBER
    return Membership.NON_MEMBER if basis.complete else Membership.UNKNOWN

"""Finite simple undirected graphs: parsing, canonical forms, enumeration.

Graphs are stored as symmetric 0/1 adjacency matrices with empty diagonal.
Vertices are 0-based internally; all user-facing rendering is 1-based.
Matrix powers use Python integers, so walk counts never overflow.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

MAX_VERTICES = 16

# Brute-force canonical labeling enumerates all n! relabelings.
MAX_BRUTE_FORCE_VERTICES = 8

# Exhaustive edge-subset enumeration; n = 7 sweeps 2^21 masks (~10 s).
MAX_ENUMERATE_VERTICES = 7


class GraphError(ValueError):
    """Invalid graph data or unparsable graph input."""


class Graph6Error(GraphError):
    """Malformed graph6 string."""


class AdjacencyError(GraphError):
    """Malformed adjacency-matrix text."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on ``n`` vertices with adjacency rows ``adj``."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n or any(len(row) != self.n for row in self.adj):
            raise GraphError("adjacency matrix is not n x n")
        for i in range(self.n):
            if self.adj[i][i] != 0:
                raise GraphError(f"self-loop at vertex {i + 1}")
            for j in range(self.n):
                if self.adj[i][j] not in (0, 1):
                    raise GraphError(f"non-binary adjacency entry at ({i + 1},{j + 1})")
                if self.adj[i][j] != self.adj[j][i]:
                    raise GraphError(f"asymmetric adjacency at ({i + 1},{j + 1})")

    @staticmethod
    def from_edges(n: int, edges, *, one_based: bool = True) -> "Graph":
        """Build a graph from an edge list, 1-based by default."""
        off = 1 if one_based else 0
        rows = [[0] * n for _ in range(n)]
        for i, j in edges:
            a, b = i - off, j - off
            if not (0 <= a < n and 0 <= b < n):
                raise GraphError(f"edge ({i},{j}) outside vertex range")
            if a == b:
                raise GraphError(f"self-loop at vertex {i}")
            rows[a][b] = rows[b][a] = 1
        return Graph(n, tuple(tuple(r) for r in rows))

    @staticmethod
    def from_mask(n: int, mask: int) -> "Graph":
        """Inverse of :meth:`mask`."""
        pairs = _pairs(n)
        k = len(pairs)
        rows = [[0] * n for _ in range(n)]
        for p, (i, j) in enumerate(pairs):
            if mask >> (k - 1 - p) & 1:
                rows[i][j] = rows[j][i] = 1
        return Graph(n, tuple(tuple(r) for r in rows))

    def mask(self) -> int:
        """Upper-triangle bits, row-major, first pair most significant.

        Integer order of masks equals lexicographic order of adjacency
        matrices, so the canonical form below is plain integer min.
        """
        pairs = _pairs(self.n)
        k = len(pairs)
        m = 0
        for p, (i, j) in enumerate(pairs):
            if self.adj[i][j]:
                m |= 1 << (k - 1 - p)
        return m

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n) if self.adj[i][j]]

    def edge_count(self) -> int:
        return len(self.edges())

    def degree(self, v: int) -> int:
        return sum(self.adj[v])


@functools.lru_cache(maxsize=None)
def _pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


@functools.lru_cache(maxsize=None)
def _perm_tables(n: int) -> tuple[tuple[int, ...], ...]:
    """For each permutation, the mask-bit image of every upper-triangle pair."""
    pairs = _pairs(n)
    k = len(pairs)
    pos = {pair: p for p, pair in enumerate(pairs)}
    tables = []
    for perm in itertools.permutations(range(n)):
        tab = []
        for i, j in pairs:
            a, b = perm[i], perm[j]
            if a > b:
                a, b = b, a
            tab.append(1 << (k - 1 - pos[(a, b)]))
        tables.append(tuple(tab))
    return tuple(tables)


def _remap(mask: int, table: tuple[int, ...], k: int) -> int:
    out = 0
    m = mask
    while m:
        b = m & -m
        out |= table[k - 1 - (b.bit_length() - 1)]
        m ^= b
    return out


def permute(g: Graph, perm) -> Graph:
    """Relabel vertices: edge (i,j) becomes (perm[i], perm[j]), 0-based."""
    n = g.n
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            rows[perm[i]][perm[j]] = g.adj[i][j]
    return Graph(n, tuple(tuple(r) for r in rows))


def canonical_form(g: Graph) -> Graph:
    """Lexicographically minimal adjacency matrix over all relabelings."""
    if g.n > MAX_BRUTE_FORCE_VERTICES:
        raise GraphError(f"canonical_form is brute force, n <= {MAX_BRUTE_FORCE_VERTICES}")
    k = len(_pairs(g.n))
    mask = g.mask()
    best = min(_remap(mask, table, k) for table in _perm_tables(g.n))
    return Graph.from_mask(g.n, best)


def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 1."""
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in range(g.n):
            if g.adj[v][w] and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def matrix_power(g: Graph, l: int) -> tuple[tuple[int, ...], ...]:
    """Exact l-th power of the adjacency matrix; entry (i,j) counts walks."""
    if l < 1:
        raise ValueError("power must be >= 1")
    n = g.n
    result = g.adj
    base = g.adj
    l -= 1
    while l:
        if l & 1:
            result = _mat_mul(result, base, n)
        l >>= 1
        if l:
            base = _mat_mul(base, base, n)
    return result


def _mat_mul(a, b, n):
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def _mask_connected(mask: int, n: int, pairs, k: int) -> bool:
    nbr = [0] * n
    for p, (i, j) in enumerate(pairs):
        if mask >> (k - 1 - p) & 1:
            nbr[i] |= 1 << j
            nbr[j] |= 1 << i
    reach = frontier = 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            nxt |= nbr[b.bit_length() - 1]
            m ^= b
        frontier = nxt & ~reach
        reach |= frontier
    return reach == (1 << n) - 1


def enumerate_connected(n: int) -> list[Graph]:
    """One canonical representative per isomorphism class of connected graphs.

    Sweeps all edge subsets in mask order and marks the whole isomorphism
    orbit of each new representative, so the first unseen connected mask is
    automatically the canonical (minimal) one.  Deterministic ascending order.
    """
    if not 1 <= n <= MAX_ENUMERATE_VERTICES:
        raise GraphError(f"enumeration supports 1..{MAX_ENUMERATE_VERTICES} vertices")
    if n == 1:
        return [Graph(1, ((0,),))]
    pairs = _pairs(n)
    k = len(pairs)
    tables = _perm_tables(n)
    seen = bytearray(1 << k)
    out = []
    for mask in range(1 << k):
        if seen[mask]:
            continue
        if not _mask_connected(mask, n, pairs, k):
            continue
        for table in tables:
            seen[_remap(mask, table, k)] = 1
        out.append(Graph.from_mask(n, mask))
    return out


_G6_PREFIX = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    """Decode a one-line graph6 string (n <= 16)."""
    s = text.strip()
    if s.startswith(_G6_PREFIX):
        s = s[len(_G6_PREFIX):]
    if not s:
        raise Graph6Error("empty graph6 string")
    head = ord(s[0])
    if head == 126:
        raise Graph6Error("multi-byte vertex count: n > 62 not supported")
    if not 63 <= head <= 125:
        raise Graph6Error(f"malformed header byte {s[0]!r}")
    n = head - 63
    if not 1 <= n <= MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} outside 1..{MAX_VERTICES}")
    k = n * (n - 1) // 2
    need = (k + 5) // 6
    payload = s[1:]
    if len(payload) < need:
        raise Graph6Error("truncated bit payload")
    if len(payload) > need:
        raise Graph6Error("trailing characters after bit payload")
    bits = []
    for c in payload:
        v = ord(c) - 63
        if not 0 <= v < 64:
            raise Graph6Error(f"malformed payload byte {c!r}")
        bits.extend((v >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[k:]):
        raise Graph6Error("nonzero padding bits")
    rows = [[0] * n for _ in range(n)]
    p = 0
    for j in range(1, n):
        for i in range(j):
            rows[i][j] = rows[j][i] = bits[p]
            p += 1
    return Graph(n, tuple(tuple(r) for r in rows))


def to_graph6(g: Graph) -> str:
    """Encode a graph as graph6; bit-exact inverse of :func:`parse_graph6`."""
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(g.adj[i][j])
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(g.n + 63)]
    for p in range(0, len(bits), 6):
        v = 0
        for b in bits[p:p + 6]:
            v = v << 1 | b
        chars.append(chr(v + 63))
    return "".join(chars)


def parse_adjacency(text: str) -> Graph:
    """Parse a 0/1 adjacency matrix, one row per line, whitespace tolerant."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        entries = []
        for c in stripped:
            if c in "01":
                entries.append(int(c))
            elif not c.isspace():
                raise AdjacencyError(f"invalid character {c!r} on line {lineno}")
        rows.append(entries)
    if not rows:
        raise AdjacencyError("empty adjacency input")
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise AdjacencyError(f"non-square matrix: {n} rows but row lengths {[len(r) for r in rows]}")
    if n > MAX_VERTICES:
        raise AdjacencyError(f"vertex count {n} outside 1..{MAX_VERTICES}")
    for i in range(n):
        if rows[i][i] != 0:
            raise AdjacencyError(f"nonzero diagonal at vertex {i + 1}")
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise AdjacencyError(f"asymmetric matrix at ({i + 1},{j + 1})")
    return Graph(n, tuple(tuple(r) for r in rows))

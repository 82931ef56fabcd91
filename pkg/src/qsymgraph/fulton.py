"""Zero patterns forced by closed-walk counts (Fulton's criterion).

If the i-th and j-th diagonal entries of some adjacency power differ, the
magic-unitary generator u_ij must vanish, and by symmetry so must u_ji.
Powers are compared up to a cap, n^2 by default.  The criterion is vacuous
on walk-regular (in particular vertex-transitive) graphs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, _mat_mul


@dataclass(frozen=True)
class ZeroPattern:
    """n x n boolean matrix of generators forced to zero, plus the last power examined."""

    n: int
    forced_zero: tuple[tuple[bool, ...], ...]
    max_power_used: int

    def is_forced(self, i: int, j: int) -> bool:
        return self.forced_zero[i][j]

    def forced_count(self) -> int:
        return sum(sum(row) for row in self.forced_zero)

    def alive(self) -> list[tuple[int, int]]:
        """Generator positions not forced to zero, row-major, 0-based."""
        return [
            (i, j)
            for i in range(self.n)
            for j in range(self.n)
            if not self.forced_zero[i][j]
        ]


def zero_pattern(g: Graph, max_power: int | None = None) -> ZeroPattern:
    """Compare diagonal walk counts for every power up to ``max_power``.

    Stops early once every off-diagonal entry is forced; diagonal entries
    are never forced.
    """
    n = g.n
    cap = n * n if max_power is None else max_power
    if cap < 1:
        raise ValueError("max_power must be >= 1")
    forced = [[False] * n for _ in range(n)]
    open_pairs = {(i, j) for i in range(n) for j in range(i + 1, n)}
    power = g.adj
    used = 1
    for l in range(1, cap + 1):
        if l > 1:
            power = _mat_mul(power, g.adj, n)
        used = l
        diag = [power[i][i] for i in range(n)]
        for i, j in list(open_pairs):
            if diag[i] != diag[j]:
                forced[i][j] = forced[j][i] = True
                open_pairs.remove((i, j))
        if not open_pairs:
            break
    return ZeroPattern(n, tuple(tuple(row) for row in forced), used)


def is_identity_forced(pattern: ZeroPattern) -> bool:
    """True iff every off-diagonal generator is forced to zero.

    Callers may then conclude the algebra is trivial (every diagonal
    generator equals 1) without any further computation.
    """
    return all(
        pattern.forced_zero[i][j]
        for i in range(pattern.n)
        for j in range(pattern.n)
        if i != j
    )


def render_pattern(pattern: ZeroPattern) -> str:
    """Partially specified generator matrix with entries "0" or "u_ij"."""
    cells = []
    for i in range(pattern.n):
        row = []
        for j in range(pattern.n):
            if pattern.forced_zero[i][j]:
                row.append("0")
            elif pattern.n <= 9:
                row.append(f"u_{i + 1}{j + 1}")
            else:
                row.append(f"u_{i + 1}_{j + 1}")
        cells.append(row)
    width = max(len(c) for row in cells for c in row)
    return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)

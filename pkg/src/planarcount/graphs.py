"""Regular bipartite multigraphs, configurations and exact brute-force counts.

An r-regular bipartite multigraph on ordered color classes u_1..u_n and
v_1..v_n is stored as its n x n multiplicity matrix.  Splitting every vertex
into r copies (ordered lexicographically and identified with [rn]) turns the
graph into a configuration: a perfect matching of [rn] with [rn], i.e. a
permutation in one-line notation.
"""

from __future__ import annotations

import random
from bisect import bisect_left
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterator, NamedTuple

from .perms import check_permutation, perm_inverse


@dataclass(frozen=True)
class Multigraph:
    """n x n matrix of edge multiplicities with all row and column sums r."""

    n: int
    r: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1 or self.r < 1:
            raise ValueError("need n >= 1 and r >= 1")
        if len(self.rows) != self.n or any(len(row) != self.n for row in self.rows):
            raise ValueError("multiplicity matrix must be n x n")
        if any(x < 0 for row in self.rows for x in row):
            raise ValueError("multiplicities must be nonnegative")
        if any(sum(row) != self.r for row in self.rows):
            raise ValueError("every row sum must equal r")
        for j in range(self.n):
            if sum(row[j] for row in self.rows) != self.r:
                raise ValueError("every column sum must equal r")

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i - 1][j - 1]

    def to_text(self) -> str:
        return ";".join(",".join(str(x) for x in row) for row in self.rows)

    @classmethod
    def from_text(cls, text: str, r: int | None = None) -> "Multigraph":
        rows = tuple(
            tuple(int(x) for x in part.split(",")) for part in text.strip().split(";")
        )
        if r is None:
            r = sum(rows[0]) if rows and rows[0] else 0
        return cls(n=len(rows), r=r, rows=rows)


class MatchingProfile(NamedTuple):
    """Per-node largest planar matching sizes and their maximum."""

    left: tuple[int, ...]
    right: tuple[int, ...]
    largest: int


def enumerate_multigraphs(n: int, r: int) -> Iterator[Multigraph]:
    """Every n x n nonnegative matrix with all row/column sums r, exactly once.

    Rows are filled one cell at a time, each cell taking its largest feasible
    value first, with the remaining column sums pruning dead branches.  The
    stream is therefore ordered by descending flattened matrix.
    """
    if n < 1 or r < 1:
        raise ValueError("need n >= 1 and r >= 1")
    col_rem = [r] * n
    done: list[tuple[int, ...]] = []

    def fill_rows(i: int) -> Iterator[Multigraph]:
        if i == n:
            yield Multigraph(n=n, r=r, rows=tuple(done))
            return
        row: list[int] = []

        def fill_cells(j: int, row_rem: int) -> Iterator[Multigraph]:
            if j == n:
                if row_rem == 0:
                    done.append(tuple(row))
                    yield from fill_rows(i + 1)
                    done.pop()
                return
            # a cell may not exceed what its row or column can still absorb,
            # and the columns to its right must absorb the rest of the row
            tail_cap = sum(col_rem[j + 1 :])
            hi = min(row_rem, col_rem[j])
            lo = max(0, row_rem - tail_cap)
            for x in range(hi, lo - 1, -1):
                row.append(x)
                col_rem[j] -= x
                yield from fill_cells(j + 1, row_rem - x)
                col_rem[j] += x
                row.pop()

        yield from fill_cells(0, r)

    yield from fill_rows(0)


def canonical_lift(g: Multigraph) -> tuple[int, ...]:
    """Lift a multigraph to the configuration in which parallel edges cross.

    An edge (u_i, v_j) of multiplicity t, preceded (in the crossing order) by
    a = number of edges from u_i to later columns and b = number of edges into
    v_j from later rows, contributes the pairings
    (copy a+s of u_i, copy b+t-s+1 of v_j) for s = 1..t.
    """
    n, r = g.n, g.r
    values = [0] * (r * n)
    for i in range(n):
        for j in range(n):
            t = g.rows[i][j]
            if t == 0:
                continue
            a = sum(g.rows[i][j + 1 :])
            b = sum(g.rows[ii][j] for ii in range(i + 1, n))
            for s in range(1, t + 1):
                left = i * r + a + s
                right = j * r + b + (t - s + 1)
                values[left - 1] = right
    return check_permutation(values)


def project_configuration(perm, n: int, r: int) -> Multigraph:
    """Collapse the r copies of every vertex back to a multiplicity matrix."""
    perm = check_permutation(perm)
    if len(perm) != n * r:
        raise ValueError(f"configuration must have length {n * r}")
    rows = [[0] * n for _ in range(n)]
    for left0, right in enumerate(perm):
        rows[left0 // r][(right - 1) // r] += 1
    return Multigraph(n=n, r=r, rows=tuple(tuple(row) for row in rows))


def planar_matching_profile(perm) -> MatchingProfile:
    """Largest planar matching ending at each left / right node, plus the max.

    A planar matching of a configuration is an increasing subsequence of its
    permutation, so the left profile is the longest-increasing-subsequence
    length ending at each position (patience sorting, O(m log m)); the right
    profile is the same computation on the inverse permutation.
    """
    perm = check_permutation(perm)

    def ending_lengths(seq):
        piles: list[int] = []
        out = []
        for v in seq:
            p = bisect_left(piles, v)
            if p == len(piles):
                piles.append(v)
            else:
                piles[p] = v
            out.append(p + 1)
        return tuple(out)

    left = ending_lengths(perm)
    right = ending_lengths(perm_inverse(perm))
    return MatchingProfile(left, right, max(left, default=0))


def largest_planar_matching(perm) -> int:
    return planar_matching_profile(perm).largest


def largest_planar_subgraph_size(g: Multigraph) -> int:
    """Maximum total multiplicity over chains of cells weakly increasing in
    both coordinates (noncrossing edges that may share endpoints)."""
    n = g.n
    # best[i][j] = max chain value over the rectangle of cells <= (i, j)
    best = [[0] * (n + 1) for _ in range(n + 1)]
    result = 0
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            here = g.rows[i - 1][j - 1] + max(0, best[i - 1][j], best[i][j - 1])
            result = max(result, here)
            best[i][j] = max(here, best[i - 1][j], best[i][j - 1])
    return result


@lru_cache(maxsize=None)
def _matching_sizes(n: int, r: int) -> tuple[int, ...]:
    return tuple(
        planar_matching_profile(canonical_lift(g)).largest
        for g in enumerate_multigraphs(n, r)
    )


@lru_cache(maxsize=None)
def _subgraph_sizes(n: int, r: int) -> tuple[int, ...]:
    return tuple(largest_planar_subgraph_size(g) for g in enumerate_multigraphs(n, r))


def count_bounded_matching(n: int, r: int, d: int) -> int:
    """Number of r-regular multigraphs whose largest planar matching is <= d."""
    if d < 0:
        raise ValueError("d must be >= 0")
    return sum(1 for size in _matching_sizes(n, r) if size <= d)


def count_bounded_subgraph(n: int, r: int, d: int) -> int:
    """Number of r-regular multigraphs whose largest planar subgraph is <= d."""
    if d < 0:
        raise ValueError("d must be >= 0")
    return sum(1 for size in _subgraph_sizes(n, r) if size <= d)


@lru_cache(maxsize=None)
def count_bounded_lis(m: int, d: int) -> int:
    """Number of permutations of [m] with no increasing subsequence longer
    than d, by exhaustive enumeration.  Oracle for everything else."""
    if m < 0 or d < 0:
        raise ValueError("need m >= 0 and d >= 0")
    count = 0
    for perm in permutations(range(1, m + 1)):
        if planar_matching_profile(perm).largest <= d:
            count += 1
    return count


def sample_configuration(n: int, r: int, seed: int) -> tuple[int, ...]:
    """Uniform random configuration (permutation of [rn]) under a fixed seed.

    Fisher-Yates driven by CPython's Mersenne Twister (`random.Random(seed)`,
    MT19937 with the documented integer seeding), so identical seeds give
    identical configurations on every platform.  Note that projecting does
    not sample multigraphs uniformly: a multigraph is hit with probability
    proportional to the product of 1/t! over its edge multiplicities t.
    """
    rng = random.Random(seed)
    values = list(range(1, n * r + 1))
    for i in range(len(values) - 1, 0, -1):
        j = rng.randrange(i + 1)
        values[i], values[j] = values[j], values[i]
    return tuple(values)

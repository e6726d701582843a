"""Standard Young tableaux, RSK row insertion and bounded-column counting.

Rows are numbered from the top starting at 1, so "strictly above" means a
strictly smaller row index.  Entries are distinct positive integers that
increase along rows and down columns.
"""

from __future__ import annotations

import re
from bisect import bisect_right
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .perms import check_permutation


@dataclass(frozen=True)
class YoungTableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        lengths = [len(row) for row in self.rows]
        if any(length == 0 for length in lengths):
            raise ValueError("empty rows are not allowed")
        if any(lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)):
            raise ValueError("row lengths must weakly decrease")
        entries = [x for row in self.rows for x in row]
        if len(set(entries)) != len(entries):
            raise ValueError("entries must be distinct")
        for row in self.rows:
            if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
                raise ValueError("rows must increase left to right")
        for i in range(len(self.rows) - 1):
            upper, lower = self.rows[i], self.rows[i + 1]
            if any(upper[j] >= lower[j] for j in range(len(lower))):
                raise ValueError("columns must increase top to bottom")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    @property
    def column_count(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def entries(self) -> list[int]:
        return sorted(x for row in self.rows for x in row)

    def position_of(self, value: int) -> tuple[int, int]:
        """1-based (row, column) of an entry."""
        for i, row in enumerate(self.rows):
            j = bisect_right(row, value) - 1
            if j >= 0 and row[j] == value:
                return (i + 1, j + 1)
        raise ValueError(f"{value} is not an entry")

    def row_of(self, value: int) -> int:
        return self.position_of(value)[0]

    def to_text(self) -> str:
        inner = ",".join("[" + ",".join(str(x) for x in row) + "]" for row in self.rows)
        return "[" + inner + "]"

    @classmethod
    def from_text(cls, text: str) -> "YoungTableau":
        text = re.sub(r"\s+", "", text)
        if not re.fullmatch(r"\[(\[\d+(,\d+)*\])(,\[\d+(,\d+)*\])*\]", text):
            raise ValueError(f"malformed tableau text: {text!r}")
        rows = tuple(
            tuple(int(x) for x in part.split(","))
            for part in re.findall(r"\[([\d,]+)\]", text[1:-1])
        )
        return cls(rows)


EMPTY_TABLEAU = YoungTableau(rows=())


def row_insert(t: YoungTableau, x: int) -> tuple[YoungTableau, tuple[int, int]]:
    """Schensted insertion: x bumps the smallest larger entry of row 1, the
    bumped value recurses into row 2, and so on.  Returns the new tableau and
    the (row, column) of the created box."""
    if x in set(t.entries()):
        raise ValueError(f"{x} is already an entry")
    rows = [list(row) for row in t.rows]
    i = 0
    while True:
        if i == len(rows):
            rows.append([x])
            box = (i + 1, 1)
            break
        j = bisect_right(rows[i], x)
        if j == len(rows[i]):
            rows[i].append(x)
            box = (i + 1, len(rows[i]))
            break
        x, rows[i][j] = rows[i][j], x
        i += 1
    return YoungTableau(tuple(tuple(row) for row in rows)), box


def rsk(perm) -> tuple[YoungTableau, YoungTableau]:
    """Insertion tableau P and recording tableau Q of a permutation.

    P collects the values in insertion order; Q records in which box the
    i-th insertion grew the shape.  The two always share a shape, and the
    number of columns equals the longest increasing subsequence.
    """
    perm = check_permutation(perm)
    p = EMPTY_TABLEAU
    q_rows: list[list[int]] = []
    for i, value in enumerate(perm, start=1):
        p, (bi, bj) = row_insert(p, value)
        if bi > len(q_rows):
            q_rows.append([i])
        else:
            q_rows[bi - 1].append(i)
    q = YoungTableau(tuple(tuple(row) for row in q_rows))
    return p, q


def rsk_inverse(p: YoungTableau, q: YoungTableau) -> tuple[int, ...]:
    """The unique permutation whose insertion/recording pair is (p, q)."""
    if p.shape != q.shape:
        raise ValueError("tableaux must have the same shape")
    m = p.size
    if p.entries() != list(range(1, m + 1)) or q.entries() != list(range(1, m + 1)):
        raise ValueError(f"entries of both tableaux must be exactly [{m}]")
    rows = [list(row) for row in p.rows]
    out = [0] * m
    for step in range(m, 0, -1):
        i, j = q.position_of(step)
        x = rows[i - 1].pop(j - 1)
        if not rows[i - 1]:
            rows.pop()
        # bump upwards: in each higher row the rightmost entry smaller than x
        # is displaced
        for k in range(i - 2, -1, -1):
            j2 = bisect_right(rows[k], x) - 1
            x, rows[k][j2] = rows[k][j2], x
        out[step - 1] = x
    return tuple(out)


def blocks_strictly_below(t: YoungTableau, n: int, r: int) -> bool:
    """Within every group of r consecutive values r(i-1)+1..ri, each value
    sits in a strictly higher row than its successor."""
    _check_block_entries(t, n, r)
    return all(
        t.row_of(r * (i - 1) + s) < t.row_of(r * (i - 1) + s + 1)
        for i in range(1, n + 1)
        for s in range(1, r)
    )


def blocks_weakly_above(t: YoungTableau, n: int, r: int) -> bool:
    """Within every group of r consecutive values, each successor sits weakly
    above (same row or higher than) its predecessor."""
    _check_block_entries(t, n, r)
    return all(
        t.row_of(r * (i - 1) + s + 1) <= t.row_of(r * (i - 1) + s)
        for i in range(1, n + 1)
        for s in range(1, r)
    )


def _check_block_entries(t: YoungTableau, n: int, r: int) -> None:
    if t.entries() != list(range(1, n * r + 1)):
        raise ValueError(f"entries must be exactly [{n * r}]")


def iter_partitions(m: int, max_part: int) -> Iterator[tuple[int, ...]]:
    """Partitions of m with every part <= max_part, largest-first order."""
    if m == 0:
        yield ()
        return

    def rec(remaining, cap, acc):
        if remaining == 0:
            yield tuple(acc)
            return
        for part in range(min(cap, remaining), 0, -1):
            acc.append(part)
            yield from rec(remaining - part, part, acc)
            acc.pop()

    yield from rec(m, max_part, [])


def enumerate_tableaux(m: int, d: int) -> Iterator[YoungTableau]:
    """Every standard tableau with entries [m] and at most d columns.

    Shapes come first (partitions of m with parts <= d), then each shape is
    filled by backtracking: value k+1 goes into any cell whose left and upper
    neighbours are already filled.
    """
    if m < 0 or d < 0:
        raise ValueError("need m >= 0 and d >= 0")
    if m == 0:
        yield EMPTY_TABLEAU
        return
    if d == 0:
        return
    for shape in iter_partitions(m, d):
        grid = [[0] * length for length in shape]

        def fill(value) -> Iterator[YoungTableau]:
            if value > m:
                yield YoungTableau(tuple(tuple(row) for row in grid))
                return
            for i, length in enumerate(shape):
                # next free cell in row i is just after the filled prefix
                j = next((jj for jj in range(length) if grid[i][jj] == 0), None)
                if j is None:
                    continue
                if i > 0 and (len(grid[i - 1]) <= j or grid[i - 1][j] == 0):
                    continue
                grid[i][j] = value
                yield from fill(value + 1)
                grid[i][j] = 0

        yield from fill(1)


@lru_cache(maxsize=None)
def _condition_counts_by_shape(n: int, r: int, d: int, kind: str) -> dict:
    check = {"matching": blocks_strictly_below, "subgraph": blocks_weakly_above}[kind]
    counts: dict[tuple[int, ...], int] = {}
    for t in enumerate_tableaux(n * r, d):
        if n * r > 0 and not check(t, n, r):
            continue
        counts[t.shape] = counts.get(t.shape, 0) + 1
    return counts


def count_tableau_pairs(n: int, r: int, d: int, kind: str = "matching") -> int:
    """Ordered pairs of equal-shape tableaux on [rn] with at most d columns,
    both satisfying the block condition selected by `kind`:

    - "matching": strict block descents (counts graphs by largest matching)
    - "subgraph": weak block ascents (counts graphs by largest subgraph)

    The two members of a pair are constrained independently given the shape,
    so the total is the sum over shapes of the squared per-shape count.
    """
    return sum(c * c for c in _condition_counts_by_shape(n, r, d, kind).values())


def column_walk(t: YoungTableau, d: int | None = None):
    """Positive-only walk reading off the column of each entry 1..m.

    For tableaux with at most d columns the walk moves only in positive
    directions and stays in the dominance region x_1 >= ... >= x_d; it
    satisfies the weak block-decrease condition exactly when the tableau has
    strict block descents.
    """
    from .walks import Walk

    word = column_word(t)
    if d is None:
        d = max(1, t.column_count)
    return Walk(d=d, pos=word, neg=())


def pair_walk(p: YoungTableau, q: YoungTableau, d: int | None = None):
    """Closed walk of an equal-shape pair: the column word of p as positive
    steps, then the column word of q reversed as negative steps.  Equal
    shapes make the walk end at the origin."""
    from .walks import Walk

    if p.shape != q.shape:
        raise ValueError("tableaux must have the same shape")
    if d is None:
        d = max(1, p.column_count)
    return Walk(d=d, pos=column_word(p), neg=column_word(q)[::-1])


def column_word(t: YoungTableau) -> tuple[int, ...]:
    """For entries 1..m in order, the column index each entry occupies."""
    m = t.size
    word = [0] * m
    for i, row in enumerate(t.rows):
        for j, value in enumerate(row):
            if not 1 <= value <= m:
                raise ValueError(f"entries must be exactly [{m}]")
            word[value - 1] = j + 1
    return tuple(word)


def tableau_from_column_word(word, d: int) -> YoungTableau:
    """Inverse of `column_word`: column l collects the positions holding l,
    sorted increasingly.  Valid only for words whose running column counts
    weakly decrease (the walk stays in the dominance region) and stay <= d."""
    counts = [0] * (d + 1)
    for i, value in enumerate(word, start=1):
        if not 1 <= value <= d:
            raise ValueError(f"step {value} at position {i} leaves [1..{d}]")
        counts[value] += 1
        if value > 1 and counts[value] > counts[value - 1]:
            raise ValueError(f"position {i} leaves the dominance region")
    columns: dict[int, list[int]] = {}
    for i, value in enumerate(word, start=1):
        columns.setdefault(value, []).append(i)
    height = counts[1]
    rows = []
    for i in range(height):
        row = [columns[l][i] for l in sorted(columns) if len(columns[l]) > i]
        rows.append(tuple(row))
    return YoungTableau(tuple(rows))

"""Signed lattice-walk enumeration and the walk side of the counting identities.

Walks live in Z^d; a step is +e_j or -e_j for a direction j in [d].  Walks
are handled in representative form, all positive steps before all negative
ones, stored as two sequences of direction values: `111122|112121` means six
positive steps (directions 1,1,1,1,2,2) followed by six negative steps.

For walks of length 2rn the positive positions are grouped into n blocks of
r consecutive positions (and likewise the negative positions); a "matching"
walk has weakly decreasing values inside every block, a "subgraph" walk
strictly increasing ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations
from math import comb, factorial
from typing import Iterator, NamedTuple

from .graphs import planar_matching_profile
from .perms import check_permutation, perm_sign

try:
    import numpy as _np
except ImportError:  # pragma: no cover - numpy is a declared dependency
    _np = None


@dataclass(frozen=True)
class Walk:
    """A walk in representative form: positive steps, then negative steps."""

    d: int
    pos: tuple[int, ...]
    neg: tuple[int, ...]

    def __post_init__(self):
        if self.d < 0:
            raise ValueError("dimension must be >= 0")
        for v in self.pos + self.neg:
            if not 1 <= v <= self.d:
                raise ValueError(f"step direction {v} outside [1, {self.d}]")

    def to_text(self) -> str:
        if all(v <= 9 for v in self.pos + self.neg):
            return "".join(map(str, self.pos)) + "|" + "".join(map(str, self.neg))
        return ",".join(map(str, self.pos)) + "|" + ",".join(map(str, self.neg))

    @classmethod
    def from_text(cls, text: str, d: int | None = None) -> "Walk":
        """Parse `111122|112121` (single digits) or `1,2,11|3,1` (comma form)."""
        if text.count("|") != 1:
            raise ValueError("walk text needs exactly one '|'")
        left, right = text.split("|")

        def half(s):
            s = s.strip()
            if not s:
                return ()
            if "," in s:
                return tuple(int(x) for x in s.split(","))
            return tuple(int(ch) for ch in s)

        pos, neg = half(left), half(right)
        if d is None:
            d = max(pos + neg, default=0)
        return cls(d=d, pos=pos, neg=neg)


class OccurrenceProfile(NamedTuple):
    """For each positive step: occurrences so far of its own value (`same`)
    and of the next smaller value (`lower`), both counted up to and
    including the step's position."""

    same: tuple[int, ...]
    lower: tuple[int, ...]


@dataclass(frozen=True)
class QuasiConfiguration:
    """A partial injective pairing of left nodes [m] with right nodes [m]."""

    m: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        lefts = [a for a, _ in self.pairs]
        rights = [b for _, b in self.pairs]
        if len(set(lefts)) != len(lefts) or len(set(rights)) != len(rights):
            raise ValueError("pairing must be injective")
        for a, b in self.pairs:
            if not (1 <= a <= self.m and 1 <= b <= self.m):
                raise ValueError("nodes must lie in [m]")

    @property
    def is_complete(self) -> bool:
        return len(self.pairs) == self.m

    def unmatched_left(self) -> tuple[int, ...]:
        used = {a for a, _ in self.pairs}
        return tuple(x for x in range(1, self.m + 1) if x not in used)

    def unmatched_right(self) -> tuple[int, ...]:
        used = {b for _, b in self.pairs}
        return tuple(x for x in range(1, self.m + 1) if x not in used)

    def as_permutation(self) -> tuple[int, ...]:
        if not self.is_complete:
            raise ValueError("pairing is not complete")
        values = [0] * self.m
        for a, b in self.pairs:
            values[a - 1] = b
        return check_permutation(values)


# ------------------------------------------------------------------ basics


def walk_steps(w: Walk) -> tuple[int, ...]:
    return w.pos + tuple(-v for v in w.neg)


def endpoint(w: Walk) -> tuple[int, ...]:
    point = [0] * w.d
    for v in w.pos:
        point[v - 1] += 1
    for v in w.neg:
        point[v - 1] -= 1
    return tuple(point)


def prefix_points(w: Walk) -> Iterator[tuple[int, ...]]:
    """All points visited, starting point included."""
    point = [0] * w.d
    yield tuple(point)
    for step in walk_steps(w):
        point[abs(step) - 1] += 1 if step > 0 else -1
        yield tuple(point)


def toeplitz_point(pi) -> tuple[int, ...]:
    """(1 - pi(1), 2 - pi(2), ..., d - pi(d))."""
    pi = check_permutation(pi)
    return tuple(j - pi[j - 1] for j in range(1, len(pi) + 1))


def is_toeplitz_point(point) -> bool:
    """True when point = (1 - pi(1), ..., d - pi(d)) for a permutation pi."""
    values = [j - point[j - 1] for j in range(1, len(point) + 1)]
    return sorted(values) == list(range(1, len(point) + 1))


def iter_toeplitz(d: int, max_l1: int | None = None):
    """(pi, T(pi), sign) over all permutations of [d]; endpoints whose l1 norm
    exceeds max_l1 are skipped since no walk of that length can reach them."""
    for pi in permutations(range(1, d + 1)):
        point = tuple(j - pi[j - 1] for j in range(1, d + 1))
        if max_l1 is not None and sum(abs(x) for x in point) > max_l1:
            continue
        yield pi, point, perm_sign(pi)


def stays_in_dominance_region(w: Walk) -> bool:
    """True if every visited point has x_1 >= x_2 >= ... >= x_d."""
    return all(
        all(p[i] >= p[i + 1] for i in range(w.d - 1)) for p in prefix_points(w)
    )


def reverse_negative_half(w: Walk) -> Walk:
    """Reverse the order of the negative steps; self-inverse."""
    return Walk(d=w.d, pos=w.pos, neg=w.neg[::-1])


# ----------------------------------------------------------- block families


def weakly_decreasing_blocks(values, r: int) -> bool:
    """Every group of r consecutive values is weakly decreasing."""
    return all(
        values[i] >= values[i + 1] for i in range(len(values) - 1) if (i + 1) % r
    )


def strictly_increasing_blocks(values, r: int) -> bool:
    return all(
        values[i] < values[i + 1] for i in range(len(values) - 1) if (i + 1) % r
    )


def in_restricted_family(w: Walk, r: int, kind: str = "matching") -> bool:
    """Representative-walk block test: weakly decreasing values per block for
    "matching", strictly increasing for "subgraph", on both halves."""
    if len(w.pos) != len(w.neg) or len(w.pos) % r:
        return False
    check = {
        "matching": weakly_decreasing_blocks,
        "subgraph": strictly_increasing_blocks,
    }[kind]
    return check(w.pos, r) and check(w.neg, r)


def in_reversed_family(w: Walk, r: int) -> bool:
    """Block test after the negative half has been reversed: positive blocks
    weakly decrease, negative blocks weakly increase."""
    if len(w.pos) != len(w.neg) or len(w.pos) % r:
        return False
    return weakly_decreasing_blocks(w.pos, r) and weakly_decreasing_blocks(
        w.neg[::-1], r
    )


@lru_cache(maxsize=None)
def _block_choices(d: int, r: int, kind: str) -> tuple:
    """All admissible blocks as (values, direction-count vector), in
    lexicographic order of the value tuple."""
    if kind == "matching":
        raw = [tuple(sorted(c, reverse=True)) for c in
               combinations_with_replacement(range(1, d + 1), r)]
    elif kind == "subgraph":
        raw = [c for c in combinations(range(1, d + 1), r)]
    else:
        raise ValueError(f"unknown kind {kind!r}")
    out = []
    for values in sorted(raw):
        counts = [0] * d
        for v in values:
            counts[v - 1] += 1
        out.append((values, tuple(counts)))
    return tuple(out)


def iter_restricted_walks(n: int, r: int, d: int, pi, kind: str = "matching"):
    """All representative walks of length 2rn ending at the Toeplitz point of
    pi whose blocks satisfy the `kind` condition on both halves.

    Positive halves are produced in lexicographic order of their block
    sequence, then negative halves likewise.
    """
    target = toeplitz_point(pi)
    if len(target) != d:
        raise ValueError(f"endpoint permutation must have length {d}")
    blocks = _block_choices(d, r, kind)
    pos_acc: list[tuple[int, ...]] = []
    neg_acc: list[tuple[int, ...]] = []

    per_direction_cap = r if kind == "matching" else 1

    def fill_neg(i: int, remaining: tuple[int, ...]) -> Iterator[Walk]:
        if i == n:
            yield Walk(
                d=d,
                pos=tuple(v for b in pos_acc for v in b),
                neg=tuple(v for b in neg_acc for v in b),
            )
            return
        cap = (n - i - 1) * per_direction_cap
        for values, counts in blocks:
            nxt = tuple(a - b for a, b in zip(remaining, counts))
            if any(x < 0 or x > cap for x in nxt):
                continue
            neg_acc.append(values)
            yield from fill_neg(i + 1, nxt)
            neg_acc.pop()

    def fill_pos(i: int, hist: tuple[int, ...]) -> Iterator[Walk]:
        if i == n:
            needed = tuple(h - t for h, t in zip(hist, target))
            if all(x >= 0 for x in needed):
                yield from fill_neg(0, needed)
            return
        for values, counts in blocks:
            pos_acc.append(values)
            yield from fill_pos(i + 1, tuple(a + b for a, b in zip(hist, counts)))
            pos_acc.pop()

    yield from fill_pos(0, (0,) * d)


# ----------------------------------------------------- signed walk counting


class BudgetExceeded(RuntimeError):
    """Raised when a computation refuses to start or continue because its
    node budget would be exceeded.  No partial result is returned."""


def _spend(state: list, amount: int, what: str) -> None:
    if state is None:
        return
    state[0] -= amount
    if state[0] < 0:
        raise BudgetExceeded(f"{what} exceeded the node budget")


@lru_cache(maxsize=None)
def _half_profiles_enumerate(n: int, r: int, d: int, kind: str) -> dict:
    """Displacement histogram -> number of half-walks, by explicitly walking
    every block sequence (each leaf of the search tree is one half-walk)."""
    blocks = _block_choices(d, r, kind)
    profiles: dict[tuple[int, ...], int] = {}
    zero = (0,) * d

    def rec(i: int, hist: tuple[int, ...]):
        if i == n:
            profiles[hist] = profiles.get(hist, 0) + 1
            return
        for _, counts in blocks:
            rec(i + 1, tuple(a + b for a, b in zip(hist, counts)))

    rec(0, zero)
    return profiles


@lru_cache(maxsize=None)
def _half_profiles_dp(n: int, r: int, d: int, kind: str) -> dict:
    """Same distribution computed without materializing sequences: convolve
    the block count-vectors n times over the displacement state space."""
    increments = [counts for _, counts in _block_choices(d, r, kind)]
    dist: dict[tuple[int, ...], int] = {(0,) * d: 1}
    for _ in range(n):
        nxt: dict[tuple[int, ...], int] = {}
        for hist, ways in dist.items():
            for inc in increments:
                key = tuple(a + b for a, b in zip(hist, inc))
                nxt[key] = nxt.get(key, 0) + ways
        dist = nxt
    return dist


def _signed_toeplitz_join(profiles: dict, d: int, m: int) -> int:
    """Sum over permutations pi of [d] of sgn(pi) times the number of
    (positive half, negative half) pairs whose displacements differ by the
    Toeplitz point of pi.  Both halves share the same profile distribution."""
    if not profiles:
        return 0
    points = [
        (point, sign)
        for _, point, sign in iter_toeplitz(d, max_l1=2 * m)
        if all(-m <= x <= m for x in point)
    ]
    if _np is not None and d > 0 and len(profiles) > 1:
        max_count = max(profiles.values())
        if max_count * max_count * len(profiles) < 2**62:
            return _signed_join_numpy(profiles, points, d, m)
    total = 0
    for point, sign in points:
        part = 0
        for hist, ways in profiles.items():
            other = tuple(h - t for h, t in zip(hist, point))
            if all(x >= 0 for x in other):
                w2 = profiles.get(other)
                if w2:
                    part += ways * w2
        total += sign * part
    return total


def _signed_join_numpy(profiles: dict, points: list, d: int, m: int) -> int:
    """int64 fast path; caller has proven no intermediate can overflow."""
    hists = _np.array(list(profiles.keys()), dtype=_np.int64)
    counts = _np.array(list(profiles.values()), dtype=_np.int64)
    base = _np.array([(m + 1) ** j for j in range(d)], dtype=_np.int64)
    keys = hists @ base
    order = _np.argsort(keys)
    sorted_keys = keys[order]
    sorted_counts = counts[order]
    total = 0
    for point, sign in points:
        shifted = hists - _np.array(point, dtype=_np.int64)
        valid = ((shifted >= 0) & (shifted <= m)).all(axis=1)
        if not valid.any():
            continue
        cand = shifted[valid] @ base
        idx = _np.searchsorted(sorted_keys, cand)
        idx[idx >= len(sorted_keys)] = 0
        found = sorted_keys[idx] == cand
        part = int((counts[valid][found] * sorted_counts[idx[found]]).sum())
        total += sign * part
    return total


def signed_walk_sum(
    n: int,
    r: int,
    d: int,
    kind: str = "matching",
    counter: str = "dp",
    budget: int | None = None,
) -> int:
    """Signed count of restricted representative walks over all Toeplitz
    endpoints: sum over pi of sgn(pi) |{walks of length 2rn to T(pi)}|.

    counter "enumerate" explicitly enumerates every half-walk and buckets it
    by displacement; counter "dp" computes the same distribution by dynamic
    programming over (block index, displacement).  Both then pair the two
    halves at each feasible Toeplitz endpoint.
    """
    if n < 0 or r < 1 or d < 0:
        raise ValueError("need n >= 0, r >= 1, d >= 0")
    if budget is not None:
        block_count = comb(d + r - 1, r) if kind == "matching" else comb(d, r)
        if block_count**n + factorial(d) > budget:
            raise BudgetExceeded("signed walk sum would exceed the node budget")
    if counter == "enumerate":
        profiles = _half_profiles_enumerate(n, r, d, kind)
    elif counter == "dp":
        profiles = _half_profiles_dp(n, r, d, kind)
    else:
        raise ValueError(f"unknown counter {counter!r}")
    return _signed_toeplitz_join(profiles, d, n * r)


def count_all_walks_signed(m: int, d: int) -> int:
    """Signed count over *all* walks of length 2m (every interleaving of
    positive and negative steps) ending at Toeplitz points, by a dynamic
    program over (steps taken, current point)."""
    if m < 0 or d < 0:
        raise ValueError("need m >= 0 and d >= 0")
    dist: dict[tuple[int, ...], int] = {(0,) * d: 1}
    for _ in range(2 * m):
        nxt: dict[tuple[int, ...], int] = {}
        for point, ways in dist.items():
            for j in range(d):
                for delta in (1, -1):
                    key = point[:j] + (point[j] + delta,) + point[j + 1 :]
                    nxt[key] = nxt.get(key, 0) + ways
        dist = nxt
    return sum(
        sign * dist.get(point, 0) for _, point, sign in iter_toeplitz(d, 2 * m)
    )


# ------------------------------------------------- configuration <-> walks


def profile_walk(perm, d: int | None = None) -> Walk:
    """The walk of prefix matching sizes: positive step values are the
    largest-planar-matching sizes up to each left node, negative step values
    the same over right nodes.  Always a closed representative walk."""
    prof = planar_matching_profile(perm)
    if d is None:
        d = max(1, prof.largest)
    return Walk(d=d, pos=prof.left, neg=prof.right)


def _value_positions(values) -> dict[int, list[int]]:
    out: dict[int, list[int]] = {}
    for i, v in enumerate(values, start=1):
        out.setdefault(v, []).append(i)
    return out


def crossing_pairing(w: Walk) -> QuasiConfiguration:
    """Pair equal-valued step sets "in a crossing way".

    For each value k, let A be the positive positions with value k and B the
    negative ones.  The first min(|A|,|B|) elements of A (respectively the
    last min(|A|,|B|) of B, when B is longer) are joined first-to-last, so
    that any two edges from the same value cross.  The result is a complete
    pairing exactly when the walk is closed.
    """
    if len(w.pos) != len(w.neg):
        raise ValueError("need equally many positive and negative steps")
    a_sets = _value_positions(w.pos)
    b_sets = _value_positions(w.neg)
    pairs = []
    for k in sorted(set(a_sets) | set(b_sets)):
        a = a_sets.get(k, [])
        b = b_sets.get(k, [])
        if len(a) >= len(b):
            chosen_a, chosen_b = a[: len(b)], b
        else:
            chosen_a, chosen_b = a, b[len(b) - len(a) :]
        pairs.extend(zip(chosen_a, reversed(chosen_b)))
    return QuasiConfiguration(m=len(w.pos), pairs=tuple(sorted(pairs)))


def occurrence_profile(w: Walk) -> OccurrenceProfile:
    same = []
    lower = []
    counts: dict[int, int] = {}
    for v in w.pos:
        counts[v] = counts.get(v, 0) + 1
        same.append(counts[v])
        lower.append(counts.get(v - 1, 0))
    return OccurrenceProfile(tuple(same), tuple(lower))


def _kth_to_last_position(values, value: int, k: int) -> int | None:
    """1-based position of the k-th occurrence of `value` counted from the
    end; None if there are fewer than k occurrences."""
    seen = 0
    for i in range(len(values) - 1, -1, -1):
        if values[i] == value:
            seen += 1
            if seen == k:
                return i + 1
    return None


def profile_violations(w: Walk) -> tuple[int, ...]:
    """Positive positions at which the walk fails to look like a prefix
    matching profile.

    Position u with value c > 1 is fine iff: some c-1 occurs weakly before u
    (lower count l > 0), the k-th-to-last occurrence of c among the negative
    steps exists (k = occurrences of c up to u), and the l-th-to-last
    occurrence of c-1 among the negative steps, if it exists, comes earlier.
    """
    same, lower = occurrence_profile(w)
    bad = []
    for u in range(1, len(w.pos) + 1):
        c = w.pos[u - 1]
        if c == 1:
            continue
        k, l = same[u - 1], lower[u - 1]
        if l == 0:
            bad.append(u)
            continue
        anchor = _kth_to_last_position(w.neg, c, k)
        if anchor is None:
            bad.append(u)
            continue
        earlier = _kth_to_last_position(w.neg, c - 1, l)
        if earlier is not None and earlier > anchor:
            bad.append(u)
    return tuple(bad)


def is_profile_walk(w: Walk) -> bool:
    """Positional test for being a prefix matching profile.

    Among representative walks ending at Toeplitz points this accepts
    exactly the images of the profile map (and such walks are necessarily
    closed); with an arbitrary endpoint the test can hold vacuously.
    """
    return len(w.pos) == len(w.neg) and not profile_violations(w)


# ------------------------------------------------------------- involutions


def _toeplitz_preimage(point) -> tuple[int, ...]:
    """The permutation pi with T(pi) = point; raises if there is none."""
    return check_permutation(tuple(j - point[j - 1] for j in range(1, len(point) + 1)))


def _reassign_block(values: list, positions: list[int], high: int, hi_first: bool):
    """Swap the multiplicities of `high` and `high-1` on `positions`, writing
    the larger value first (hi_first) or last."""
    n_high = sum(1 for s in positions if values[s - 1] == high)
    n_low = len(positions) - n_high
    # counts swap: old lows become highs and vice versa
    if hi_first:
        new_vals = [high] * n_low + [high - 1] * n_high
    else:
        new_vals = [high - 1] * n_high + [high] * n_low
    for s, v in zip(positions, new_vals):
        values[s - 1] = v


def nonprofile_involution(w: Walk, r: int) -> Walk:
    """Sign-reversing involution on restricted walks that are not prefix
    matching profiles.

    At the first failing positive position u (value c), the positive prefix
    up to u and the negative suffix from the l-th-to-last occurrence of c-1
    onwards stay fixed; everywhere else the step multiplicities of c and c-1
    are swapped block by block, larger value first.  The endpoint permutation
    is composed with the transposition of c-1 and c, flipping its sign.
    """
    m = len(w.pos)
    if len(w.neg) != m or m % r:
        raise ValueError("need rn positive and rn negative steps")
    n = m // r
    if not in_restricted_family(w, r, "matching"):
        raise ValueError("walk does not satisfy the block conditions")
    _toeplitz_preimage(endpoint(w))
    violations = profile_violations(w)
    if not violations:
        raise ValueError("walk is a prefix matching profile; not in the domain")
    u = violations[0]
    c = w.pos[u - 1]
    same, low = occurrence_profile(w)
    l = low[u - 1]
    if l == 0:
        v_bar = m + 1
    else:
        v_bar = _kth_to_last_position(w.neg, c - 1, l)
        if v_bar is None:
            raise ValueError("no anchor position; endpoint is not a Toeplitz point")

    new_pos = list(w.pos)
    new_neg = list(w.neg)
    for i in range(n):
        block = range(i * r + 1, (i + 1) * r + 1)
        pos_positions = [
            s for s in block if s > u and w.pos[s - 1] in (c - 1, c)
        ]
        _reassign_block(new_pos, pos_positions, c, hi_first=True)
        neg_positions = [
            s for s in block if s < v_bar and w.neg[s - 1] in (c - 1, c)
        ]
        _reassign_block(new_neg, neg_positions, c, hi_first=True)
    return Walk(d=w.d, pos=tuple(new_pos), neg=tuple(new_neg))


def translated_exit(w: Walk, start_offset: bool = True) -> tuple[int, int] | None:
    """First step index t (1-based) at which the walk, translated to start at
    (d-1, d-2, ..., 0), leaves the strict region x_1 > ... > x_d, together
    with the unique coordinate j where equality x_j = x_{j+1} occurs.
    None if the walk stays strictly ordered throughout."""
    point = list(range(w.d - 1, -1, -1)) if start_offset else [0] * w.d
    for t, step in enumerate(walk_steps(w), start=1):
        point[abs(step) - 1] += 1 if step > 0 else -1
        ties = [j for j in range(w.d - 1) if point[j] == point[j + 1]]
        if ties or any(point[j] < point[j + 1] for j in range(w.d - 1)):
            if len(ties) != 1:
                raise ValueError("first exit must create exactly one tie")
            return t, ties[0] + 1
    return None


def offregion_involution(w: Walk, r: int) -> Walk:
    """Sign-reversing involution on reversed-family walks that leave the
    dominance region.

    The prefix up to the first exit time t is kept; after t the step
    multiplicities of the tied directions j and j+1 are swapped inside every
    block of r positions, writing j+1 first in positive blocks and last in
    negative blocks.  The endpoint coordinates j and j+1 swap, so the
    endpoint permutation changes by a transposition.
    """
    m = len(w.pos)
    if len(w.neg) != m or m % r:
        raise ValueError("need rn positive and rn negative steps")
    n = m // r
    if not in_reversed_family(w, r):
        raise ValueError("walk does not satisfy the reversed block conditions")
    _toeplitz_preimage(endpoint(w))
    exit_info = translated_exit(w)
    if exit_info is None:
        raise ValueError("walk stays in the region; not in the domain")
    t, j = exit_info

    values = list(w.pos) + list(w.neg)
    for i in range(2 * n):
        block = range(i * r + 1, (i + 1) * r + 1)
        positions = [s for s in block if s > t and values[s - 1] in (j, j + 1)]
        _reassign_block(values, positions, j + 1, hi_first=(i < n))
    return Walk(d=w.d, pos=tuple(values[:m]), neg=tuple(values[m:]))


# ------------------------------------------- pruned audit-grade enumerators


def iter_profile_walks(n: int, r: int, d: int, budget: int | None = None):
    """Every restricted walk of length 2rn ending at a Toeplitz point that is
    a prefix matching profile, by pruned backtracking.

    Sound prunes only: a positive value c > 1 needs an earlier c-1 (else the
    lower count is zero); every positive value needs as many negative copies
    as its positive count (the k-th-to-last occurrences must exist), which
    with a Toeplitz endpoint forces the negative half to be a rearrangement
    of the positive half; and the before/after constraints are checked
    incrementally while the negative half is built back to front.
    """
    if n < 0 or r < 1 or d < 0:
        raise ValueError("need n >= 0, r >= 1, d >= 0")
    m = n * r
    state = [budget] if budget is not None else None
    pos_acc: list[int] = []

    def neg_halves(a: tuple[int, ...]):
        counts: dict[int, int] = {}
        same = []
        lower = []
        for v in a:
            counts[v] = counts.get(v, 0) + 1
            same.append(counts[v])
            lower.append(counts.get(v - 1, 0))
        # one constraint per positive position with value > 1:
        # (value c, same-count k, lower-count l); the l-th-to-last c-1 in the
        # negative half must come before the k-th-to-last c
        constraints = sorted(
            {(a[i], same[i], lower[i]) for i in range(m) if a[i] > 1}
        )
        sat_map: dict[tuple[int, int], list[int]] = {}
        vio_map: dict[tuple[int, int], list[int]] = {}
        for cid, (c, k, l) in enumerate(constraints):
            sat_map.setdefault((c, k), []).append(cid)
            vio_map.setdefault((c - 1, l), []).append(cid)
        pending = set(range(len(constraints)))
        remaining = dict(counts)
        values_present = sorted(remaining)
        suffix = [0] * (d + 2)
        buf = [0] * m

        def place(p: int):
            # positions filled from m down to 1
            if state is not None:
                _spend(state, 1, "profile-walk enumeration")
            if p == 0:
                yield tuple(buf)
                return
            for v in values_present:
                if remaining[v] == 0:
                    continue
                # blocks of the negative half must weakly decrease
                if p % r != 0 and v < buf[p]:
                    continue
                seen = suffix[v] + 1
                resolved = []
                dead = False
                for cid in sat_map.get((v, seen), ()):
                    if cid in pending:
                        pending.discard(cid)
                        resolved.append(cid)
                for cid in vio_map.get((v, seen), ()):
                    if cid in pending:
                        dead = True
                        break
                if not dead:
                    buf[p - 1] = v
                    remaining[v] -= 1
                    suffix[v] = seen
                    yield from place(p - 1)
                    remaining[v] += 1
                    suffix[v] = seen - 1
                pending.update(resolved)

        yield from place(m)

    def grow(i: int, prev_in_block: int | None, max_seen: int):
        if state is not None:
            _spend(state, 1, "profile-walk enumeration")
        if i == m:
            a = tuple(pos_acc)
            for b in neg_halves(a):
                yield Walk(d=d, pos=a, neg=b)
            return
        cap = min(d, max_seen + 1)
        if prev_in_block is not None:
            cap = min(cap, prev_in_block)
        for v in range(1, cap + 1):
            pos_acc.append(v)
            nxt_prev = v if (i + 1) % r else None
            yield from grow(i + 1, nxt_prev, max(max_seen, v))
            pos_acc.pop()

    if m == 0:
        yield Walk(d=d, pos=(), neg=())
        return
    yield from grow(0, None, 0)


def iter_region_walks(n: int, r: int, d: int, budget: int | None = None):
    """Every closed reversed-family walk of length 2rn staying in the
    dominance region x_1 >= ... >= x_d, by pruned backtracking."""
    if n < 0 or r < 1 or d < 0:
        raise ValueError("need n >= 0, r >= 1, d >= 0")
    m = n * r
    state = [budget] if budget is not None else None
    if m == 0:
        yield Walk(d=d, pos=(), neg=())
        return
    pos_acc: list[int] = []
    hist = [0] * (d + 2)

    def grow_neg(a: tuple[int, ...], point: list[int], buf: list[int], p: int):
        if state is not None:
            _spend(state, 1, "region-walk enumeration")
        if p == m:
            yield Walk(d=d, pos=a, neg=tuple(buf))
            return
        prev = buf[-1] if p % r else None
        for v in range(1, d + 1):
            if point[v - 1] == 0:
                continue
            if prev is not None and v < prev:
                continue
            if v < d and point[v - 1] - 1 < point[v]:
                continue
            point[v - 1] -= 1
            buf.append(v)
            yield from grow_neg(a, point, buf, p + 1)
            buf.pop()
            point[v - 1] += 1

    def grow_pos(i: int):
        if state is not None:
            _spend(state, 1, "region-walk enumeration")
        if i == m:
            a = tuple(pos_acc)
            yield from grow_neg(a, hist[1 : d + 1], [], 0)
            return
        prev = pos_acc[-1] if i % r else None
        for v in range(1, d + 1):
            if prev is not None and v > prev:
                continue
            if v > 1 and hist[v] + 1 > hist[v - 1]:
                continue
            hist[v] += 1
            pos_acc.append(v)
            yield from grow_pos(i + 1)
            pos_acc.pop()
            hist[v] -= 1

    yield from grow_pos(0)

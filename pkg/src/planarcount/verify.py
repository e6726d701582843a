"""Cross-method equality reports, bijection audits and involution audits.

Every verifier computes one quantity by several independent routes and
reports whether all routes agree exactly.  Audits enumerate both sides of a
claimed bijection (or the whole domain of an involution) and check the maps
witness by witness.  All reports are deterministic apart from elapsed_ms.

Verifiers refuse to start when a cheap upper bound on the work exceeds the
node budget; a refusal raises BudgetExceeded and never returns a partial
count.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable

from .graphs import (
    canonical_lift,
    count_bounded_lis,
    count_bounded_matching,
    count_bounded_subgraph,
    enumerate_multigraphs,
    planar_matching_profile,
)
from .series import bessel_series, series_determinant
from .tableaux import (
    blocks_strictly_below,
    count_tableau_pairs,
    enumerate_tableaux,
    pair_walk,
    rsk,
    rsk_inverse,
    tableau_from_column_word,
)
from .walks import (
    BudgetExceeded,
    Walk,
    count_all_walks_signed,
    crossing_pairing,
    endpoint,
    in_restricted_family,
    is_profile_walk,
    iter_profile_walks,
    iter_region_walks,
    iter_restricted_walks,
    iter_toeplitz,
    nonprofile_involution,
    offregion_involution,
    profile_violations,
    profile_walk,
    reverse_negative_half,
    signed_walk_sum,
    translated_exit,
)

DEFAULT_BUDGET = 500_000_000


@dataclass(frozen=True)
class VerificationReport:
    identity: str
    params: dict
    methods: dict
    passed: bool
    witness: str | None
    elapsed_ms: float

    def content(self):
        """Everything except the timing; reproducible bit for bit."""
        return (
            self.identity,
            tuple(sorted(self.params.items())),
            tuple(sorted((k, _as_text(v)) for k, v in self.methods.items())),
            self.passed,
            self.witness,
        )

    def to_json(self) -> str:
        obj = {
            "identity": self.identity,
            "params": {k: self.params[k] for k in sorted(self.params)},
            "methods": {k: _as_text(self.methods[k]) for k in self.methods},
            "pass": self.passed,
        }
        if self.witness is not None:
            obj["witness"] = self.witness
        obj["elapsed_ms"] = round(self.elapsed_ms, 3)
        return json.dumps(obj)


def _as_text(value):
    """Counts as decimal strings; coefficient sequences as lists of p/q."""
    if isinstance(value, (list, tuple)):
        return [str(x) for x in value]
    return str(value)


def _require(estimate: int, budget: int | None, what: str) -> None:
    if budget is not None and estimate > budget:
        raise BudgetExceeded(
            f"{what}: estimated {estimate} nodes exceeds budget {budget}"
        )


def _run_methods(tasks: dict[str, Callable[[], object]], threads: int) -> dict:
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = {name: pool.submit(fn) for name, fn in tasks.items()}
            return {name: futures[name].result() for name in tasks}
    return {name: fn() for name, fn in tasks.items()}


def _graph_bound(n: int, r: int) -> int:
    # row-by-row fill explores at most this many nodes (no column pruning)
    return comb(n + r - 1, n - 1) ** n * n


def _walk_bound(n: int, r: int, d: int, kind: str) -> int:
    blocks = comb(d + r - 1, r) if kind == "matching" else comb(d, r)
    return 2 * blocks**n + factorial(d)


def _identity_report(identity, params, methods, started) -> VerificationReport:
    values = list(methods.values())
    passed = all(v == values[0] for v in values)
    witness = None
    if not passed:
        listing = ", ".join(f"{k}={v}" for k, v in methods.items())
        witness = f"method disagreement: {listing}"
    return VerificationReport(
        identity=identity,
        params=params,
        methods=methods,
        passed=passed,
        witness=witness,
        elapsed_ms=(time.perf_counter() - started) * 1000,
    )


def verify_matching_identity(
    n: int, r: int, d: int, budget: int | None = DEFAULT_BUDGET, threads: int = 1
) -> VerificationReport:
    """Count graphs with largest planar matching <= d four ways: direct
    enumeration, condition-counted tableau pairs, and the signed restricted
    walk sum with both counters."""
    started = time.perf_counter()
    estimate = _graph_bound(n, r) + factorial(n * r) + 2 * _walk_bound(n, r, d, "matching")
    _require(estimate, budget, "matching identity")
    methods = _run_methods(
        {
            "graph_enumeration": lambda: count_bounded_matching(n, r, d),
            "tableau_pairs": lambda: count_tableau_pairs(n, r, d, "matching"),
            "walks_enumerated": lambda: signed_walk_sum(
                n, r, d, "matching", "enumerate"
            ),
            "walks_dp": lambda: signed_walk_sum(n, r, d, "matching", "dp"),
        },
        threads,
    )
    return _identity_report(
        "theorem1", {"n": n, "r": r, "d": d}, methods, started
    )


def verify_subgraph_identity(
    n: int, r: int, d: int, budget: int | None = DEFAULT_BUDGET, threads: int = 1
) -> VerificationReport:
    """Same three-way check for the largest planar subgraph variant."""
    started = time.perf_counter()
    estimate = _graph_bound(n, r) + factorial(n * r) + 2 * _walk_bound(n, r, d, "subgraph")
    _require(estimate, budget, "subgraph identity")
    methods = _run_methods(
        {
            "graph_enumeration": lambda: count_bounded_subgraph(n, r, d),
            "tableau_pairs": lambda: count_tableau_pairs(n, r, d, "subgraph"),
            "walks_enumerated": lambda: signed_walk_sum(
                n, r, d, "subgraph", "enumerate"
            ),
            "walks_dp": lambda: signed_walk_sum(n, r, d, "subgraph", "dp"),
        },
        threads,
    )
    return _identity_report("plk", {"n": n, "r": r, "d": d}, methods, started)


def verify_walk_scaling(
    m: int, d: int, budget: int | None = DEFAULT_BUDGET, threads: int = 1
) -> VerificationReport:
    """The signed count over all (interleaved) walks of length 2m to Toeplitz
    points equals C(2m, m) times both the representative signed sum and the
    number of permutations with bounded increasing subsequences."""
    started = time.perf_counter()
    estimate = (2 * m + 1) ** d * 4 * m * d + factorial(d) + factorial(m) + d**m
    _require(estimate, budget, "walk scaling")
    scale = comb(2 * m, m)
    methods = _run_methods(
        {
            "all_walks_dp": lambda: count_all_walks_signed(m, d),
            "representatives_scaled": lambda: scale
            * signed_walk_sum(m, 1, d, "matching", "dp"),
            "lis_scaled": lambda: scale * count_bounded_lis(m, d),
        },
        threads,
    )
    return _identity_report("mot", {"m": m, "d": d}, methods, started)


def verify_gessel_identity(
    d: int, truncation: int, budget: int | None = DEFAULT_BUDGET
) -> VerificationReport:
    """Gessel's identity, exactly: the coefficient of x^(2m) in the d x d
    determinant of modified Bessel series I_(|i-j|)(2x) equals u_m(d)/(m!)^2
    where u_m(d) counts permutations with increasing subsequences <= d."""
    started = time.perf_counter()
    if d < 1:
        raise ValueError("need d >= 1")
    if truncation < 0 or truncation % 2:
        raise ValueError("truncation degree must be even and >= 0")
    _require(
        factorial(d) * truncation**2 + factorial(truncation // 2) * (truncation // 2),
        budget,
        "gessel identity",
    )
    matrix = [
        [bessel_series(abs(i - j), truncation) for j in range(d)] for i in range(d)
    ]
    det = series_determinant(matrix)
    det_coeffs = [det.coefficient(2 * m) for m in range(truncation // 2 + 1)]
    lis_coeffs = [
        Fraction(count_bounded_lis(m, d), factorial(m) ** 2)
        for m in range(truncation // 2 + 1)
    ]
    methods = {
        "determinant_coefficients": det_coeffs,
        "scaled_lis_counts": lis_coeffs,
    }
    passed = det_coeffs == lis_coeffs
    witness = None
    if not passed:
        bad = next(i for i, (a, b) in enumerate(zip(det_coeffs, lis_coeffs)) if a != b)
        witness = (
            f"coefficient of x^{2 * bad}: determinant gives {det_coeffs[bad]}, "
            f"permutation count gives {lis_coeffs[bad]}"
        )
    return VerificationReport(
        identity="gessel",
        params={"d": d, "M": truncation},
        methods=methods,
        passed=passed,
        witness=witness,
        elapsed_ms=(time.perf_counter() - started) * 1000,
    )


# ---------------------------------------------------------------- audits


@lru_cache(maxsize=None)
def _lifted_configurations(n: int, r: int) -> tuple:
    """(configuration, largest matching size) for every multigraph."""
    out = []
    for g in enumerate_multigraphs(n, r):
        lift = canonical_lift(g)
        out.append((lift, planar_matching_profile(lift).largest))
    return tuple(out)


def _restricted_walk_family(n: int, r: int, d: int):
    """(walk, sign of endpoint permutation) over all Toeplitz endpoints."""
    for pi, _, sign in iter_toeplitz(d, max_l1=2 * n * r):
        for w in iter_restricted_walks(n, r, d, pi, "matching"):
            yield w, sign


def audit_involution(
    n: int,
    r: int,
    d: int,
    which: str,
    budget: int | None = DEFAULT_BUDGET,
    involution: Callable[[Walk, int], Walk] | None = None,
) -> VerificationReport:
    """Exhaustively check one of the two sign-reversing involutions.

    which="second": domain is every restricted walk (over all Toeplitz
    endpoints) that is not a prefix matching profile.  which="first": domain
    is every reversed-family walk that leaves the dominance region after
    translation.  Checks: the map stays in the domain, reverses the endpoint
    permutation's sign, squares to the identity, has no fixed point, and the
    domain's signed total is zero.
    """
    started = time.perf_counter()
    if which not in ("first", "second"):
        raise ValueError("which must be 'first' or 'second'")
    _require(_walk_bound(n, r, d, "matching") ** 2, budget, "involution audit")

    domain: dict[Walk, int] = {}
    for w, sign in _restricted_walk_family(n, r, d):
        if which == "second":
            if profile_violations(w):
                domain[w] = sign
        else:
            wt = reverse_negative_half(w)
            if translated_exit(wt) is not None:
                domain[wt] = sign

    rho = involution
    if rho is None:
        rho = nonprofile_involution if which == "second" else offregion_involution

    closure_failures = 0
    sign_failures = 0
    self_inverse_failures = 0
    fixed_points = 0
    witness = None

    def note(w, why):
        nonlocal witness
        if witness is None:
            witness = f"walk {w.to_text()}: {why}"

    for w, sign in domain.items():
        try:
            image = rho(w, r)
        except Exception as exc:  # noqa: BLE001 - a refusal is a failed audit
            closure_failures += 1
            note(w, f"involution raised {exc!r}")
            continue
        if image == w:
            fixed_points += 1
            note(w, "fixed point")
            continue
        if image not in domain:
            closure_failures += 1
            note(w, f"image {image.to_text()} left the domain")
            continue
        if domain[image] != -sign:
            sign_failures += 1
            note(w, "endpoint permutation sign did not flip")
        back = rho(image, r)
        if back != w:
            self_inverse_failures += 1
            note(w, f"rho(rho(w)) = {back.to_text()} differs")

    signed_total = sum(domain.values())
    methods = {
        "domain_size": len(domain),
        "signed_total": signed_total,
        "closure_failures": closure_failures,
        "sign_flip_failures": sign_failures,
        "self_inverse_failures": self_inverse_failures,
        "fixed_points": fixed_points,
    }
    passed = (
        signed_total == 0
        and closure_failures == 0
        and sign_failures == 0
        and self_inverse_failures == 0
        and fixed_points == 0
    )
    return VerificationReport(
        identity=f"involution-{which}",
        params={"n": n, "r": r, "d": d},
        methods=methods,
        passed=passed,
        witness=witness,
        elapsed_ms=(time.perf_counter() - started) * 1000,
    )


def audit_bijections(
    n: int, r: int, d: int, budget: int | None = DEFAULT_BUDGET
) -> VerificationReport:
    """Two-sided audit of the three structural bijections at one (n, r, d):

    1. lifting to configurations then applying RSK lands exactly on the
       equal-shape tableau pairs with <= d columns and strict block descents;
    2. those pairs correspond to the closed reversed-family walks staying in
       the dominance region;
    3. prefix-profile walks: the profile map sends bounded configurations
       exactly onto the restricted walks that look like prefix profiles, with
       the crossing pairing as two-sided inverse.
    """
    started = time.perf_counter()
    m = n * r
    _require(_graph_bound(n, r) + factorial(m) * (m + 1), budget, "bijection audit")

    failures = 0
    witness = None

    def note(why):
        nonlocal failures, witness
        failures += 1
        if witness is None:
            witness = why

    bounded = [
        lift for lift, size in _lifted_configurations(n, r) if size <= d
    ]

    # --- RSK image characterization
    pairs_from_graphs = set()
    for lift in bounded:
        p, q = rsk(lift)
        if p.shape != q.shape:
            note(f"configuration {lift}: unequal shapes")
            continue
        if p.column_count > d:
            note(f"configuration {lift}: more than {d} columns")
        if m and not (
            blocks_strictly_below(p, n, r) and blocks_strictly_below(q, n, r)
        ):
            note(f"configuration {lift}: image lacks strict block descents")
        if rsk_inverse(p, q) != lift:
            note(f"configuration {lift}: insertion round trip failed")
        pairs_from_graphs.add((p, q))
    if len(pairs_from_graphs) != len(bounded):
        note("tableau-pair map is not injective")

    by_shape: dict[tuple[int, ...], list] = {}
    for t in enumerate_tableaux(m, d):
        if m == 0 or blocks_strictly_below(t, n, r):
            by_shape.setdefault(t.shape, []).append(t)
    pairs_direct = {
        (p, q) for shape in by_shape for p in by_shape[shape] for q in by_shape[shape]
    }
    if pairs_direct != pairs_from_graphs:
        note(
            f"pair sets differ: {len(pairs_direct)} direct vs "
            f"{len(pairs_from_graphs)} via graphs"
        )

    # --- pairs <-> region-staying closed walks
    walks_from_pairs = set()
    for p, q in pairs_direct:
        w = pair_walk(p, q, d=d)
        walks_from_pairs.add(w)
        if endpoint(w) != (0,) * w.d:
            note(f"pair walk {w.to_text()} is not closed")
    region_walks = set(iter_region_walks(n, r, d, budget=budget))
    if walks_from_pairs != region_walks:
        note(
            f"walk sets differ: {len(walks_from_pairs)} from pairs vs "
            f"{len(region_walks)} enumerated"
        )
    for w in region_walks:
        p = tableau_from_column_word(w.pos, w.d)
        q = tableau_from_column_word(w.neg[::-1], w.d)
        if m and (p, q) not in pairs_direct:
            note(f"region walk {w.to_text()} has no matching pair")
            break

    # --- profile walks
    images = set()
    for lift in bounded:
        w = profile_walk(lift, d=d)
        images.add(w)
        if not in_restricted_family(w, r, "matching"):
            note(f"profile walk {w.to_text()} violates the block conditions")
        if not is_profile_walk(w):
            note(f"profile walk {w.to_text()} fails its own characterization")
        back = crossing_pairing(w)
        if not back.is_complete or back.as_permutation() != lift:
            note(f"crossing pairing does not invert the profile of {lift}")
    if len(images) != len(bounded):
        note("profile map is not injective")
    direct_walks = set()
    for w in iter_profile_walks(n, r, d, budget=budget):
        if not is_profile_walk(w):
            note(f"enumerated walk {w.to_text()} fails the profile test")
        direct_walks.add(w)
        config = crossing_pairing(w)
        if not config.is_complete:
            note(f"profile walk {w.to_text()} is not closed")
            continue
        lift = config.as_permutation()
        if planar_matching_profile(lift).largest > d:
            note(f"profile walk {w.to_text()} maps outside the bounded family")
        if profile_walk(lift, d=w.d) != w:
            note(f"profile round trip failed for {w.to_text()}")
    if direct_walks != images:
        note(
            f"profile-walk sets differ: {len(direct_walks)} enumerated vs "
            f"{len(images)} images"
        )

    methods = {
        "configurations": len(bounded),
        "tableau_pairs": len(pairs_direct),
        "region_walks": len(region_walks),
        "profile_walks": len(direct_walks),
        "failures": failures,
    }
    sizes = {len(bounded), len(pairs_direct), len(region_walks), len(direct_walks)}
    passed = failures == 0 and len(sizes) == 1
    return VerificationReport(
        identity="bijections",
        params={"n": n, "r": r, "d": d},
        methods=methods,
        passed=passed,
        witness=witness,
        elapsed_ms=(time.perf_counter() - started) * 1000,
    )

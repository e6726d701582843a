"""Empirical vs exact distribution of the largest planar matching.

Configurations (uniform random perfect matchings of the split vertex
sets) are sampled with a fixed seed sequence and the observed largest
planar matching sizes are compared with the exact distribution obtained
by exhausting all (rn)! configurations.
"""

from itertools import permutations
from math import sqrt

from planarcount import planar_matching_profile, sample_configuration


def main():
    n, r, trials = 2, 2, 20_000
    m = n * r

    exact: dict[int, int] = {}
    for perm in permutations(range(1, m + 1)):
        size = planar_matching_profile(perm).largest
        exact[size] = exact.get(size, 0) + 1
    total = sum(exact.values())

    observed: dict[int, int] = {}
    for seed in range(trials):
        size = planar_matching_profile(sample_configuration(n, r, seed)).largest
        observed[size] = observed.get(size, 0) + 1

    print(f"largest planar matching of a random configuration, n={n}, r={r}")
    print(f"{'L':>3} {'exact':>10} {'observed':>10} {'z':>8}")
    for size in sorted(exact):
        p = exact[size] / total
        q = observed.get(size, 0) / trials
        se = sqrt(p * (1 - p) / trials)
        z = (q - p) / se if se else 0.0
        print(f"{size:>3} {p:>10.5f} {q:>10.5f} {z:>8.2f}")


if __name__ == "__main__":
    main()

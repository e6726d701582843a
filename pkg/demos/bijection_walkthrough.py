"""Follow one 2-regular multigraph through every structural map.

The running example is the 3x3 multiplicity matrix

        v1 v2 v3
    u1 [ 0  1  1 ]
    u2 [ 2  0  0 ]
    u3 [ 0  1  1 ]

Lifting it so that parallel edges cross gives a configuration (a
permutation of [6]); RSK turns that into a pair of standard Young
tableaux; the pair becomes a closed dominance-region walk; and the
prefix-profile map gives a second walk whose crossing pairing recovers
the configuration exactly.
"""

from planarcount import (
    Multigraph,
    canonical_lift,
    column_word,
    crossing_pairing,
    pair_walk,
    planar_matching_profile,
    profile_walk,
    project_configuration,
    occurrence_profile,
    rsk,
    rsk_inverse,
    stays_in_dominance_region,
)


def main():
    g = Multigraph(n=3, r=2, rows=((0, 1, 1), (2, 0, 0), (0, 1, 1)))
    print("multigraph rows:", g.to_text())

    lift = canonical_lift(g)
    print("\ncrossing lift (permutation of [6]):", lift)
    print("projecting back recovers the graph:", project_configuration(lift, 3, 2) == g)

    prof = planar_matching_profile(lift)
    print("\nlargest planar matching:", prof.largest)
    print("per-left-node matching sizes:", prof.left)
    print("per-right-node matching sizes:", prof.right)

    p, q = rsk(lift)
    print("\ninsertion tableau P:", p.to_text())
    print("recording tableau Q:", q.to_text())
    print("reverse bumping recovers the lift:", rsk_inverse(p, q) == lift)
    print("column words:", column_word(p), column_word(q))

    closed = pair_walk(p, q)
    print("\npair walk:", closed.to_text())
    print("stays in x1 >= x2 >= ... region:", stays_in_dominance_region(closed))

    walk = profile_walk(lift)
    print("\nprefix-profile walk:", walk.to_text())
    same, lower = occurrence_profile(walk)
    print("own-value occurrence counts:  ", same)
    print("lower-value occurrence counts:", lower)

    pairing = crossing_pairing(walk)
    print("\ncrossing pairing recovers the lift:", pairing.as_permutation() == lift)


if __name__ == "__main__":
    main()

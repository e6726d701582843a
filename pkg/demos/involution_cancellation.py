"""Watch the sign-reversing involution cancel the non-profile walks.

For n = 2, r = 1, d = 2 the restricted walks over Toeplitz endpoints
split into prefix-profile walks (counted by g) and the rest.  The
involution pairs each leftover walk with a partner of opposite endpoint
sign, so the leftovers contribute nothing to the signed sum.
"""

from planarcount import (
    count_bounded_matching,
    endpoint,
    is_profile_walk,
    iter_restricted_walks,
    iter_toeplitz,
    nonprofile_involution,
    signed_walk_sum,
)


def main():
    n, r, d = 2, 1, 2
    profile, leftovers = [], []
    for pi, point, sign in iter_toeplitz(d, 2 * n * r):
        for w in iter_restricted_walks(n, r, d, pi):
            (profile if is_profile_walk(w) else leftovers).append((w, sign))

    print(f"restricted walks over Toeplitz endpoints at n={n}, r={r}, d={d}:")
    print(f"  {len(profile)} prefix-profile walks, {len(leftovers)} leftovers\n")

    print("profile walks (all closed, sign +1):")
    for w, sign in profile:
        print(f"  {w.to_text()}")

    print("\nleftover walks paired by the involution:")
    seen = set()
    for w, sign in leftovers:
        if w in seen:
            continue
        partner = nonprofile_involution(w, r)
        seen.update({w, partner})
        print(
            f"  {w.to_text()} (ends {endpoint(w)}, sign {sign:+d})"
            f"  <->  {partner.to_text()} (ends {endpoint(partner)})"
        )

    signed_leftover = sum(sign for _, sign in leftovers)
    print(f"\nsigned total of leftovers: {signed_leftover}")
    print(f"signed walk sum:           {signed_walk_sum(n, r, d)}")
    print(f"graph count g({n};{d}):      {count_bounded_matching(n, r, d)}")


if __name__ == "__main__":
    main()

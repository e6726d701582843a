"""Gessel's identity, checked with exact rational power series.

The generating function sum_m u_m(d)/(m!)^2 x^(2m), where u_m(d) counts
permutations of [m] with no increasing subsequence longer than d, equals
the d x d determinant of modified Bessel series I_(|i-j|)(2x).  No
floating point anywhere: coefficients are exact fractions.
"""

from fractions import Fraction
from math import factorial

from planarcount import bessel_series, count_bounded_lis, series_determinant


def main():
    truncation = 12
    for d in (1, 2, 3):
        matrix = [
            [bessel_series(abs(i - j), truncation) for j in range(d)]
            for i in range(d)
        ]
        det = series_determinant(matrix)
        print(f"d = {d}")
        print(f"  det coefficients: {det}")
        for m in range(truncation // 2 + 1):
            lhs = det.coefficient(2 * m)
            rhs = Fraction(count_bounded_lis(m, d), factorial(m) ** 2)
            status = "ok" if lhs == rhs else "MISMATCH"
            print(f"  x^{2 * m:<2}  det: {str(lhs):>12}   u_{m}({d})/({m}!)^2: {str(rhs):>12}   {status}")
        print()


if __name__ == "__main__":
    main()

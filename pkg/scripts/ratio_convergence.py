"""Convergence of mu_{d,k}(P_m) / P_m^((d-k)/(d-1)) toward the limit constant.

The floor C(m+d-k-1, d-k) and the Perazzo entry h_k bracket mu_{d,k}(P_m); the floor
ratio approaches the constant, the Perazzo ratio a larger one.
"""

import argparse

import mpmath

from gkit.asymptotics import gaps_decreasing, limit_constant, ratio_scan


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--d", type=int, nargs="+", default=[4, 5, 6, 8])
    ap.add_argument("--exponents", type=int, nargs="+", default=[1, 2, 3, 4, 5])
    ap.add_argument("--digits", type=int, default=30)
    args = ap.parse_args()

    ms = [10**e for e in args.exponents]
    for d in args.d:
        for k in range(2, d // 2 + 1):
            const = limit_constant(d, k)
            rows = ratio_scan(d, k, ms, args.digits)
            print(f"d={d} k={k} limit={const.as_string(12)} gaps decreasing: {gaps_decreasing(rows)}")
            for row in rows:
                print(f"  m={row.m:<8} floor ratio {mpmath.nstr(row.lower_ratio, 12):<16}"
                      f" perazzo ratio {mpmath.nstr(row.perazzo_ratio, 12):<16}"
                      f" gap {mpmath.nstr(row.gap, 4)}")


if __name__ == "__main__":
    main()

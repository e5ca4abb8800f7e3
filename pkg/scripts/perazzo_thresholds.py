"""Totally non-unimodal thresholds and elimination-based minimality of full Perazzo vectors."""

import argparse
import time

from gkit.minimality import perazzo_minimality
from gkit.perazzo import nonunimodal_threshold, perazzo_hf


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--d-max", type=int, default=12)
    ap.add_argument("--minimality", nargs="*", default=["3,4", "4,4", "5,4", "6,4", "3,5", "4,5", "8,5",
                                                        "9,5", "10,5", "3,6", "3,7", "3,8"],
                    metavar="M,D")
    ap.add_argument("--max-drop", type=int, default=None)
    args = ap.parse_args()

    print("smallest m with h_1 > h_2 > ... > h_{d/2}:")
    for d in range(4, args.d_max + 1):
        m = nonunimodal_threshold(d)
        print(f"  d={d:<3} m={m}  {perazzo_hf(m, d)}")

    print("\nvectors below the Perazzo vector, ruled out by elimination:")
    for item in args.minimality:
        m, d = (int(x) for x in item.split(","))
        t = time.perf_counter()
        rep = perazzo_minimality(m, d, max_drop=args.max_drop)
        dt = time.perf_counter() - t
        status = "minimal" if rep.confirmed else "undecided"
        print(f"  m={m} d={d} {rep.candidate}: {status}; {rep.below} below, {rep.bad_shape} bad shape, "
              f"{rep.eliminated} eliminated, survivors {rep.survivors} ({dt:.2f}s)")


if __name__ == "__main__":
    main()

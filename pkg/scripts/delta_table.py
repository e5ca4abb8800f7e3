"""Print the delta(r) ledger and show where imported facts tighten the recomputed bounds."""

import argparse

from gkit.delta import ledger


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--degree", type=int, default=4, choices=[4, 5])
    ap.add_argument("--r-max", type=int, default=70)
    ap.add_argument("--changes-only", action="store_true",
                    help="only rows where imported facts change the interval")
    args = ap.parse_args()

    full = ledger(args.degree, args.r_max)
    bare = ledger(args.degree, args.r_max, use_cited=False)
    print(f"{'r':>5}  {'with facts':>12}  {'recomputed':>12}  provenance")
    for r in range(1, args.r_max + 1):
        a, b = full[r], bare[r]
        changed = (a.lower, a.upper) != (b.lower, b.upper)
        if args.changes_only and not changed:
            continue
        fmt = lambda rec: f"[{rec.lower},{'-' if rec.upper is None else rec.upper}]"
        mark = "*" if changed else " "
        print(f"{r:>5}  {fmt(a):>12}  {fmt(b):>12} {mark} {'; '.join(map(str, a.provenance))}")


if __name__ == "__main__":
    main()

"""Dissect the section search on the degree-5 Perazzo neighbours (1, P_m, h, h, P_m, 1).

For each m, report the candidate one below the Perazzo middle entry, the extremal
split (every section entry at its Green ceiling), whether that split is realizable,
the first surviving branch if any, and the chain lower bound for the surviving middle.
"""

import argparse
import json

from gkit.asymptotics import chain_from_codim
from gkit.elimination import section_eliminate
from gkit.perazzo import perazzo_hf


def report(m: int, depth: int) -> dict:
    h = list(perazzo_hf(m, 5))
    h[2] -= 1
    h[3] -= 1
    cert = section_eliminate(h, depth, trace=True)
    ext = cert.extremal
    row = {
        "m": m,
        "candidate": h,
        "verdict": cert.verdict.value,
        "extremal_B": ext["B"],
        "extremal_M": ext["M"],
        "extremal_B_is_o_sequence": ext["B_is_o_sequence"],
        "extremal_middle_verdict": ext.get("middle_verdict"),
        "stats": cert.stats,
    }
    branch = ext.get("first_decisive_branch")
    if cert.verdict.value == "Pass" and branch:
        mid = branch["M"]
        row["surviving_B"] = branch["B"]
        row["surviving_M"] = mid
        row["chain_bound_for_middle"] = chain_from_codim(mid[1], 4).values[2]
    return row


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m", type=int, nargs="+", default=list(range(3, 11)))
    ap.add_argument("--depth", type=int, default=2)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    rows = [report(m, args.depth) for m in args.m]
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    for row in rows:
        print(f"m={row['m']:>2} {','.join(map(str, row['candidate']))}: {row['verdict']}")
        print(f"     extremal M={row['extremal_M']} ({row['extremal_middle_verdict']}), "
              f"B realizable: {row['extremal_B_is_o_sequence']}")
        if "surviving_M" in row:
            print(f"     survivor B={row['surviving_B']} M={row['surviving_M']}, "
                  f"chain bound on its middle: {row['chain_bound_for_middle']}")


if __name__ == "__main__":
    main()

"""Bounds on delta(r) = r - mu(r) for socle degrees 4 and 5.

mu(r) is the least middle entry h with (1, r, h, r, 1) (resp. (1, r, h, h, r, 1))
Gorenstein.  Every bound carries provenance, and facts imported from the literature
are kept apart from what this package recomputes.

Rules used by :func:`ledger`:

* existence: the power-sum form gives delta >= 0; a full Perazzo form of type m
  plus s = r - P_m fresh d-th powers realizes middle entry h_mid(m) + s, so
  delta(r) >= P_m - h_mid(m) whenever P_m <= r.
* elimination: if every h <= h0 is eliminated then mu(r) > h0, so delta(r) <= r - h0 - 1.
  The closed-form lemmas are monotone in h; in degree 5 the section search then
  probes h0 + 1, h0 + 2, ... while it keeps eliminating.
* monotonicity: delta(r) <= delta(r + 1) (adding one power shows mu(r+1) <= mu(r) + 1).
* step rule (imported, optional): delta(r) <= delta(r - 1) + 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from gkit.elimination import gorf_test, gors_test, section_eliminate
from gkit.perazzo import perazzo_codim, perazzo_entry


class Kind(str, enum.Enum):
    POWER_SUM = "PowerSum"
    PERAZZO = "PerazzoExistence"
    ELIMINATION = "EliminationLemma"
    MONOTONICITY = "Monotonicity"
    STEP_RULE = "StepRule"
    CITED = "CitedFact"


@dataclass(frozen=True)
class Provenance:
    kind: Kind
    side: str  # "lower" or "upper"
    detail: str = ""

    def __str__(self) -> str:
        text = f"{self.side}:{self.kind.value}"
        return f"{text}({self.detail})" if self.detail else text


@dataclass
class DeltaRecord:
    r: int
    d: int
    lower: int
    upper: int | None  # None means unbounded
    provenance: list[Provenance] = field(default_factory=list)

    def __post_init__(self):
        if self.upper is not None and self.lower > self.upper:
            raise ValueError(f"empty interval for delta({self.r}): [{self.lower}, {self.upper}]")

    @property
    def status(self) -> str:
        return "Exact" if self.lower == self.upper else "Interval"

    @property
    def cited(self) -> bool:
        return any(p.kind is Kind.CITED for p in self.provenance)

    def sides(self, kind: Kind) -> set[str]:
        return {p.side for p in self.provenance if p.kind is kind}

    def contains(self, other: "DeltaRecord") -> bool:
        hi_ok = self.upper is None or (other.upper is not None and other.upper <= self.upper)
        return self.lower <= other.lower and hi_ok

    def to_json(self) -> dict:
        return {"r": self.r, "d": self.d, "lower": self.lower, "upper": self.upper,
                "status": self.status, "provenance": [str(p) for p in self.provenance]}


# rules taken from the literature rather than recomputed here
IMPORTED = frozenset({Kind.CITED, Kind.STEP_RULE})


def _check_degree(d: int) -> None:
    if d not in (4, 5):
        raise ValueError("socle degree must be 4 or 5")


def perazzo_lower(m: int, d: int) -> int:
    """Lower bound for delta at the type-m full Perazzo codimension."""
    _check_degree(d)
    if m < 3:
        raise ValueError("m must be >= 3")
    if d == 4:
        return comb(m, 3)
    num = (m + 5) * comb(m, 3)
    if num % 4:
        raise ArithmeticError(f"(m+5)/4 * C(m,3) is not an integer for m={m}")
    return num // 4


def _middle(m: int, d: int) -> int:
    return perazzo_entry(m, d, 2)


# ---------------------------------------------------------------------------
# values stated in the literature

def _cited(side, text):
    return Provenance(Kind.CITED, side, text)


def _rec(r, d, lo, hi, *prov):
    return DeltaRecord(r, d, lo, hi, list(prov))


def known_table(d: int) -> list[DeltaRecord]:
    _check_degree(d)
    out: list[DeltaRecord] = []
    if d == 4:
        for r in range(1, 13):
            out.append(_rec(r, 4, 0, 0,
                            Provenance(Kind.POWER_SUM, "lower"),
                            _cited("upper", "(1,12,11,12,1) is not Gorenstein"),
                            Provenance(Kind.MONOTONICITY, "upper", "from r=12")))
        for r in range(13, 20):
            out.append(_rec(r, 4, 1, 1,
                            Provenance(Kind.PERAZZO, "lower", "m=3, P=13"),
                            Provenance(Kind.MONOTONICITY, "lower", "from r=13"),
                            _cited("upper", "(1,19,17,19,1) is not Gorenstein"),
                            Provenance(Kind.MONOTONICITY, "upper", "from r=19")))
        out.append(_rec(20, 4, 2, 2,
                        _cited("lower", "(1,20,18,20,1) is Gorenstein"),
                        Provenance(Kind.STEP_RULE, "upper", "delta(19)=1")))
        for r in (21, 22, 23):
            out.append(_rec(r, 4, 2, 4,
                            Provenance(Kind.MONOTONICITY, "lower", "from r=20"),
                            Provenance(Kind.MONOTONICITY, "upper", "from r=24")))
        out.append(_rec(24, 4, 4, 4,
                        Provenance(Kind.PERAZZO, "lower", "m=4, P=24"),
                        Provenance(Kind.ELIMINATION, "upper", "gors (24,19)")))
        out.append(_rec(25, 4, 4, 4,
                        Provenance(Kind.MONOTONICITY, "lower", "from r=24"),
                        _cited("lower", "(1,25,21,25,1) is Gorenstein"),
                        Provenance(Kind.ELIMINATION, "upper", "gors (25,20)")))
        for r, h in ((26, 21), (27, 22)):
            out.append(_rec(r, 4, 4, 4,
                            Provenance(Kind.MONOTONICITY, "lower", "from r=24"),
                            _cited("upper", f"(1,{r},{h},{r},1) excluded by Gotzmann persistence "
                                            "and a scheme classification")))
        out.append(_rec(40, 4, 10, 10,
                        Provenance(Kind.PERAZZO, "lower", "m=5, P=40"),
                        Provenance(Kind.ELIMINATION, "upper", "gors (40,29)")))
        out.append(_rec(62, 4, 20, 21,
                        Provenance(Kind.PERAZZO, "lower", "m=6, P=62"),
                        Provenance(Kind.ELIMINATION, "upper", "gors (62,40)")))
        return out

    for r in range(1, 17):
        out.append(_rec(r, 5, 0, 0, Provenance(Kind.POWER_SUM, "lower"),
                        _cited("upper", "delta(16)=0 in socle degree 5")))
    out.append(_rec(17, 5, 1, 1, _cited("lower", "delta(17)=1 in socle degree 5"),
                    _cited("upper", "delta(17)=1 in socle degree 5")))
    for r in range(18, 26):
        prov = [_cited("lower", "delta(r)=2 for 18<=r<=25"), _cited("upper", "delta(r)=2 for 18<=r<=25")]
        if r == 18:
            prov += [Provenance(Kind.PERAZZO, "lower", "m=3, P=18"),
                     Provenance(Kind.ELIMINATION, "upper", "gorf (18,15)")]
        out.append(_rec(r, 5, 2, 2, *prov))
    for m in range(4, 11):
        r = perazzo_codim(m, 5)
        v = perazzo_lower(m, 5)
        h = _middle(m, 5) - 1
        if m <= 8:
            upper = Provenance(Kind.ELIMINATION, "upper", f"gorf ({r},{h})")
        else:
            upper = _cited("upper", f"(1,{r},{h},{h},{r},1) claimed non-Gorenstein by a section "
                                    "diagram; not reproduced by the exhaustive section search")
        out.append(_rec(r, 5, v, v, Provenance(Kind.PERAZZO, "lower", f"m={m}, P={r}"), upper))
    return out


def table_lookup(d: int) -> dict[int, DeltaRecord]:
    return {rec.r: rec for rec in known_table(d)}


# ---------------------------------------------------------------------------
# recomputation


def _closed_form_test(r, h, d):
    return gors_test(r, h) if d == 4 else gorf_test(r, h)


def elimination_scan(r: int, d: int, search: bool | None = None) -> tuple[int | None, list[str]]:
    """Largest h0 < r with every h <= h0 eliminated, and the witnesses used.

    Returns (None, []) when h = 0 already survives.
    """
    _check_degree(d)
    if search is None:
        search = d == 5
    if not _closed_form_test(r, 0, d).eliminated:
        best = None
    else:
        # the closed-form lemmas are monotone in h: eliminated values form a prefix
        lo, hi = 0, r
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if _closed_form_test(r, mid, d).eliminated:
                lo = mid
            else:
                hi = mid
        best = lo
    rule = "gors" if d == 4 else "gorf"
    witnesses = [f"{rule} ({r},{best})"] if best is not None else []
    if search and d == 5 and r >= 3:
        h = (best if best is not None else -1) + 1
        while h < r and section_eliminate((1, r, h, h, r, 1), 2).eliminated:
            best = h
            h += 1
        if best is not None and (not witnesses or not witnesses[0].endswith(f",{best})")):
            witnesses.append(f"section search ({r},{best})")
    return best, witnesses


def _computed_bounds(r: int, d: int, search: bool | None):
    lower, lprov = 0, [Provenance(Kind.POWER_SUM, "lower")]
    m = 2
    while perazzo_codim(m, d) <= r:
        bound = perazzo_codim(m, d) - _middle(m, d)
        if bound > lower:
            lower = bound
            s = r - perazzo_codim(m, d)
            lprov = [Provenance(Kind.PERAZZO, "lower", f"m={m}, P={perazzo_codim(m, d)}, s={s}")]
        m += 1
    h0, witnesses = elimination_scan(r, d, search)
    if h0 is None:
        return lower, lprov, None, []
    return lower, lprov, r - h0 - 1, [Provenance(Kind.ELIMINATION, "upper", w) for w in witnesses]


def _merge(prov: list[Provenance], new: list[Provenance]) -> list[Provenance]:
    out = list(prov)
    for p in new:
        if p not in out:
            out.append(p)
    return out


@lru_cache(maxsize=None)
def _ledger(d: int, r_max: int, use_cited: bool, step_rule: bool, search: bool | None):
    table = table_lookup(d)
    lo: dict[int, int] = {}
    hi: dict[int, int | None] = {}
    lp: dict[int, list[Provenance]] = {}
    up: dict[int, list[Provenance]] = {}
    for r in range(1, r_max + 1):
        lo[r], lp[r], hi[r], up[r] = _computed_bounds(r, d, search)
        if use_cited and r in table:
            rec = table[r]
            cites = [p for p in rec.provenance if p.kind in IMPORTED]
            cited_sides = {p.side for p in cites}
            if "lower" in cited_sides and rec.lower > lo[r]:
                lo[r], lp[r] = rec.lower, [p for p in cites if p.side == "lower"]
            if "upper" in cited_sides and (hi[r] is None or rec.upper < hi[r]):
                hi[r], up[r] = rec.upper, [p for p in cites if p.side == "upper"]

    changed = True
    while changed:
        changed = False
        for r in range(2, r_max + 1):
            if lo[r - 1] > lo[r]:
                lo[r] = lo[r - 1]
                lp[r] = _merge([Provenance(Kind.MONOTONICITY, "lower", f"from r={r - 1}")], lp[r - 1])
                changed = True
        for r in range(r_max - 1, 0, -1):
            if hi[r + 1] is not None and (hi[r] is None or hi[r + 1] < hi[r]):
                hi[r] = hi[r + 1]
                up[r] = _merge([Provenance(Kind.MONOTONICITY, "upper", f"from r={r + 1}")], up[r + 1])
                changed = True
        if step_rule:
            for r in range(2, r_max + 1):
                if hi[r - 1] is not None and (hi[r] is None or hi[r - 1] + 1 < hi[r]):
                    hi[r] = hi[r - 1] + 1
                    up[r] = _merge([Provenance(Kind.STEP_RULE, "upper", f"from r={r - 1}")], up[r - 1])
                    changed = True
            for r in range(r_max, 1, -1):
                if lo[r] - 1 > lo[r - 1]:
                    lo[r - 1] = lo[r] - 1
                    lp[r - 1] = _merge([Provenance(Kind.STEP_RULE, "lower", f"from r={r}")], lp[r])
                    changed = True
    return {r: DeltaRecord(r, d, lo[r], hi[r], lp[r] + up[r]) for r in range(1, r_max + 1)}


def ledger(d: int, r_max: int, *, use_cited: bool = True, step_rule: bool = False,
           search: bool | None = None) -> dict[int, DeltaRecord]:
    """Records for r = 1..r_max.  Records past r_max still feed monotonicity."""
    _check_degree(d)
    horizon = max(r_max, max(table_lookup(d)))
    full = _ledger(d, horizon, use_cited, step_rule, search)
    return {r: full[r] for r in range(1, r_max + 1)}


def derive_bounds(r: int, d: int, *, use_cited: bool = True, step_rule: bool = False) -> DeltaRecord:
    if r < 1:
        raise ValueError("r must be >= 1")
    return ledger(d, r, use_cited=use_cited, step_rule=step_rule)[r]


def step_rule_violations(records: dict[int, DeltaRecord]) -> list[int]:
    """r where both neighbours are Exact and delta jumps by more than one."""
    bad = []
    for r, rec in records.items():
        prev = records.get(r - 1)
        if prev and prev.status == "Exact" and rec.status == "Exact" and rec.lower > prev.lower + 1:
            bad.append(r)
    return bad


def to_csv_rows(records) -> list[list[str]]:
    rows = [["r", "lower", "upper", "status", "provenance"]]
    for rec in records:
        rows.append([str(rec.r), str(rec.lower), "" if rec.upper is None else str(rec.upper),
                     rec.status, "; ".join(str(p) for p in rec.provenance)])
    return rows

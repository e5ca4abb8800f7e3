"""Sound non-Gorenstein certificates for symmetric candidates.

Every test here can only *eliminate*: a Pass or Unknown verdict never claims that a
candidate is Gorenstein.

Section search.  For a Gorenstein algebra A with Hilbert function H (socle degree d)
and a general linear form L there is an exact sequence

    0 -> Q/(I:L)(-1) -> Q/I -> Q/(I, L) -> 0

where Q/(I:L) is Gorenstein of socle degree d-1 (it is Q/Ann(L f)).  So
H_k = M_{k-1} + B_k with M symmetric, B an O-sequence, B_0 = 1 and
B_k <= green_bound(H_k, k).  ``section_eliminate`` enumerates every such split and
eliminates H when every branch is infeasible or has an eliminated M.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from gkit.binomial import binom, expand, gotzmann_growth, green_bound, macaulay_bound, shift
from gkit.sequences import is_gorenstein_shape, is_symmetric


class Verdict(str, enum.Enum):
    ELIMINATED = "Eliminated"
    PASS = "Pass"
    UNKNOWN = "Unknown"


class Rule(str, enum.Enum):
    GORS = "Gors"
    GORF = "Gorf"
    SECTION = "SectionSearch"
    CITED = "CitedFact"


def _lt(a: int, b: int) -> int:
    return int(a < b)


def _le(a: int, b: int) -> int:
    return int(a <= b)


def _tec_value(k: int, d: int) -> int:
    return shift(expand(binom(k + 1, 2), d - k), -1, 0)


# Every step of a certificate names one of these; replay re-evaluates it.
STEP_OPS: dict[str, Callable[..., int]] = {
    "green_bound": green_bound,
    "macaulay_bound": macaulay_bound,
    "gotzmann_growth": gotzmann_growth,
    "sub": lambda a, b: a - b,
    "lt": _lt,
    "le": _le,
    "tec_value": _tec_value,
}


@dataclass
class Step:
    desc: str
    op: str
    values: list[int]  # arguments followed by the result

    def check(self) -> bool:
        return STEP_OPS[self.op](*self.values[:-1]) == self.values[-1]

    def to_json(self) -> dict:
        return {"desc": self.desc, "op": self.op, "values": list(self.values)}


@dataclass
class EliminationCertificate:
    candidate: tuple[int, ...]
    verdict: Verdict
    rule: Rule
    steps: list[Step] = field(default_factory=list)
    depth: int = 0
    stats: dict[str, int] = field(default_factory=dict)
    extremal: dict[str, Any] | None = None
    branches: list[dict[str, Any]] | None = None
    source: str | None = None

    @property
    def eliminated(self) -> bool:
        return self.verdict is Verdict.ELIMINATED

    def to_json(self) -> dict:
        out: dict[str, Any] = {
            "candidate": list(self.candidate),
            "verdict": self.verdict.value,
            "rule": self.rule.value,
            "steps": [s.to_json() for s in self.steps],
            "depth": self.depth,
        }
        if self.stats:
            out["stats"] = dict(self.stats)
        if self.extremal is not None:
            out["extremal"] = self.extremal
        if self.branches is not None:
            out["branches"] = self.branches
        if self.source is not None:
            out["source"] = self.source
        return out

    @classmethod
    def from_json(cls, data: dict | str) -> "EliminationCertificate":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            candidate=tuple(data["candidate"]),
            verdict=Verdict(data["verdict"]),
            rule=Rule(data["rule"]),
            steps=[Step(s["desc"], s["op"], list(s["values"])) for s in data["steps"]],
            depth=data.get("depth", 0),
            stats=dict(data.get("stats", {})),
            extremal=data.get("extremal"),
            branches=data.get("branches"),
            source=data.get("source"),
        )


def _step(steps: list[Step], desc: str, op: str, *args: int) -> int:
    value = STEP_OPS[op](*args)
    steps.append(Step(desc, op, [*args, value]))
    return value


# ---------------------------------------------------------------------------
# closed-form lemmas for socle degree 4 and 5


def _closed_form(r: int, h: int, degree: int, rule: Rule, candidate) -> EliminationCertificate:
    if h > r:
        raise ValueError(f"lemma needs h <= r, got h={h} > r={r}")
    if h < 0 or r < 1:
        raise ValueError("need r >= 1 and h >= 0")
    steps: list[Step] = []
    g = _step(steps, f"Green bound s <= (r_({degree}))^-1_0", "green_bound", r, degree)
    u = _step(steps, "u = r - h", "sub", r, h)
    x = _step(steps, "s - u at s = Green bound", "sub", g, u)
    if x < 0:
        # the degree-2 section entry s - u would be negative for every admissible s
        _step(steps, "s - u < 0", "lt", x, 0)
        return EliminationCertificate(tuple(candidate), Verdict.ELIMINATED, rule, steps)
    if degree == 3:
        grown = _step(steps, "((s-u)_(2))^1_1", "macaulay_bound", x, 2)
    else:
        grown = _step(steps, "((s-u)_(2))^2_2", "gotzmann_growth", x, 2, 2)
    failed = _step(steps, "growth < Green bound", "lt", grown, g)
    verdict = Verdict.ELIMINATED if failed else Verdict.PASS
    return EliminationCertificate(tuple(candidate), verdict, rule, steps)


def gors_test(r: int, h: int) -> EliminationCertificate:
    """Closed-form test for (1, r, h, r, 1), h <= r."""
    return _closed_form(r, h, 3, Rule.GORS, (1, r, h, r, 1))


def gorf_test(r: int, h: int) -> EliminationCertificate:
    """Closed-form test for (1, r, h, h, r, 1), h <= r."""
    return _closed_form(r, h, 4, Rule.GORF, (1, r, h, h, r, 1))


def tec_check(k: int, d: int) -> bool:
    """((C(k+1, 2))_(d-k))^-1_0 <= k - 2, for 2 <= k <= d // 2."""
    if d < 4:
        raise ValueError("d must be >= 4")
    if not 2 <= k <= d // 2:
        raise ValueError(f"k must lie in [2, {d // 2}]")
    return _tec_value(k, d) <= k - 2


def closed_form_test(h: Sequence[int]) -> EliminationCertificate | None:
    """gors/gorf for symmetric socle degree 4/5 candidates with middle entry <= h_1, else None."""
    h = tuple(h)
    d = len(h) - 1
    if d < 4 or h[0] != 1 or not is_symmetric(h):
        return None
    if d == 4 and h[2] <= h[1]:
        return gors_test(h[1], h[2])
    if d == 5 and h[2] == h[3] and h[2] <= h[1]:
        return gorf_test(h[1], h[2])
    return None


# ---------------------------------------------------------------------------
# section search


class _CapReached(Exception):
    pass


class _Search:
    def __init__(self, h, max_depth, branch_cap, trace):
        self.h = h
        self.d = len(h) - 1
        self.max_depth = max_depth
        self.branch_cap = branch_cap
        self.trace = trace
        self.ceil = [None] + [min(green_bound(h[k], k), h[k]) for k in range(1, self.d + 1)]
        self.nodes = 0
        self.stats = {"leaves": 0, "eliminated_middle": 0, "middle_not_o_sequence": 0,
                      "unknown": 0, "survived": 0, "pruned_macaulay": 0, "pruned_range": 0}
        self.branches: list[dict] = []
        self.first_survivor = None
        self.first_unknown = None
        self.first_eliminated = None
        self.sub_cache: dict[tuple[int, ...], EliminationCertificate] = {}

    # M has indices 0..d-1; B has indices 0..d
    def run(self) -> None:
        d = self.d
        m = [None] * d
        m[0] = m[d - 1] = 1
        b = [None] * (d + 1)
        b[0] = 1
        self._descend(d, m, b)

    def _set_m(self, m, j, value):
        mirror = self.d - 1 - j
        m[j] = value
        m[mirror] = value
        # the mirror fixes B at degree mirror+1 < j+1; reject early if out of range
        k = mirror + 1
        forced = self.h[k] - value
        return 0 <= forced <= self.ceil[k]

    def _descend(self, k, m, b):
        if k == 0:
            self._leaf(tuple(m), tuple(b))
            return
        self.nodes += 1
        if self.nodes > self.branch_cap:
            raise _CapReached
        j = k - 1
        if m[j] is not None:
            value = self.h[k] - m[j]
            if not 0 <= value <= self.ceil[k]:
                self.stats["pruned_range"] += 1
                return
            if k < self.d and b[k + 1] > macaulay_bound(value, k):
                self.stats["pruned_macaulay"] += 1
                return
            b[k] = value
            self._descend(k - 1, m, b)
            b[k] = None
            return
        for value in range(self.ceil[k], -1, -1):
            if k < self.d and b[k + 1] > macaulay_bound(value, k):
                # maximal growth is monotone, every smaller value fails too
                self.stats["pruned_macaulay"] += 1
                break
            saved = list(m)
            if self._set_m(m, j, self.h[k] - value):
                b[k] = value
                self._descend(k - 1, m, b)
                b[k] = None
            else:
                self.stats["pruned_range"] += 1
            m[:] = saved
            if self.first_survivor is not None:
                return

    def _test_middle(self, m):
        dm = len(m) - 1
        if not is_gorenstein_shape(m):
            return "middle_not_o_sequence", None
        if dm in (4, 5):
            cert = closed_form_test(m)
            if cert is None:
                return "survived", None
            return ("eliminated_middle" if cert.eliminated else "survived"), cert
        if dm <= 3:
            return "survived", None
        if self.max_depth <= 1:
            return "unknown", None
        if m not in self.sub_cache:
            self.sub_cache[m] = section_eliminate(m, self.max_depth - 1, self.branch_cap)
        cert = self.sub_cache[m]
        outcome = {Verdict.ELIMINATED: "eliminated_middle", Verdict.PASS: "survived",
                   Verdict.UNKNOWN: "unknown"}[cert.verdict]
        return outcome, cert

    def _leaf(self, m, b):
        self.stats["leaves"] += 1
        outcome, cert = self._test_middle(m)
        self.stats[outcome] += 1
        record = {"B": list(b), "M": list(m), "outcome": outcome,
                  "rule": cert.rule.value if cert else None}
        if self.trace:
            self.branches.append(record)
        if outcome == "survived":
            if self.first_survivor is None:
                self.first_survivor = (record, cert)
        elif outcome == "unknown":
            if self.first_unknown is None:
                self.first_unknown = (record, cert)
        elif self.first_eliminated is None:
            self.first_eliminated = (record, cert)


def extremal_branch(h: Sequence[int]) -> dict[str, Any]:
    """Split with every free section entry at its Green ceiling (ignores feasibility)."""
    h = tuple(h)
    d = len(h) - 1
    m = [None] * d
    m[0] = m[d - 1] = 1
    b = [None] * (d + 1)
    b[0] = 1
    for k in range(d, 0, -1):
        j = k - 1
        if m[j] is None:
            value = min(green_bound(h[k], k), h[k])
            m[j] = m[d - 1 - j] = h[k] - value
        b[k] = h[k] - m[j]
    return {"B": b, "M": m}


def section_eliminate(h: Sequence[int], max_depth: int = 2, branch_cap: int = 10**6,
                      trace: bool = False) -> EliminationCertificate:
    """Exhaustive generic-linear-section case split; see the module docstring."""
    h = tuple(int(x) for x in h)
    d = len(h) - 1
    if d < 3:
        raise ValueError("socle degree must be >= 3")
    if not is_symmetric(h) or h[0] != 1 or h[-1] != 1:
        raise ValueError("candidate must be symmetric with h_0 = h_d = 1")
    if max_depth < 1 or branch_cap < 1:
        raise ValueError("max_depth and branch_cap must be positive")

    search = _Search(h, max_depth, branch_cap, trace)
    capped = False
    try:
        search.run()
    except _CapReached:
        capped = True

    steps: list[Step] = []
    for k in range(1, d + 1):
        _step(steps, f"Green ceiling for the section in degree {k}", "green_bound", h[k], k)

    ext = extremal_branch(h)
    ext_b, ext_m = ext["B"], ext["M"]
    ext["B_is_o_sequence"] = all(x >= 0 for x in ext_b) \
        and all(ext_b[k + 1] <= macaulay_bound(ext_b[k], k) for k in range(1, d))
    ext_cert = closed_form_test(ext_m) if is_gorenstein_shape(ext_m) else None
    if ext_cert is not None:
        ext["middle_verdict"] = ext_cert.verdict.value
        ext["middle_rule"] = ext_cert.rule.value
        for s in ext_cert.steps:
            steps.append(Step(f"extremal middle {tuple(ext_m)}: {s.desc}", s.op, s.values))

    stats = dict(search.stats, nodes=search.nodes)
    if search.first_survivor is not None:
        verdict = Verdict.PASS
        witness = search.first_survivor
    elif capped or search.first_unknown is not None:
        verdict = Verdict.UNKNOWN
        witness = search.first_unknown
    else:
        verdict = Verdict.ELIMINATED
        witness = search.first_eliminated
    if witness is not None:
        record, cert = witness
        ext["first_decisive_branch"] = record
        if cert is not None:
            for s in cert.steps:
                steps.append(Step(f"branch middle {tuple(record['M'])}: {s.desc}", s.op, s.values))
    if capped:
        stats["capped"] = 1
        stats["branch_cap"] = branch_cap
    return EliminationCertificate(h, verdict, Rule.SECTION, steps, depth=max_depth, stats=stats,
                                  extremal=ext, branches=search.branches if trace else None)


# ---------------------------------------------------------------------------
# facts decided in the literature by arguments not mechanized here

CITED_NON_GORENSTEIN: dict[tuple[int, ...], str] = {
    (1, 12, 11, 12, 1): "literature: (1,12,11,12,1) is not Gorenstein; the smallest non-unimodal case is r=13",
    (1, 19, 17, 19, 1): "literature: (1,19,17,19,1) is not Gorenstein",
    (1, 26, 21, 26, 1): "Gotzmann persistence + scheme classification (plane union line)",
    (1, 27, 22, 27, 1): "Gotzmann persistence + scheme classification (plane union line)",
    (1, 17, 15, 15, 17, 1): "literature: delta(17) = 1 in socle degree 5",
}


def cited_fact(h: Sequence[int]) -> EliminationCertificate | None:
    h = tuple(h)
    if h in CITED_NON_GORENSTEIN:
        return EliminationCertificate(h, Verdict.ELIMINATED, Rule.CITED, [],
                                      source=CITED_NON_GORENSTEIN[h])
    return None


def eliminate(h: Sequence[int], max_depth: int = 2, branch_cap: int = 10**6,
              use_cited: bool = False, trace: bool = False) -> EliminationCertificate:
    """Closed-form lemma first, then the section search, then (optionally) cited facts."""
    h = tuple(int(x) for x in h)
    cert = closed_form_test(h)
    if cert is not None and cert.eliminated:
        return cert
    search = section_eliminate(h, max_depth, branch_cap, trace=trace)
    if search.eliminated or not use_cited:
        return search
    return cited_fact(h) or search


def replay(cert: EliminationCertificate, rerun: bool = True) -> bool:
    """Re-check every recorded step; for a section search also redo the search."""
    if not all(step.check() for step in cert.steps):
        return False
    if cert.rule is Rule.SECTION and rerun:
        again = section_eliminate(cert.candidate, cert.depth or 1,
                                  branch_cap=cert.stats.get("branch_cap", 10**6))
        return again.verdict is cert.verdict and again.stats == cert.stats
    if cert.rule in (Rule.GORS, Rule.GORF):
        d = len(cert.candidate) - 1
        again = (gors_test if d == 4 else gorf_test)(cert.candidate[1], cert.candidate[2])
        return again.verdict is cert.verdict and [s.values for s in again.steps] == [s.values for s in cert.steps]
    return True

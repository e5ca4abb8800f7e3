"""Regression claims: published numeric values, each checked by recomputation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from gkit import apolarity, asymptotics, binomial, delta, elimination, perazzo, sequences


@dataclass(frozen=True)
class Claim:
    name: str
    statement: str
    check: Callable[[], tuple[bool, str]]


def _eq(actual, expected) -> tuple[bool, str]:
    return actual == expected, f"got {actual!r}, expected {expected!r}"


def _expand_text(k, i):
    return lambda: _eq(str(binomial.expand(k, i)), _EXPANSIONS[(k, i)])


_EXPANSIONS = {(24, 3): "C(6,3)+C(3,2)+C(1,1)", (40, 3): "C(7,3)+C(3,2)+C(2,1)",
               (25, 3): "C(6,3)+C(3,2)+C(2,1)"}


def _chain(r, degree, green, grown):
    def check():
        g = binomial.green_bound(r, degree)
        h = {3: {24: 19, 40: 29, 25: 20, 62: 40},
             4: {39: 29, 75: 49, 132: 76, 217: 111, 338: 155}}[degree][r]
        x = g - (r - h)
        got = binomial.macaulay_bound(x, 2) if degree == 3 else binomial.gotzmann_growth(x, 2, 2)
        return _eq((g, got), (green, grown))
    return check


def _verdict(test, r, h, expected):
    return lambda: _eq(test(r, h).verdict.value, expected)


def _section(h, expected, middle):
    def check():
        cert = elimination.section_eliminate(h, 2)
        return _eq((cert.verdict.value, tuple(cert.extremal["M"])), (expected, middle))
    return check


def _table(d, r, lo, hi):
    def check():
        rec = delta.table_lookup(d)[r]
        return _eq((rec.lower, rec.upper), (lo, hi))
    return check


def _derived(d, r, lo, hi):
    def check():
        rec = delta.derive_bounds(r, d)
        return _eq((rec.lower, rec.upper), (lo, hi))
    return check


def _cli(argv, predicate, label):
    def check():
        from gkit.cli import run
        res = run(argv)
        ok = predicate(res)
        return ok, label if ok else f"{label}: got exit {res.exit_code}, output {res.output!r}"
    return check


CLAIMS: list[Claim] = [
    Claim("expand-24", "24 = C(6,3)+C(3,2)+C(1,1)", _expand_text(24, 3)),
    Claim("expand-40", "40 = C(7,3)+C(3,2)+C(2,1)", _expand_text(40, 3)),
    Claim("expand-25", "25 = C(6,3)+C(3,2)+C(2,1)", _expand_text(25, 3)),
    Claim("green-62", "(62_(3))^-1_0 = 38", lambda: _eq(binomial.green_bound(62, 3), 38)),
    Claim("green-25", "(25_(3))^-1_0 = 12", lambda: _eq(binomial.green_bound(25, 3), 12)),
    Claim("green-39", "(39_(4))^-1_0 = 16", lambda: _eq(binomial.green_bound(39, 4), 16)),
    Claim("green-338", "(338_(4))^-1_0 = 212", lambda: _eq(binomial.green_bound(338, 4), 212)),
    Claim("macaulay-6", "((6)_(2))^1_1 = 10", lambda: _eq(binomial.macaulay_bound(6, 2), 10)),
    Claim("macaulay-11", "((11)_(2))^1_1 = 21", lambda: _eq(binomial.macaulay_bound(11, 2), 21)),
    Claim("chain-24", "r=24: 11 then 10", _chain(24, 3, 11, 10)),
    Claim("chain-40", "r=40: 22 then 21", _chain(40, 3, 22, 21)),
    Claim("chain-25", "r=25: 12 then 11", _chain(25, 3, 12, 11)),
    Claim("chain-62", "r=62: 38 then 36", _chain(62, 3, 38, 36)),
    Claim("chain-39", "r=39: 16 then 15", _chain(39, 4, 16, 15)),
    Claim("chain-75", "r=75: 36 then 35", _chain(75, 4, 36, 35)),
    Claim("chain-132", "r=132: 71 then 70", _chain(132, 4, 71, 70)),
    Claim("chain-217", "r=217: 128 then 127", _chain(217, 4, 128, 127)),
    Claim("chain-338", "r=338: 212 then 211", _chain(338, 4, 212, 211)),
    Claim("shape-13", "(1,13,12,13,1) passes the Gorenstein shape test",
          lambda: _eq(sequences.is_gorenstein_shape((1, 13, 12, 13, 1)), True)),
    Claim("nonunimodal-13", "(1,13,12,13,1) is totally non-unimodal",
          lambda: _eq(sequences.is_totally_nonunimodal((1, 13, 12, 13, 1)), True)),
    Claim("perazzo-3-4", "full Perazzo m=3, d=4 has (1,13,12,13,1)",
          lambda: _eq(perazzo.perazzo_hf(3, 4), (1, 13, 12, 13, 1))),
    Claim("perazzo-3-5", "full Perazzo m=3, d=5 has (1,18,16,16,18,1)",
          lambda: _eq(perazzo.perazzo_hf(3, 5), (1, 18, 16, 16, 18, 1))),
    Claim("perazzo-4-5", "full Perazzo m=4, d=5 has (1,39,30,30,39,1)",
          lambda: _eq(perazzo.perazzo_hf(4, 5), (1, 39, 30, 30, 39, 1))),
    Claim("perazzo-6-4", "full Perazzo m=6, d=4 has (1,62,42,62,1)",
          lambda: _eq(perazzo.perazzo_hf(6, 4), (1, 62, 42, 62, 1))),
    Claim("codim-3-4", "codimension 13", lambda: _eq(perazzo.perazzo_codim(3, 4), 13)),
    Claim("codim-4-5", "codimension 39", lambda: _eq(perazzo.perazzo_codim(4, 5), 39)),
    Claim("codim-10-5", "codimension 725", lambda: _eq(perazzo.perazzo_codim(10, 5), 725)),
    Claim("gors-24-19", "(1,24,19,24,1) eliminated", _verdict(elimination.gors_test, 24, 19, "Eliminated")),
    Claim("gors-40-29", "(1,40,29,40,1) eliminated", _verdict(elimination.gors_test, 40, 29, "Eliminated")),
    Claim("gors-25-20", "(1,25,20,25,1) eliminated", _verdict(elimination.gors_test, 25, 20, "Eliminated")),
    Claim("gors-62-40", "(1,62,40,62,1) eliminated", _verdict(elimination.gors_test, 62, 40, "Eliminated")),
    Claim("gorf-39-29", "(1,39,29,29,39,1) eliminated", _verdict(elimination.gorf_test, 39, 29, "Eliminated")),
    Claim("gorf-75-49", "(1,75,49,49,75,1) eliminated", _verdict(elimination.gorf_test, 75, 49, "Eliminated")),
    Claim("gorf-132-76", "(1,132,76,76,132,1) eliminated", _verdict(elimination.gorf_test, 132, 76, "Eliminated")),
    Claim("gorf-217-111", "(1,217,111,111,217,1) eliminated",
          _verdict(elimination.gorf_test, 217, 111, "Eliminated")),
    Claim("gorf-338-155", "(1,338,155,155,338,1) eliminated",
          _verdict(elimination.gorf_test, 338, 155, "Eliminated")),
    Claim("section-504", "(1,504,209,209,504,1) eliminated; extremal middle (1,171,54,171,1)",
          _section((1, 504, 209, 209, 504, 1), "Eliminated", (1, 171, 54, 171, 1))),
    Claim("section-725", "(1,725,274,274,725,1) eliminated; extremal middle (1,226,65,226,1)",
          _section((1, 725, 274, 274, 725, 1), "Eliminated", (1, 226, 65, 226, 1))),
    Claim("sound-13", "(1,13,12,13,1) is never eliminated",
          lambda: (not elimination.eliminate((1, 13, 12, 13, 1), 3).eliminated, "search verdict")),
    Claim("apolar-3-4", "Q/Ann(f) for full Perazzo m=3, d=4 has (1,13,12,13,1)",
          lambda: _eq(apolarity.ann_hilbert_function(perazzo.full_perazzo_poly(3, 4)), (1, 13, 12, 13, 1))),
    Claim("apolar-3-5", "Q/Ann(f) for full Perazzo m=3, d=5 has (1,18,16,16,18,1)",
          lambda: _eq(apolarity.ann_hilbert_function(perazzo.full_perazzo_poly(3, 5)),
                      (1, 18, 16, 16, 18, 1))),
    Claim("bigraded-3-4", "A_2 = A_(0,2) + A_(1,1) = 6 + 6",
          lambda: _eq([apolarity.bigraded_hilbert(perazzo.full_perazzo_poly(3, 4), (10, 3))[c]
                       for c in ((0, 2), (1, 1))], [6, 6])),
    Claim("table-4-13", "delta(13) = 1", _table(4, 13, 1, 1)),
    Claim("table-4-13-kinds", "delta(13) rests on a Perazzo witness and a cited non-existence",
          lambda: _eq({p.kind.value for p in delta.table_lookup(4)[13].provenance}
                      >= {"PerazzoExistence", "CitedFact"}, True)),
    Claim("table-4-20", "delta(20) = 2", _table(4, 20, 2, 2)),
    Claim("table-4-22", "2 <= delta(22) <= 4", _table(4, 22, 2, 4)),
    Claim("table-4-24", "delta(24) = 4", _table(4, 24, 4, 4)),
    Claim("table-4-25", "delta(25) = 4", _table(4, 25, 4, 4)),
    Claim("table-4-26", "delta(26) = 4", _table(4, 26, 4, 4)),
    Claim("table-4-40", "delta(40) = 10", _table(4, 40, 10, 10)),
    Claim("table-4-62", "20 <= delta(62) <= 21", _table(4, 62, 20, 21)),
    Claim("table-5-17", "delta(17) = 1 in degree 5", _table(5, 17, 1, 1)),
    Claim("table-5-39", "delta(39) = 9 in degree 5", _table(5, 39, 9, 9)),
    Claim("perazzo-lower-4", "delta(24) >= C(4,3) = 4", lambda: _eq(delta.perazzo_lower(4, 4), 4)),
    Claim("perazzo-lower-5", "delta(40) >= C(5,3) = 10", lambda: _eq(delta.perazzo_lower(5, 4), 10)),
    Claim("derive-24", "derived delta(24) = 4", _derived(4, 24, 4, 4)),
    Claim("derive-40", "derived delta(40) = 10", _derived(4, 40, 10, 10)),
    Claim("derive-62", "derived 20 <= delta(62) <= 21", _derived(4, 62, 20, 21)),
    Claim("derive-14", "derived delta(14) = 1", _derived(4, 14, 1, 1)),
    Claim("derive-10", "derived delta(10) = 0", _derived(4, 10, 0, 0)),
    Claim("perazzo-exact-5", "delta(P_m) = (m+5)/4 C(m,3) for m = 3..10 in degree 5",
          lambda: _eq([(lambda rec: (rec.lower, rec.upper))(delta.derive_bounds(perazzo.perazzo_codim(m, 5), 5))
                       for m in range(3, 11)],
                      [(delta.perazzo_lower(m, 5),) * 2 for m in range(3, 11)])),
    Claim("chain-13", "mu chain at r=13 starts at 13 and stays above C(4,2)",
          lambda: _eq((asymptotics.mu_lower_chain(4, 3).values[1],
                       asymptotics.mu_lower_chain(4, 3).values[2] >= 6), (13, True))),
    Claim("chain-24-start", "mu chain at m=4, d=4 starts at 24",
          lambda: _eq(asymptotics.mu_lower_chain(4, 4).values[1], 24)),
    Claim("cli-expand", "`expand 24 3` prints the expansion",
          _cli(["expand", "24", "3"], lambda r: r.text == "C(6,3)+C(3,2)+C(1,1)", "expansion text")),
    Claim("cli-eliminate", "`eliminate --candidate 1,39,29,29,39,1` gives Eliminated via Gorf",
          _cli(["eliminate", "--candidate", "1,39,29,29,39,1", "--json", "--no-meta"],
               lambda r: r.output["verdict"] == "Eliminated" and r.output["rule"] == "Gorf",
               "Eliminated/Gorf")),
]


def run_claim(index: int) -> tuple[str, bool, str]:
    claim = CLAIMS[index]
    try:
        ok, detail = claim.check()
    except Exception as exc:  # a crash is a failed claim, reported as such
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return claim.name, bool(ok), detail

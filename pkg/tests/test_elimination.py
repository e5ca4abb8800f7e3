import json

import pytest
from hypothesis import given, settings, strategies as st

from gkit.elimination import (
    EliminationCertificate,
    Rule,
    Verdict,
    closed_form_test,
    cited_fact,
    eliminate,
    extremal_branch,
    gorf_test,
    gors_test,
    replay,
    section_eliminate,
    tec_check,
)
from gkit.minimality import check_minimal, perazzo_minimality, vectors_below
from gkit.perazzo import extend_with_powers, perazzo_hf

GORS_ELIMINATED = [(24, 19), (40, 29), (25, 20), (62, 40)]
GORF_ELIMINATED = [(39, 29), (75, 49), (132, 76), (217, 111), (338, 155)]


@pytest.mark.parametrize("r,h", GORS_ELIMINATED)
def test_gors_eliminates(r, h):
    cert = gors_test(r, h)
    assert cert.verdict is Verdict.ELIMINATED and cert.rule is Rule.GORS
    assert replay(cert)


@pytest.mark.parametrize("r,h", GORF_ELIMINATED)
def test_gorf_eliminates(r, h):
    cert = gorf_test(r, h)
    assert cert.verdict is Verdict.ELIMINATED and cert.rule is Rule.GORF
    assert replay(cert)


def test_certificate_values():
    steps = gors_test(24, 19).steps
    assert [s.values[-1] for s in steps][:1] == [11]
    assert any(s.op == "macaulay_bound" and s.values == [6, 2, 10] for s in steps)
    steps = gorf_test(39, 29).steps
    assert any(s.op == "gotzmann_growth" and s.values == [6, 2, 2, 15] for s in steps)


def test_soundness_on_perazzo_families():
    for m in range(2, 11):
        for d in (4, 5):
            h = perazzo_hf(m, d)
            test = gors_test if d == 4 else gorf_test
            assert test(h[1], h[2]).verdict is Verdict.PASS, (m, d)


def test_section_search_soundness():
    for d in range(3, 9):
        for m in range(2, 7):
            for s in (0, 1, 3):
                h = extend_with_powers(m, s, d)
                assert not eliminate(h, 2, branch_cap=10**5).eliminated, (m, d, s)


def test_thirteen_twelve_never_eliminated():
    for depth in (1, 2, 3):
        assert not section_eliminate((1, 13, 12, 13, 1), depth).eliminated


def test_closed_form_domain():
    assert closed_form_test((1, 24, 19, 24, 1)).rule is Rule.GORS
    assert closed_form_test((1, 39, 29, 29, 39, 1)).rule is Rule.GORF
    assert closed_form_test((1, 10, 12, 10, 1)) is None
    assert closed_form_test((1, 39, 30, 29, 39, 1)) is None
    with pytest.raises(ValueError):
        gors_test(10, 11)


def test_tec_sweep_and_known_exception():
    failures = [(k, d) for d in range(4, 201) for k in range(2, d // 2 + 1) if not tec_check(k, d)]
    assert failures == [(2, 4)]
    assert tec_check(3, 6)
    with pytest.raises(ValueError):
        tec_check(2, 3)
    with pytest.raises(ValueError):
        tec_check(4, 6)


def test_section_search_on_lowered_perazzo_vectors():
    # every symmetric vector one below the m=3 Perazzo vector in one middle degree
    for d in range(6, 9):
        h = perazzo_hf(3, d)
        for k in range(2, d // 2 + 1):
            g = list(h)
            g[k] -= 1
            g[d - k] -= 1
            assert eliminate(g, 2, branch_cap=10**5).eliminated, (d, k)


def test_degree_five_gaps_reported_honestly():
    for h, middle in (((1, 504, 209, 209, 504, 1), (1, 171, 54, 171, 1)),
                      ((1, 725, 274, 274, 725, 1), (1, 226, 65, 226, 1))):
        cert = section_eliminate(h, 2)
        assert cert.extremal["M"] == list(middle)
        assert cert.extremal["middle_verdict"] == "Eliminated"
        # the extremal section data violates Macaulay's bound, a feasible branch survives
        assert cert.extremal["B_is_o_sequence"] is False
        assert cert.verdict is Verdict.PASS
        assert replay(cert)


def test_extremal_branch_shape():
    ext = extremal_branch((1, 504, 209, 209, 504, 1))
    assert ext["M"] == [1, 171, 54, 171, 1]
    assert [b + m for b, m in zip(ext["B"][1:], ext["M"])] == [504, 209, 209, 504, 1]


def test_json_round_trip_and_schema():
    for cert in (gors_test(24, 19), gorf_test(39, 29), section_eliminate((1, 13, 11, 13, 1), 2),
                 section_eliminate((1, 13, 12, 13, 1), 2, trace=True)):
        data = json.loads(json.dumps(cert.to_json()))
        assert EliminationCertificate.from_json(data).to_json() == cert.to_json()
        assert {"candidate", "verdict", "rule", "steps", "depth"} <= data.keys()
        assert all({"desc", "values"} <= s.keys() for s in data["steps"])


def test_tampered_certificate_fails_replay():
    cert = gors_test(24, 19)
    data = cert.to_json()
    data["steps"][0]["values"][-1] += 1
    assert not replay(EliminationCertificate.from_json(data))


def test_cited_facts():
    assert cited_fact((1, 12, 11, 12, 1)).rule is Rule.CITED
    assert cited_fact((1, 13, 12, 13, 1)) is None
    assert eliminate((1, 12, 11, 12, 1), use_cited=True).rule is Rule.CITED
    assert not eliminate((1, 12, 11, 12, 1), use_cited=False).eliminated


def test_node_cap_gives_unknown():
    cert = section_eliminate((1, 504, 209, 209, 504, 1), 2, branch_cap=3)
    assert cert.verdict is Verdict.UNKNOWN
    assert cert.stats["capped"] == 1
    assert replay(cert)


def test_minimality_checks():
    for m, d in ((3, 4), (4, 4), (5, 4), (3, 5), (4, 5), (3, 6)):
        assert perazzo_minimality(m, d).confirmed, (m, d)
    report = perazzo_minimality(6, 4)
    assert report.survivors == [(1, 62, 41, 62, 1)]
    assert len(list(vectors_below((1, 13, 12, 13, 1)))) == 12
    assert check_minimal((1, 13, 12, 13, 1), max_drop=2).below == 2


@settings(max_examples=60)
@given(st.integers(4, 80), st.integers(0, 80))
def test_every_eliminated_verdict_replays(r, h):
    h = min(h, r)
    for cand in ((1, r, h, r, 1), (1, r, h, h, r, 1)):
        cert = closed_form_test(cand)
        if cert is not None and cert.eliminated:
            assert replay(cert)
        if cand[2] <= 3 * r:
            cert = section_eliminate(cand, 2, branch_cap=10**4)
            if cert.eliminated:
                assert replay(cert)

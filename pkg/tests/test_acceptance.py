"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines.  Every check is exact; the only tolerances are wall-clock budgets.
"""

import itertools
import json
import time
from math import gcd

import pytest

from twistspin.cli import main as cli_main
from twistspin.errors import InconsistentExtension
from twistspin.invariants import (
    abelianization_order,
    abelianization_snf,
    alexander_polynomial,
    branched_cover_h1_order,
    determinant_of_poly,
    determinant_of_seifert,
    fox_colorings,
    wirtinger,
)
from twistspin.metabelian import (
    brute_force_count,
    character_condition_matrix,
    count_by_formula,
    distinguish,
    enumerate_characters,
    extend_character,
    verify_representation,
    build_representation,
)
from twistspin.notation import parse_pd
from twistspin.spinning import (
    branched_cover_presentation,
    btws_presentation,
    make_params,
    plotnick_presentation,
    reduced_presentation,
)
from twistspin.tables import load_table

RECS = {rec.name: rec for rec in load_table()}
PRIMES = (2, 3, 5, 7, 11, 13)


def _report(criterion, started, detail=""):
    elapsed = time.perf_counter() - started
    print(f"ACCEPTANCE {criterion}: PASS ({elapsed:.2f}s){' ' + detail if detail else ''}")


def test_criterion_1_determinant_route_agreement():
    started = time.perf_counter()
    expected = {"3_1": 3, "4_1": 5, "5_1": 5, "5_2": 7}
    for name, det in expected.items():
        rec = RECS[name]
        d = parse_pd(rec.pd)
        fox = determinant_of_poly(alexander_polynomial(wirtinger(d)))
        seifert = determinant_of_seifert(rec.seifert)
        assert fox == seifert == det, name
        for p in PRIMES:
            nontrivial = fox_colorings(d, p, brute=False) > p
            assert nontrivial == (det % p == 0), (name, p)
    assert time.perf_counter() - started < 1.0
    _report("1 (determinant route agreement)", started)


def _valid_pairs(max_m=6, max_n=6):
    for m in range(-max_m, max_m + 1):
        for n in range(1, max_n + 1):
            if gcd(abs(m), n) == 1:
                yield m, n


def test_criterion_2_formula_vs_characters():
    started = time.perf_counter()
    for name in ("3_1", "4_1"):
        rec = RECS[name]
        det = rec.det_expected
        m_cond = character_condition_matrix(rec.lin)
        classes = enumerate_characters(m_cond, det)
        assert len(classes) == (det - 1) // 2
        for m, n in _valid_pairs():
            params = make_params(m, n)
            if m % 2 == 0:
                if m == 0:
                    survivors = list(classes)
                else:
                    survivors = [c for c in classes
                                 if extend_character(c.character(), params)]
                assert len(survivors) == count_by_formula(det, m) == (det - 1) // 2
            else:
                for cls in classes:
                    with pytest.raises(InconsistentExtension):
                        extend_character(cls.character(), params)
    assert time.perf_counter() - started < 1.0
    _report("2 (formula vs character enumeration, |m| <= 6)", started)


def test_criterion_3_brute_force_oracle():
    started = time.perf_counter()
    cases = [("3_1", 2, 1, 1), ("3_1", 3, 1, 0), ("3_1", 3, 2, 0),
             ("3_1", 4, 1, 1), ("4_1", 2, 1, 2)]
    for name, m, n, expected in cases:
        case_start = time.perf_counter()
        rec = RECS[name]
        det = rec.det_expected
        p = btws_presentation(wirtinger(parse_pd(rec.pd)), make_params(m, n))
        brute = brute_force_count(p, det)
        formula = count_by_formula(det, m)
        assert brute == formula == expected, (name, m, n)
        assert time.perf_counter() - case_start < 60.0
    _report("3 (brute-force oracle equality)", started)


def test_criterion_4_kernel_cardinality():
    started = time.perf_counter()
    checked = 0
    for rec in load_table():
        matrices = []
        if rec.seifert is not None and rec.seifert.rows:
            matrices.append(rec.seifert.symmetrized())
        if rec.lin is not None:
            matrices.append(character_condition_matrix(rec.lin))
        for mat in matrices:
            det = rec.det_expected
            k = len(mat)
            count = sum(
                1 for c in itertools.product(range(det), repeat=k)
                if all(sum(row[j] * c[j] for j in range(k)) % det == 0 for row in mat))
            assert count == det, rec.name
            checked += 1
    assert checked >= 5
    assert time.perf_counter() - started < 1.0
    _report("4 (kernel cardinality law)", started, f"[{checked} matrices]")


def test_criterion_5_presentation_homology():
    started = time.perf_counter()
    grid = [(1, 1), (2, 1), (3, 1), (3, 2), (4, 1), (5, 2), (6, 1)]
    for rec in load_table():
        k = wirtinger(parse_pd(rec.pd))
        for m, n in grid:
            diag = abelianization_snf(btws_presentation(k, make_params(m, n)))
            assert all(d == 1 for d in diag[:-1]) and diag[-1] == 0, (rec.name, m, n)
    # cover homology orders against the (independently frozen) resultant oracle
    delta = alexander_polynomial(wirtinger(parse_pd(RECS["3_1"].pd)))
    frozen = {1: 1, 2: 3, 3: 4, 4: 3, 5: 1, 6: None}
    for m in range(1, 7):
        oracle = branched_cover_h1_order(delta, m)
        assert oracle == frozen[m]
        order = abelianization_order(branched_cover_presentation(RECS["3_1"].lin, m))
        assert order == oracle, m
    assert time.perf_counter() - started < 1.0
    _report("5 (presentation homology vs oracles)", started)


def test_criterion_6_every_representation_verifies():
    started = time.perf_counter()
    total = 0
    for name in ("3_1", "4_1"):
        rec = RECS[name]
        classes = enumerate_characters(character_condition_matrix(rec.lin),
                                       rec.det_expected)
        for m, n in _valid_pairs():
            if m % 2 != 0 or m == 0:
                continue
            params = make_params(abs(m), n)
            reduced = reduced_presentation(rec.lin)
            full = plotnick_presentation(rec.lin, params)
            for cls in classes:
                ec = extend_character(cls.character(), params)
                for pres in (reduced, full):
                    verdict = verify_representation(pres, build_representation(ec, pres))
                    assert verdict.label == "valid+irreducible", (name, m, n)
                    total += 1
    _report("6 (all emitted representations verify)", started, f"[{total} checks]")


def test_criterion_7_distinguish_matrix():
    started = time.perf_counter()
    triples = {"A": (3, 2), "B": (5, 2), "C": (3, 3)}  # (3_1,2,1) (4_1,2,1) (3_1,3,2)
    expected = {
        ("A", "A"): (None, "inconclusive"), ("A", "B"): (1, "inequivalent"),
        ("A", "C"): (2, "inequivalent"), ("B", "A"): (1, "inequivalent"),
        ("B", "B"): (None, "inconclusive"), ("B", "C"): (2, "inequivalent"),
        ("C", "A"): (2, "inequivalent"), ("C", "B"): (2, "inequivalent"),
        ("C", "C"): (None, "inconclusive"),
    }
    for (ka, kb), (rule, verdict) in expected.items():
        result = distinguish(triples[ka], triples[kb])
        assert (result.rule, result.verdict) == (rule, verdict), (ka, kb)
    _report("7 (inequivalence criterion, 9 pairs)", started)


def test_criterion_8_partition_determinism(capsys):
    started = time.perf_counter()
    p = btws_presentation(wirtinger(parse_pd(RECS["3_1"].pd)), make_params(2, 1))
    assert {brute_force_count(p, 3, partitions=k) for k in (1, 4)} == {1}
    outputs = []
    for k in ("1", "4"):
        code = cli_main(["count", "--knot", "3_1", "-m", "2", "-n", "1",
                         "--partitions", k])
        assert code == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1] and json.loads(outputs[0])["count"] == 1
    with capsys.disabled():
        _report("8 (worker-partition determinism)", started)

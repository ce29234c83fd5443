"""Representation counting: formula, characters, dihedral brute force."""

import random

import pytest

from twistspin.errors import (
    DeterminantMismatch,
    EvenDeterminant,
    InconsistentExtension,
    IncompatiblePresentation,
    SearchSpaceTooLarge,
)
from twistspin.invariants import bareiss_determinant, wirtinger
from twistspin.metabelian import (
    Character,
    DihedralElement,
    brute_force_count,
    build_representation,
    character_condition_matrix,
    count_by_formula,
    count_representations,
    distinguish,
    enumerate_characters,
    extend_character,
    verify_representation,
)
from twistspin.notation import parse_pd
from twistspin.spinning import (
    LinPresentation,
    btws_presentation,
    make_params,
    plotnick_presentation,
    reduced_presentation,
)
from twistspin.tables import load_lin_data, load_table

LIN = load_lin_data()
RECS = {rec.name: rec for rec in load_table()}
M_TREFOIL = [[-2, 1], [1, -2]]
M_FIG8 = [[2, 1], [1, -2]]


def test_count_by_formula():
    assert count_by_formula(3, 2) == 1
    assert count_by_formula(7, 5) == 0
    assert count_by_formula(1, 2) == 0
    assert count_by_formula(13, 0) == 6  # m = 0 rides the even branch
    with pytest.raises(EvenDeterminant):
        count_by_formula(4, 2)


def test_character_condition_matrix():
    assert character_condition_matrix(LIN["3_1"]) == M_TREFOIL
    assert character_condition_matrix(LIN["4_1"]) == M_FIG8
    trivial = LinPresentation(1, ((), ()), ((), ()))
    assert character_condition_matrix(trivial) == [[0, 0], [0, 0]]


def test_condition_matrix_matches_seifert_determinant():
    for name in ("3_1", "4_1"):
        m = character_condition_matrix(LIN[name])
        assert abs(bareiss_determinant(m)) == RECS[name].det_expected


def test_enumerate_characters_trefoil():
    classes = enumerate_characters(M_TREFOIL, 3)
    assert len(classes) == 1
    assert classes[0].pair() == ((1, 2), (2, 1))


def test_enumerate_characters_figure_eight():
    classes = enumerate_characters(M_FIG8, 5)
    assert len(classes) == 2
    assert [c.representative for c in classes] == [(1, 3), (2, 1)]


def test_enumerate_characters_trivial_modulus():
    assert enumerate_characters([[1, 0], [0, 1]], 1) == []


def test_enumerate_characters_errors():
    with pytest.raises(DeterminantMismatch):
        enumerate_characters(M_TREFOIL, 5)
    with pytest.raises(EvenDeterminant):
        enumerate_characters([[2, 0], [0, 1]], 2)


def test_enumerate_matches_brute_scan():
    for m, modulus in ((M_TREFOIL, 3), (M_FIG8, 5),
                       ([[-2, 1, 0, 0], [1, -2, 1, 0], [0, 1, -2, 1], [0, 0, 1, -2]], 5)):
        fast = enumerate_characters(m, modulus)
        slow = enumerate_characters(m, modulus, brute=True)
        assert fast == slow


def test_pairing_never_self_inverse():
    for m, modulus in ((M_TREFOIL, 3), (M_FIG8, 5)):
        for cls in enumerate_characters(m, modulus):
            c, neg = cls.pair()
            assert c != neg


def test_extend_character_even_m():
    c = Character(3, (1, 2))
    ec = extend_character(c, make_params(2, 1))
    assert ec.levels == ((1, 2), (2, 1))
    ec4 = extend_character(c, make_params(4, 3))
    assert ec4.levels == ((1, 2), (2, 1), (1, 2), (2, 1))


def test_extend_character_odd_m_blocks():
    c = Character(3, (1, 2))
    with pytest.raises(InconsistentExtension):
        extend_character(c, make_params(3, 1))  # q odd: closing the cover fails
    with pytest.raises(InconsistentExtension):
        extend_character(c, make_params(5, 3))  # q even: meridian relation fails
    for m in (1, 3, 5):
        for n in range(1, 7):
            try:
                params = make_params(m, n)
            except Exception:
                continue
            with pytest.raises(InconsistentExtension):
                extend_character(c, params)


def test_extend_character_trivial_always_works():
    c = Character(3, (0, 0))
    for m, n in [(2, 1), (3, 1), (5, 2)]:
        ec = extend_character(c, make_params(m, n))
        assert all(level == (0, 0) for level in ec.levels)


def test_dihedral_algebra():
    two_d = 6
    j = DihedralElement.reflection(two_d, 0)
    assert (j * j) == DihedralElement.rotation(two_d, 3)  # eta^2 = -I
    r = DihedralElement.rotation(two_d, 2)
    assert (j * r * j.inverse()) == DihedralElement.rotation(two_d, -2)
    for a in range(two_d):
        for f in (0, 1):
            e = DihedralElement(two_d, a, f)
            assert (e * e.inverse()).is_identity
            assert (e.inverse() * e).is_identity
    # associativity spot check over the whole group
    elems = [DihedralElement(two_d, a, f) for a in range(two_d) for f in (0, 1)]
    rng = random.Random(9)
    for _ in range(200):
        x, y, z = rng.choice(elems), rng.choice(elems), rng.choice(elems)
        assert (x * y) * z == x * (y * z)


def test_build_and_verify_trefoil():
    lin = LIN["3_1"]
    params = make_params(2, 1)
    cls = enumerate_characters(M_TREFOIL, 3)[0]
    ec = extend_character(cls.character(), params)
    reduced = reduced_presentation(lin)
    full = plotnick_presentation(lin, params)
    for pres in (reduced, full):
        rho = build_representation(ec, pres)
        verdict = verify_representation(pres, rho)
        assert verdict.label == "valid+irreducible", pres


def test_verify_reducible_and_invalid():
    lin = LIN["3_1"]
    reduced = reduced_presentation(lin)
    two_d = 6
    # all generators to the identity: valid but reducible
    rho_triv = {g: DihedralElement.identity(two_d) for g in (1, 2, 3)}
    v = verify_representation(reduced, rho_triv)
    assert v.label == "valid+reducible"
    # eta to the identity with nontrivial rotations: fails a conjugation relator
    rho_bad = {1: DihedralElement.rotation(two_d, 2),
               2: DihedralElement.rotation(two_d, 4),
               3: DihedralElement.identity(two_d)}
    v = verify_representation(reduced, rho_bad)
    assert not v.valid and v.failed_relator == 0


def test_build_representation_shape_checks():
    lin = LIN["3_1"]
    ec = extend_character(Character(3, (1, 2)), make_params(2, 1))
    wrong = plotnick_presentation(lin, make_params(4, 1))
    with pytest.raises(IncompatiblePresentation):
        build_representation(ec, wrong)


def test_every_class_verifies_everywhere():
    # every enumerated class, extended and built, is valid+irreducible on both
    # the reduced and the full fibered presentation
    for name, modulus in (("3_1", 3), ("4_1", 5)):
        lin = LIN[name]
        m_cond = character_condition_matrix(lin)
        for m, n in [(2, 1), (4, 1), (2, 3), (4, 3), (6, 1), (-2, 1)]:
            params = make_params(m, n)
            build_params = make_params(abs(m), n)
            for cls in enumerate_characters(m_cond, modulus):
                ec = extend_character(cls.character(), params)
                for pres in (reduced_presentation(lin),
                             plotnick_presentation(lin, build_params)):
                    rho = build_representation(
                        extend_character(cls.character(), build_params), pres)
                    assert verify_representation(pres, rho).label == "valid+irreducible"
                assert len(ec.levels) == abs(m)


def _btws(name, m, n):
    return btws_presentation(wirtinger(parse_pd(RECS[name].pd)), make_params(m, n))


def test_brute_force_counts():
    assert brute_force_count(_btws("3_1", 2, 1), 3) == 1
    assert brute_force_count(_btws("3_1", 3, 1), 3) == 0
    assert brute_force_count(_btws("3_1", 3, 2), 3) == 0
    assert brute_force_count(_btws("3_1", 4, 1), 3) == 1
    assert brute_force_count(_btws("3_1", 1, 1), 3) == 0
    assert brute_force_count(_btws("0_1", 2, 1), 3) == 0
    assert brute_force_count(_btws("0_1", 2, 1), 7) == 0
    assert brute_force_count(_btws("4_1", 2, 1), 5) == 2


def test_brute_force_partition_invariance():
    p = _btws("3_1", 2, 1)
    counts = {brute_force_count(p, 3, partitions=k) for k in (1, 2, 3, 4, 7)}
    assert counts == {1}


def test_brute_force_unpruned_audit():
    # the meridian-to-reflection pruning loses nothing on tiny instances
    for name, (m, n), det in [("0_1", (2, 1), 3), ("3_1", (2, 1), 3), ("3_1", (3, 1), 3)]:
        p = _btws(name, m, n)
        assert brute_force_count(p, det) == brute_force_count(p, det, unpruned=True)


def test_brute_force_limits():
    with pytest.raises(SearchSpaceTooLarge):
        brute_force_count(_btws("6_1", 2, 1), 9)
    with pytest.raises(EvenDeterminant):
        brute_force_count(_btws("3_1", 2, 1), 4)


def test_brute_force_on_plotnick_presentation():
    lin = LIN["3_1"]
    p = plotnick_presentation(lin, make_params(2, 1))
    assert brute_force_count(p, 3) == 1
    assert brute_force_count(reduced_presentation(lin), 3) == 1


def test_count_representations_cross_method():
    grid = [(2, 1), (4, 1), (2, 3), (4, 3), (3, 1), (3, 2), (5, 2), (0, 1)]
    for name, det in (("3_1", 3), ("4_1", 5)):
        rec = RECS[name]
        k = wirtinger(parse_pd(rec.pd))
        for m, n in grid:
            params = make_params(m, n)
            report = count_representations(
                params, "all", det=det, lin=rec.lin,
                presentation=btws_presentation(k, params))
            assert report["agreement"], (name, m, n, report)
            assert report["count"] == count_by_formula(det, m)
            assert len(report["per_method"]) == 3


def test_count_invariance_under_sign_flip():
    for name, det in (("3_1", 3), ("4_1", 5)):
        rec = RECS[name]
        for m, n in [(2, 1), (3, 2), (4, 3), (5, 2)]:
            a = count_representations(make_params(m, n), "characters",
                                      det=det, lin=rec.lin)
            b = count_representations(make_params(-m, n), "characters",
                                      det=det, lin=rec.lin)
            assert a["count"] == b["count"]


def test_count_m0_flag():
    rec = RECS["3_1"]
    report = count_representations(make_params(0, 1), "all", det=3, lin=rec.lin,
                                   presentation=_btws("3_1", 0, 1))
    assert report["count"] == 1
    assert "m=0: formula extended" in report["flags"]
    assert report["agreement"]


def test_distinguish_rules():
    assert distinguish((3, 2), (5, 2)).rule == 1
    assert distinguish((3, 2), (7, 3)).rule == 2
    d = distinguish((3, 2), (3, 4))
    assert d.verdict == "inconclusive" and d.rule is None
    assert distinguish((1, 2), (3, 3)).verdict == "inconclusive"
    assert distinguish((3, 3), (5, 5)).verdict == "inconclusive"


def test_distinguish_depends_only_on_parity_and_dets():
    rng = random.Random(10)
    for _ in range(200):
        da, db = rng.choice([1, 3, 5, 7, 9]), rng.choice([1, 3, 5, 7, 9])
        ma, mb = rng.randrange(-6, 7), rng.randrange(-6, 7)
        base = distinguish((da, ma), (db, mb))
        shifted = distinguish((da, ma + 2 * rng.randrange(-3, 4)),
                              (db, mb + 2 * rng.randrange(-3, 4)))
        assert base == shifted

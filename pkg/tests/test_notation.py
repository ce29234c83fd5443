"""Planar-diagram and braid-word parsing."""

import random

import pytest

from twistspin.errors import (
    EdgeMultiplicity,
    LetterOutOfRange,
    MalformedToken,
    NotAKnot,
    SplitLink,
    ZeroLetter,
)
from twistspin.notation import (
    BraidWord,
    braid_closure,
    parse_braid,
    parse_pd,
    render_pd,
    validate_diagram,
)

TREFOIL_PD = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"


def test_empty_is_unknot():
    d = parse_pd("")
    assert d.n_crossings == 0 and d.n_edges == 0
    assert parse_pd("  ,  ").n_crossings == 0
    assert render_pd(d) == ""


def test_trefoil_parses():
    d = parse_pd(TREFOIL_PD)
    assert d.n_crossings == 3
    assert d.n_edges == 6
    validate_diagram(d)
    assert all(x.sign == -1 for x in d.crossings)  # the left-handed diagram


def test_flexible_separators_and_gap_labels():
    d1 = parse_pd("X(1,4,2,5), X(3,6,4,1),X(5,2,6,3)")
    assert d1 == parse_pd(TREFOIL_PD)
    # same diagram with labels 10,20,..,60 in place of 1..6
    gappy = "X(10,40,20,50) X(30,60,40,10) X(50,20,60,30)"
    assert parse_pd(gappy) == parse_pd(TREFOIL_PD)


def test_malformed_inputs():
    for bad in ("X(1,2,3)", "X(1,2,3,4,5)", "Y(1,2,3,4)", "X(1,2,3,04x)", "X(0,1,1,2)"):
        with pytest.raises(MalformedToken):
            parse_pd(bad)


def test_label_multiplicity_errors():
    with pytest.raises((EdgeMultiplicity, SplitLink)):
        parse_pd("X(1,1,2,2)")
    with pytest.raises(EdgeMultiplicity):
        parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,5)")


def test_split_link_rejected():
    # Hopf link, each component labeled consecutively
    with pytest.raises((SplitLink, EdgeMultiplicity)):
        parse_pd("X(4,1,3,2) X(2,3,1,4)")


def test_negative_kink_parses_positive_kink_rejected():
    d = parse_pd("X(1,2,2,1)")
    assert d.n_crossings == 1 and d.crossings[0].sign == -1
    # the positive curl's tuple collides with the doubled-label error
    with pytest.raises((EdgeMultiplicity, SplitLink)):
        parse_pd("X(1,1,2,2)")


def test_parse_braid():
    assert parse_braid("1 1 1", 2).letters == (1, 1, 1)
    assert parse_braid("1 -2 1 -2", 3).letters == (1, -2, 1, -2)
    with pytest.raises(LetterOutOfRange):
        parse_braid("3", 2)
    with pytest.raises(ZeroLetter):
        parse_braid("1 0", 2)
    with pytest.raises(MalformedToken):
        parse_braid("1 x", 2)


def test_braid_closure_examples():
    trefoil = braid_closure(BraidWord((1, 1, 1), 2))
    assert trefoil.n_crossings == 3
    assert all(x.sign == +1 for x in trefoil.crossings)
    fig8 = braid_closure(BraidWord((1, -2, 1, -2), 3))
    assert fig8.n_crossings == 4
    assert sorted(x.sign for x in fig8.crossings) == [-1, -1, 1, 1]
    kink = braid_closure(BraidWord((1,), 2))
    assert kink.n_crossings == 1 and kink.n_edges == 2


def test_braid_closure_not_a_knot():
    with pytest.raises(NotAKnot):
        braid_closure(BraidWord((1, 1), 2))  # Hopf link
    with pytest.raises(NotAKnot):
        braid_closure(BraidWord((), 2))  # two-component unlink


def test_roundtrip_on_parsed_diagrams():
    for text in (TREFOIL_PD, "X(1,2,2,1)"):
        d = parse_pd(text)
        assert parse_pd(render_pd(d)) == d


def test_braid_closure_fuzz():
    rng = random.Random(5)
    accepted = 0
    for _ in range(300):
        strands = rng.randrange(1, 5)
        length = rng.randrange(0, 7)
        letters = tuple(rng.choice([i, -i]) for i in
                        (rng.randrange(1, strands) for _ in range(length))) \
            if strands > 1 else ()
        try:
            d = braid_closure(BraidWord(letters, strands))
        except NotAKnot:
            continue
        accepted += 1
        validate_diagram(d)
        assert d.n_crossings == len(letters)
        assert [x.sign for x in sorted(d.crossings, key=lambda x: x.under_in)] \
            .count(1) == sum(1 for letter in letters if letter > 0)
        if d.n_crossings > 1:  # one-crossing positive curls are unparseable
            assert parse_pd(render_pd(d)) == d
        elif d.n_crossings == 1 and d.crossings[0].sign == -1:
            assert parse_pd(render_pd(d)) == d
    assert accepted > 50

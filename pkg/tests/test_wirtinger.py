"""Strand labels, tangle presentations, tripods, derivability check."""
import pytest

from tpc.corpus import spun_trefoil_data
from tpc.diagram import BraidCrossing, TangleDiagram, TriPlaneDiagram
from tpc.presentation import Word, abelian_invariants
from tpc.wirtinger import (
    Tripod,
    build_tripod,
    check_surface_relation_derivable,
    strand_labels,
    tangle_presentation,
)


def word(*letters):
    return Word.from_letters(letters)


def letters_of(relators):
    return {w.letters for w in relators}


def test_positive_crossing_labels():
    t = TangleDiagram(1, (BraidCrossing(0, 1, 1),), ((0, 1),))
    labels = strand_labels(t)
    assert labels[0].letters == ((0, 1), (1, 1), (0, -1))
    assert labels[1].letters == ((0, 1),)


def test_negative_crossing_labels():
    t = TangleDiagram(1, (BraidCrossing(0, 1, -1),), ((0, 1),))
    labels = strand_labels(t)
    assert labels[0].letters == ((1, 1),)
    assert labels[1].letters == ((1, -1), (0, 1), (1, 1))


def test_crossingless_presentation():
    t = TangleDiagram(3, (), ((0, 1), (2, 3), (4, 5)))
    p = tangle_presentation(t)
    assert p.num_generators == 6
    assert [w.letters for w in p.relators] == [
        ((0, 1), (1, 1)),
        ((2, 1), (3, 1)),
        ((4, 1), (5, 1)),
    ]


def test_spun_trefoil_alpha_relators():
    d, _ = spun_trefoil_data()
    p = tangle_presentation(d.alpha)
    assert letters_of(p.relators) == letters_of(
        [
            word((0, 1), (1, 1), (2, 1), (1, 1), (2, 1), (1, -1), (2, -1), (1, -1)),
            word((1, 1), (2, 1), (1, 1), (2, -1), (1, -1), (7, 1)),
            word((3, 1), (6, 1)),
            word((4, 1), (5, 1)),
        ]
    )


def test_spun_trefoil_beta_relators():
    d, _ = spun_trefoil_data()
    p = tangle_presentation(d.beta)
    assert letters_of(p.relators) == letters_of(
        [
            word((0, 1), (1, 1), (2, 1), (1, 1), (2, 1), (1, -1), (2, -1), (1, -1)),
            word((1, 1), (2, 1), (1, 1), (2, -1), (1, -1), (5, 1)),
            word((3, 1), (4, 1)),
            word((6, 1), (7, 1)),
        ]
    )


def test_spun_trefoil_gamma_relators():
    d, _ = spun_trefoil_data()
    p = tangle_presentation(d.gamma)
    assert letters_of(p.relators) == letters_of(
        [
            word((0, 1), (1, 1), (4, 1), (1, 1), (4, 1), (1, -1), (4, -1), (1, -1)),
            word((1, 1), (4, 1), (1, 1), (4, -1), (1, -1), (7, 1)),
            word((2, 1), (3, 1)),
            word((5, 1), (6, 1)),
        ]
    )


def test_build_tripod_surface_group():
    d, _ = spun_trefoil_data()
    t = build_tripod(d)
    assert t.b == 4
    assert len(t.surface_group.relators) == 1
    assert t.surface_group.relators[0].letters == tuple((i, 1) for i in range(8))
    assert t.side("alpha") is t.alpha
    assert len(t.label_words["gamma"]) == 8


def test_b1_trivial_tripod():
    tangle = TangleDiagram(1, (), ((0, 1),))
    d = TriPlaneDiagram(1, tangle, tangle, tangle)
    t = build_tripod(d)
    for key in ("alpha", "beta", "gamma"):
        p = t.side(key)
        assert [w.letters for w in p.relators] == [((0, 1), (1, 1))]
    assert t.surface_group.relators[0].letters == ((0, 1), (1, 1))


def test_side_abelianizations_are_free_of_rank_b():
    d, _ = spun_trefoil_data()
    t = build_tripod(d)
    for key in ("alpha", "beta", "gamma"):
        inv = abelian_invariants(t.side(key))
        assert inv.free_rank == 4
        assert inv.torsion == ()
    for b in (1, 2, 3):
        tangle = TangleDiagram(b, (), tuple((2 * k, 2 * k + 1) for k in range(b)))
        inv = abelian_invariants(tangle_presentation(tangle))
        assert inv.free_rank == b
        assert inv.torsion == ()


def test_surface_relation_derivable():
    d, _ = spun_trefoil_data()
    t = build_tripod(d)
    assert check_surface_relation_derivable(t)
    tangle = TangleDiagram(1, (), ((0, 1),))
    triv = build_tripod(TriPlaneDiagram(1, tangle, tangle, tangle))
    assert check_surface_relation_derivable(triv)


def test_surface_relation_not_derivable_for_corrupted_matching():
    # a corrupted matching set (4,5) -> (4,6),(5,7) reuses positions 6 and 7,
    # so it cannot come from a valid tangle; doctor the presentation directly
    d, _ = spun_trefoil_data()
    t = build_tripod(d)
    corrupt = list(t.alpha.relators[:3])
    corrupt.append(word((4, 1), (6, 1)))
    corrupt.append(word((5, 1), (7, 1)))
    from tpc.presentation import Presentation

    bad_alpha = Presentation(8, tuple(corrupt), t.alpha.generator_names)
    bad = Tripod(t.diagram, t.surface_group, bad_alpha, t.beta, t.gamma, t.label_words)
    assert not check_surface_relation_derivable(bad)

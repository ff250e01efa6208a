"""Permutations, colorings, validation, and the named coloring families."""
import pytest

from tpc.coloring import (
    Coloring,
    Permutation,
    cyclic_coloring,
    cyclic_coloring_search,
    dihedral_coloring,
    is_transitive,
    stevedore_coloring,
    stevedore_sigma_tau,
    validate_coloring,
)
from tpc.corpus import spun_trefoil_data
from tpc.errors import ValidationError
from tpc.presentation import Word
from tpc.wirtinger import build_tripod


def test_permutation_basics():
    p = Permutation.from_cycles(5, [[1, 3], [2, 4, 5]])
    assert p.images == (3, 4, 1, 5, 2)
    assert p.inverse().compose(p).is_identity()
    assert p.cycles() == [(1, 3), (2, 4, 5)]
    assert p.cycles(include_fixed=True) == [(1, 3), (2, 4, 5)]
    q = Permutation.from_cycles(5, [[1, 2]])
    assert q.cycles(include_fixed=True) == [(1, 2), (3,), (4,), (5,)]
    assert q.num_cycles() == 4
    # compose is "self after other"
    assert p.compose(q)(1) == p(q(1)) == p(2) == 4
    with pytest.raises(ValidationError):
        Permutation((1, 1, 3))
    with pytest.raises(ValidationError):
        Permutation.from_cycles(3, [[1, 4]])
    with pytest.raises(ValidationError):
        Permutation.from_cycles(3, [[1, 2], [2, 3]])


def test_word_acts_first_letter_first():
    c = Coloring.from_permutations(
        [Permutation.from_cycles(3, [[1, 2]]), Permutation.from_cycles(3, [[2, 3]])]
    )
    w = Word(((0, 1), (1, 1)))
    assert c.act(w, 1) == 3
    expected = c.permutation(1).compose(c.permutation(0))
    assert c.word_permutation(w).images == expected.images
    winv = w.inverse()
    assert c.word_permutation(winv).images == expected.inverse().images


def test_spun_trefoil_coloring_valid():
    d, c = spun_trefoil_data()
    t = build_tripod(d)
    report = validate_coloring(t, c)
    assert report.ok
    assert report.format() == "coloring valid"
    assert is_transitive(c)


def test_invalid_coloring_reports_failures():
    d, c = spun_trefoil_data()
    t = build_tripod(d)
    perms = c.permutations()
    perms[3] = Permutation.from_cycles(3, [[2, 3]])
    bad = Coloring.from_permutations(perms)
    report = validate_coloring(t, bad)
    assert not report.ok
    assert report.failures
    assert "does not act trivially" in report.format()
    labels = {label for label, _, _ in report.failures}
    assert "surface" in labels


def test_validate_coloring_endpoint_count():
    d, _ = spun_trefoil_data()
    t = build_tripod(d)
    short = Coloring.from_permutations([Permutation.identity(3)] * 4)
    with pytest.raises(ValidationError):
        validate_coloring(t, short)


def test_is_transitive():
    c = Coloring.from_permutations(
        [Permutation.from_cycles(4, [[1, 2]]), Permutation.from_cycles(4, [[3, 4]])]
    )
    assert not is_transitive(c)
    c = Coloring.from_permutations(
        [Permutation.from_cycles(4, [[1, 2]]), Permutation.from_cycles(4, [[2, 3], [1, 4]])]
    )
    assert is_transitive(c)


def test_dihedral_coloring_matches_printed_spun_trefoil():
    _, printed = spun_trefoil_data()
    c = dihedral_coloring([0, 0, 2, 2, 2, 2, 2, 2], 3)
    assert c.spec == printed.spec
    with pytest.raises(ValidationError):
        dihedral_coloring([0], 4)
    with pytest.raises(ValidationError):
        dihedral_coloring([0], 1)


def test_cyclic_coloring():
    c = cyclic_coloring([1, -1], 1)
    assert all(p.is_identity() for p in c.permutations())
    c = cyclic_coloring([1, -1, 1], 3)
    assert c.permutation(0).images == (2, 3, 1)
    assert c.permutation(1).images == (3, 1, 2)
    with pytest.raises(ValidationError):
        cyclic_coloring([2], 3)
    with pytest.raises(ValidationError):
        cyclic_coloring([1], 0)


def test_cyclic_coloring_n1_always_valid():
    d, _ = spun_trefoil_data()
    t = build_tripod(d)
    c = cyclic_coloring([1] * 8, 1)
    assert validate_coloring(t, c).ok


def test_cyclic_coloring_search_spun_trefoil():
    d, _ = spun_trefoil_data()
    t = build_tripod(d)
    for n in (2, 3, 4, 5):
        c = cyclic_coloring_search(t, n)
        assert validate_coloring(t, c).ok
        assert is_transitive(c)


def test_cyclic_coloring_search_obstructed():
    from tpc.diagram import TangleDiagram, TriPlaneDiagram

    # three pairwise-distinct perfect matchings on four endpoints create an
    # odd cycle in the matching graph, so signs cannot alternate
    alpha = TangleDiagram(2, (), ((0, 1), (2, 3)))
    beta = TangleDiagram(2, (), ((0, 2), (1, 3)))
    gamma = TangleDiagram(2, (), ((0, 3), (1, 2)))
    t = build_tripod(TriPlaneDiagram(2, alpha, beta, gamma))
    with pytest.raises(ValidationError):
        cyclic_coloring_search(t, 3)


def test_stevedore_sigma_tau_conjugation():
    for n in range(3, 100, 2):
        sigma, tau = stevedore_sigma_tau(n)
        conj = tau.inverse().compose(sigma).compose(tau)
        assert conj.images == sigma.compose(sigma).images
    with pytest.raises(ValidationError):
        stevedore_sigma_tau(4)


def test_stevedore_coloring_small_degrees():
    c = stevedore_coloring(3)
    assert c.permutation(0).cycles() == [(1, 2)]
    assert c.permutation(1).cycles() == [(1, 2)]
    assert c.permutation(2).cycles() == [(2, 3)]
    assert c.permutation(3).cycles() == [(2, 3)]
    c = stevedore_coloring(5)
    assert c.permutation(0).cycles() == [(1, 3, 4, 2)]
    assert c.permutation(1).cycles() == [(1, 2, 4, 3)]
    assert c.permutation(2).cycles() == [(2, 4, 5, 3)]
    assert c.permutation(3).cycles() == [(2, 3, 5, 4)]
    assert c.num_endpoints == 10
    for n in (3, 5, 7, 9):
        assert is_transitive(stevedore_coloring(n))

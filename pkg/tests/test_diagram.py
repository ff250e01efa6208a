"""Diagram data model, JSON round-trip, component counts, converters."""
import pytest

from tpc.corpus import spun_trefoil_data
from tpc.diagram import (
    BraidCrossing,
    TangleDiagram,
    TriPlaneDiagram,
    coloring_from_notebook,
    component_count,
    parse_diagram,
    serialize_diagram,
    tangle_from_notebook,
)
from tpc.errors import ValidationError


def trivial_diagram(b=1):
    matchings = tuple((2 * k, 2 * k + 1) for k in range(b))
    t = TangleDiagram(b, (), matchings)
    return TriPlaneDiagram(b, t, t, t)


def trivial_coloring(b=1, n=1):
    from tpc.coloring import Coloring, Permutation

    return Coloring.from_permutations([Permutation.identity(n)] * (2 * b))


def test_structural_validation():
    with pytest.raises(ValidationError):
        BraidCrossing(1, 1, 1)
    with pytest.raises(ValidationError):
        BraidCrossing(0, 1, 2)
    with pytest.raises(ValidationError):
        TangleDiagram(1, (), ((0, 0),))
    with pytest.raises(ValidationError):
        TangleDiagram(1, (), ((0, 2),))
    with pytest.raises(ValidationError):
        TangleDiagram(1, (BraidCrossing(0, 5, 1),), ((0, 1),))
    with pytest.raises(ValidationError):
        # matchings must cover every position exactly once
        TangleDiagram(2, (), ((0, 1), (1, 2)))
    t1 = TangleDiagram(1, (), ((0, 1),))
    t2 = TangleDiagram(2, (), ((0, 1), (2, 3)))
    with pytest.raises(ValidationError):
        TriPlaneDiagram(1, t1, t1, t2)


def test_round_trip_spun_trefoil():
    d, c = spun_trefoil_data()
    text = serialize_diagram(d, c)
    d2, c2 = parse_diagram(text)
    assert d2 == d
    assert c2.spec == c.spec
    assert serialize_diagram(d2, c2) == text


def test_round_trip_trivial():
    d = trivial_diagram()
    c = trivial_coloring()
    text = serialize_diagram(d, c)
    d2, c2 = parse_diagram(text)
    assert d2 == d
    assert serialize_diagram(d2, c2) == text


def test_parse_errors():
    with pytest.raises(ValidationError):
        parse_diagram("not json")
    with pytest.raises(ValidationError):
        parse_diagram("{}")
    d, c = spun_trefoil_data()
    import json

    payload = json.loads(serialize_diagram(d, c))
    bad = dict(payload)
    bad["tangles"] = {k: v for k, v in payload["tangles"].items() if k != "gamma"}
    with pytest.raises(ValidationError):
        parse_diagram(json.dumps(bad))
    bad = json.loads(serialize_diagram(d, c))
    bad["tangles"]["alpha"]["matchings"][0] = [0, 0]
    with pytest.raises(ValidationError):
        parse_diagram(json.dumps(bad))
    bad = json.loads(serialize_diagram(d, c))
    bad["coloring"][0] = [[1, 1]]
    with pytest.raises(ValidationError):
        parse_diagram(json.dumps(bad))
    bad = json.loads(serialize_diagram(d, c))
    bad["unexpected"] = 1
    with pytest.raises(ValidationError):
        parse_diagram(json.dumps(bad))


def test_braid_permutation():
    d, _ = spun_trefoil_data()
    # three half-twists on strands 1,2 give the transposition (2,3) on 1..8
    perm = d.alpha.braid_permutation()
    assert perm.images == (1, 3, 2, 4, 5, 6, 7, 8)
    perm = d.gamma.braid_permutation()
    assert perm.images == (1, 5, 3, 4, 2, 6, 7, 8)


def test_puncture_pairing():
    d, _ = spun_trefoil_data()
    assert d.alpha.puncture_pairing() == [(0, 2), (1, 7), (3, 6), (4, 5)]
    assert d.beta.puncture_pairing() == [(0, 2), (1, 5), (3, 4), (6, 7)]
    assert d.gamma.puncture_pairing() == [(0, 4), (1, 7), (2, 3), (5, 6)]


def test_component_count_spun_trefoil():
    d, _ = spun_trefoil_data()
    assert component_count(d, "alpha-beta") == 2
    assert component_count(d, "beta-gamma") == 2
    assert component_count(d, "gamma-alpha") == 2


def test_component_count_trivial():
    d = trivial_diagram()
    for pair in ("alpha-beta", "beta-gamma", "gamma-alpha"):
        assert component_count(d, pair) == 1
    with pytest.raises(ValidationError):
        component_count(d, "alpha-gamma")


def test_component_count_matching_order_invariant():
    d, _ = spun_trefoil_data()
    reordered = TriPlaneDiagram(
        d.bridge_number,
        TangleDiagram(4, d.alpha.crossings, tuple(reversed(d.alpha.matchings))),
        d.beta,
        d.gamma,
    )
    for pair in ("alpha-beta", "beta-gamma", "gamma-alpha"):
        assert component_count(reordered, pair) == component_count(d, pair)


def test_notebook_converter():
    d, c = spun_trefoil_data()
    alpha = tangle_from_notebook("[(1,2,+),(1,2,+),(1,2,+)]", "[(0,1),(2,7),(3,6),(4,5)]", 4)
    assert alpha == d.alpha
    gamma = tangle_from_notebook("(1,4,+),(1,4,+),(1,4,+)", "(0,1),(2,3),(4,7),(5,6)", 4)
    assert gamma == d.gamma
    neg = tangle_from_notebook("(0,1,-)", "(0,1),(2,3)", 2)
    assert neg.crossings[0].sign == -1
    col = coloring_from_notebook(["(1,2)", "(1,2)"] + ["(1,3)"] * 6, 3)
    assert col.spec == c.spec
    col = coloring_from_notebook(["(2,5,3)(4,6,7)", "id"], 7)
    assert col.permutation(0).images == (1, 5, 2, 6, 3, 7, 4)
    assert col.permutation(1).is_identity()
    with pytest.raises(ValidationError):
        tangle_from_notebook("(1,2)", "(0,1),(2,3)", 2)

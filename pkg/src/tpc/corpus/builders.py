"""Builders for the corpus diagrams.

The spun trefoil is printed in full in the source material; the parametric
families are reconstructions validated against every published invariant
row (see the fixtures and the acceptance suite).
"""
from __future__ import annotations

from ..coloring import Coloring, Permutation
from ..diagram import BraidCrossing, TangleDiagram, TriPlaneDiagram
from ..errors import ValidationError


def _tangle(b: int, crossings, matchings) -> TangleDiagram:
    return TangleDiagram(
        b,
        tuple(BraidCrossing(i, j, s) for i, j, s in crossings),
        tuple((u, v) for u, v in matchings),
    )


def spun_trefoil_data() -> tuple[TriPlaneDiagram, Coloring]:
    """The 4-bridge spun trefoil with its 3-sheeted dihedral coloring."""
    b = 4
    alpha = _tangle(b, [(1, 2, 1)] * 3, [(0, 1), (2, 7), (3, 6), (4, 5)])
    beta = _tangle(b, [(1, 2, 1)] * 3, [(0, 1), (2, 5), (3, 4), (6, 7)])
    gamma = _tangle(b, [(1, 4, 1)] * 3, [(0, 1), (2, 3), (4, 7), (5, 6)])
    d = TriPlaneDiagram(b, alpha, beta, gamma)
    r12 = Permutation.from_cycles(3, [(1, 2)])
    r13 = Permutation.from_cycles(3, [(1, 3)])
    c = Coloring.from_permutations([r12, r12] + [r13] * 6)
    return d, c


def twist_spun_torus(k: int, n_torus: int) -> TriPlaneDiagram:
    """Twist-spun (2, n) torus knot diagram (placeholder; calibrated later)."""
    raise NotImplementedError


def stevedore_data():
    raise NotImplementedError


def suciu_data(k: int):
    raise NotImplementedError


def singular_K(s: int, t: int):
    raise NotImplementedError

"""Meridian presentations from tri-plane diagrams.

Each tangle yields a quotient of the free group on the 2b endpoint
meridians: strand labels are accumulated bottom to top through the
crossings, and each maximum contributes the relator r_i r_j from the two
labels it joins.  The three quotients together with the surface group form
a tripod of presentations.
"""
from __future__ import annotations

from dataclasses import dataclass

from .diagram import TangleDiagram, TriPlaneDiagram
from .matrices import solve
from .presentation import Presentation, Word, free_reduce


def _generator_names(b: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(2 * b))


def strand_labels(t: TangleDiagram) -> list[Word]:
    """Word carried by the strand at each top position after all crossings.

    At a positive crossing (i, j) the strand entering at position i passes
    over: it keeps its word and moves to position j, while the strand from
    j moves to i and picks up conjugation by the over-strand's word.
    """
    b2 = 2 * t.bridge_number
    labels = [Word.generator(p) for p in range(b2)]
    for c in t.crossings:
        i, j = c.strand_a, c.strand_b
        wi, wj = labels[i], labels[j]
        if c.sign > 0:
            labels[i] = free_reduce(wi * wj * wi.inverse())
            labels[j] = wi
        else:
            labels[i] = wj
            labels[j] = free_reduce(wj.inverse() * wi * wj)
    return labels


def tangle_presentation(t: TangleDiagram) -> Presentation:
    """Presentation on the 2b meridians with one relator per maximum."""
    labels = strand_labels(t)
    relators = []
    for u, v in t.matchings:
        i, j = (u, v) if u < v else (v, u)
        relators.append(free_reduce(labels[i] * labels[j]))
    b2 = 2 * t.bridge_number
    return Presentation(b2, tuple(relators), _generator_names(t.bridge_number))


@dataclass(frozen=True)
class Tripod:
    """Surface group and the three tangle quotients of a tri-plane diagram."""

    diagram: TriPlaneDiagram
    surface_group: Presentation
    alpha: Presentation
    beta: Presentation
    gamma: Presentation
    label_words: dict[str, tuple[Word, ...]]

    @property
    def b(self) -> int:
        return self.diagram.bridge_number

    def side(self, key: str) -> Presentation:
        return {"alpha": self.alpha, "beta": self.beta, "gamma": self.gamma}[key]


def build_tripod(d: TriPlaneDiagram) -> Tripod:
    b2 = 2 * d.bridge_number
    surface_relator = Word.from_letters([(i, 1) for i in range(b2)])
    surface = Presentation(b2, (surface_relator,), _generator_names(d.bridge_number))
    sides = {}
    labels = {}
    for key in ("alpha", "beta", "gamma"):
        tangle = d.tangle(key)
        sides[key] = tangle_presentation(tangle)
        labels[key] = tuple(strand_labels(tangle))
    return Tripod(d, surface, sides["alpha"], sides["beta"], sides["gamma"], labels)


def check_surface_relation_derivable(t: Tripod) -> bool:
    """Necessary condition that each side recovers the surface relation:
    the all-ones exponent vector must lie in the Z-row-span of each side's
    abelianized relator matrix."""
    ones = [1] * t.surface_group.num_generators
    for key in ("alpha", "beta", "gamma"):
        mat = t.side(key).abelianization_matrix().transpose()
        if solve(mat, ones) is None:
            return False
    return True

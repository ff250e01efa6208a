"""Reidemeister-Schreier for tri-plane tripods: Schreier tree and claw
relations, word lifting, branch-cycle relations, the eight lifted
presentations, and trisection parameters of the branched cover.

Path lifts are indexed flatly: the lift of meridian i starting on sheet j
is generator i*n + (j-1) of the lifted presentations, printed "xi^j".
"""
from __future__ import annotations

from dataclasses import dataclass

from .coloring import Coloring, is_transitive
from .errors import ConsistencyError, ValidationError
from .matrices import cokernel_invariants
from .presentation import Presentation, Word, abelian_invariants, free_reduce
from .wirtinger import Tripod

SIDES = ("alpha", "beta", "gamma")


def flat_index(i: int, j: int, n: int) -> int:
    """Generator index of the path lift of meridian i based on sheet j."""
    return i * n + (j - 1)


def unflatten(f: int, n: int) -> tuple[int, int]:
    return f // n, f % n + 1


def lift_names(num_meridians: int, n: int) -> tuple[str, ...]:
    return tuple(f"x{i}^{j}" for i in range(num_meridians) for j in range(1, n + 1))


@dataclass(frozen=True)
class SchreierTree:
    """Spanning tree of the sheet graph with based path words.

    edges[t] = (i, j, sign) says sheet t was reached along the path lift of
    meridian i based at sheet j, traversed forwards (sign +1, so t is where
    the lift ends) or backwards (sign -1, so t = j).  gamma[t-1] is the word
    in path lifts leading from sheet 1 to sheet t.
    """

    n: int
    edges: dict[int, tuple[int, int, int]]
    gamma: tuple[Word, ...]

    def claw_lifts(self) -> list[tuple[int, int]]:
        """(meridian, base sheet) of each tree-edge path lift."""
        return [(i, j) for (i, j, _) in (self.edges[t] for t in sorted(self.edges))]


def schreier_tree(c: Coloring, override=None) -> SchreierTree:
    """Deterministic BFS spanning tree of the sheet graph.

    Sheets are processed in ascending order; at each sheet the meridians are
    tried in ascending index, forwards before backwards.  `override` is an
    optional list of (meridian, base sheet) pairs naming the tree-edge path
    lifts explicitly.
    """
    n = c.n
    if not is_transitive(c):
        raise ValidationError("coloring is not transitive; the cover is disconnected")
    if override is not None:
        return _tree_from_override(c, override)
    perms = c.permutations()
    edges: dict[int, tuple[int, int, int]] = {}
    gamma: dict[int, Word] = {1: Word()}
    visited = {1}
    pending = [1]
    while pending:
        s = min(pending)
        pending.remove(s)
        for sign in (1, -1):
            for i, p in enumerate(perms):
                t = p(s) if sign > 0 else p.inverse()(s)
                if t in visited:
                    continue
                visited.add(t)
                pending.append(t)
                if sign > 0:
                    edges[t] = (i, s, 1)
                    step = Word(((flat_index(i, s, n), 1),))
                else:
                    edges[t] = (i, t, -1)
                    step = Word(((flat_index(i, t, n), -1),))
                gamma[t] = gamma[s] * step
    return SchreierTree(n, edges, tuple(gamma[t] for t in range(1, n + 1)))


def _tree_from_override(c: Coloring, override) -> SchreierTree:
    n = c.n
    pairs = [(int(i), int(j)) for i, j in override]
    if len(pairs) != n - 1:
        raise ValidationError(f"tree override needs {n - 1} edges, got {len(pairs)}")
    adjacency: dict[int, list[tuple[int, int, int]]] = {s: [] for s in range(1, n + 1)}
    for i, j in pairs:
        if not 0 <= i < c.num_endpoints:
            raise ValidationError(f"tree override meridian {i} out of range")
        if not 1 <= j <= n:
            raise ValidationError(f"tree override sheet {j} out of range")
        t = c.permutation(i)(j)
        if t == j:
            raise ValidationError(f"tree override lift x{i}^{j} is a loop at sheet {j}")
        adjacency[j].append((t, i, j))
        adjacency[t].append((j, i, j))
    edges: dict[int, tuple[int, int, int]] = {}
    gamma: dict[int, Word] = {1: Word()}
    visited = {1}
    queue = [1]
    while queue:
        s = queue.pop(0)
        for t, i, j in adjacency[s]:
            if t in visited:
                continue
            visited.add(t)
            queue.append(t)
            if j == s:  # forward traversal: lift based at s, ends at t
                edges[t] = (i, j, 1)
                step = Word(((flat_index(i, j, n), 1),))
            else:  # backward: lift based at t, ends at s
                edges[t] = (i, j, -1)
                step = Word(((flat_index(i, j, n), -1),))
            gamma[t] = gamma[s] * step
    if len(visited) != n:
        raise ValidationError("tree override does not span the sheets")
    return SchreierTree(n, edges, tuple(gamma[t] for t in range(1, n + 1)))


def _lift(w: Word, start: int, c: Coloring) -> tuple[Word, int]:
    n = c.n
    cur = start
    letters = []
    for i, s in w.letters:
        p = c.permutation(i)
        if s > 0:
            letters.append((flat_index(i, cur, n), 1))
            cur = p(cur)
        else:
            cur = p.inverse()(cur)
            letters.append((flat_index(i, cur, n), -1))
    return Word(tuple(letters)), cur


def lift_word(w: Word, start_sheet: int, c: Coloring) -> Word:
    """Lift of a meridian word starting on the given sheet."""
    if not 1 <= start_sheet <= c.n:
        raise ValidationError(f"start sheet {start_sheet} outside 1..{c.n}")
    return _lift(w, start_sheet, c)[0]


def branch_relations(c: Coloring) -> list[Word]:
    """One relation per cycle of each endpoint permutation (fixed points
    give length-one relations)."""
    n = c.n
    out = []
    for i in range(c.num_endpoints):
        for cycle in c.permutation(i).cycles(include_fixed=True):
            out.append(Word(tuple((flat_index(i, j, n), 1) for j in cycle)))
    return out


@dataclass(frozen=True)
class CoverTripod:
    """The eight lifted presentations of a covering tripod."""

    tripod: Tripod
    coloring: Coloring
    tree: SchreierTree
    claw_relators: tuple[Word, ...]
    branch_relators: tuple[Word, ...]
    lifted_surface: tuple[Word, ...]
    lifted_sides: dict[str, tuple[Word, ...]]

    @property
    def b(self) -> int:
        return self.tripod.b

    @property
    def n(self) -> int:
        return self.coloring.n

    @property
    def num_generators(self) -> int:
        return 2 * self.b * self.n

    def generator_names(self) -> tuple[str, ...]:
        return lift_names(2 * self.b, self.n)

    def _presentation(self, relators) -> Presentation:
        return Presentation(self.num_generators, tuple(relators), self.generator_names())

    def surface(self, branched: bool = True) -> Presentation:
        rels = list(self.lifted_surface) + list(self.claw_relators)
        if branched:
            rels += list(self.branch_relators)
        return self._presentation(rels)

    def side(self, key: str, branched: bool = True) -> Presentation:
        if key not in SIDES:
            raise ValidationError(f"unknown side {key!r}")
        rels = list(self.lifted_sides[key]) + list(self.claw_relators)
        if branched:
            rels += list(self.branch_relators)
        return self._presentation(rels)


def cover_tripod(t: Tripod, c: Coloring, tree_override=None) -> CoverTripod:
    """Lift the tripod through the covering described by the coloring."""
    from .coloring import validate_coloring

    report = validate_coloring(t, c)
    if not report.ok:
        raise ValidationError(report.format())
    tree = schreier_tree(c, override=tree_override)
    n = c.n
    claw = tuple(Word(((flat_index(i, j, n), 1),)) for i, j in tree.claw_lifts())
    branch = tuple(branch_relations(c))

    def lift_all(relators) -> tuple[Word, ...]:
        out = []
        for r in relators:
            for l in range(1, n + 1):
                lifted, end = _lift(r, l, c)
                if end != l:
                    raise ConsistencyError(
                        f"lift of relator {r.format()} at sheet {l} is not closed"
                    )
                out.append(free_reduce(lifted))
        return tuple(out)

    surface = lift_all(t.surface_group.relators)
    sides = {key: lift_all(t.side(key).relators) for key in SIDES}
    return CoverTripod(t, c, tree, claw, branch, surface, sides)


def fundamental_group(ct: CoverTripod, branched: bool = True) -> Presentation:
    """Pushout of the tripod: all three sides' lifted relators plus the claw
    relations, and (by default) the branch relations.  With branched=False
    this is the group of the covering complement instead."""
    rels = []
    for key in SIDES:
        rels.extend(ct.lifted_sides[key])
    if branched:
        rels.extend(ct.branch_relators)
    rels.extend(ct.claw_relators)
    return ct._presentation(rels)


@dataclass(frozen=True)
class TrisectionParameters:
    g: int
    k1: int
    k2: int
    k3: int

    def format(self) -> str:
        return f"({self.g}; {self.k1},{self.k2},{self.k3})"


def euler_characteristic_of_surface(ct: CoverTripod) -> int:
    """Riemann-Hurwitz count: chi of the branched covering surface."""
    n = ct.n
    total = 2 * n
    for i in range(2 * ct.b):
        total -= n - ct.coloring.permutation(i).num_cycles()
    return total


def trisection_parameters(ct: CoverTripod) -> TrisectionParameters:
    """Genus of the central surface and the three sector ranks."""
    inv = abelian_invariants(ct.surface(branched=True))
    if inv.torsion:
        raise ConsistencyError(
            f"branched surface homology has torsion {inv.torsion}; not a closed surface"
        )
    if inv.free_rank % 2:
        raise ConsistencyError("branched surface has odd first Betti number")
    g = inv.free_rank // 2
    chi = euler_characteristic_of_surface(ct)
    if chi != 2 - 2 * g:
        raise ConsistencyError(
            f"Riemann-Hurwitz Euler characteristic {chi} disagrees with genus {g}"
        )
    ks = []
    for mu, nu in (("alpha", "beta"), ("beta", "gamma"), ("gamma", "alpha")):
        rels = (
            list(ct.lifted_sides[mu])
            + list(ct.lifted_sides[nu])
            + list(ct.claw_relators)
            + list(ct.branch_relators)
        )
        pushout = ct._presentation(rels)
        free, _ = cokernel_invariants(pushout.abelianization_matrix())
        ks.append(free)
    k1, k2, k3 = ks
    for k in ks:
        if k > g:
            raise ConsistencyError(f"sector rank {k} exceeds genus {g}")
    return TrisectionParameters(g, k1, k2, k3)

"""Intersection form on H2 of the branched cover, plus signature, parity,
and the dihedral ribbon obstruction.

Classes are pushed off the central surface, written as based loop words in
path lifts, and paired by counting signed chord crossings inside the
branch-point neighborhoods.  The chord model places the 4b entry/exit
locations of a neighborhood boundary clockwise at angular slots; entries
are displaced slightly before their slot and exits slightly after, with
the first argument's curve displaced twice as far as the second's.  Both
displacement direction and crossing sign are calibration constants pinned
by regression tests against the worked spun-trefoil example.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coloring import Coloring
from .cover import CoverTripod, unflatten
from .errors import ConsistencyError, ValidationError
from .homology import (
    H2Description,
    Lattice,
    SurfaceCoordinates,
    all_lagrangians,
    h2,
    surface_h1,
)
from .matrices import IntMatrix, solve
from .presentation import Word, cyclic_reduce, free_reduce

# Calibrated chord-model constants: entry endpoints sit before their slot
# and exits after (sign of the displacement), outer curves twice as far out
# as inner ones, and a clockwise A,C,B,D endpoint order counts -1.
_OUTER_OFFSET = 2
_INNER_OFFSET = 1
_ACBD_SIGN = -1


@dataclass(frozen=True)
class ConfigurationTriple:
    """Fiber number plus entry and exit locations on a branch-point
    neighborhood boundary."""

    fiber: int
    entry: int
    exit: int


def class_to_loopword(coeffs, ct: CoverTripod) -> Word:
    """Based loop word of a homology class given in path-lift coordinates.

    Each path lift expands to tree-word * lift * tree-word-back; the
    expansions are concatenated in ascending generator order and the result
    is cyclically freely reduced.
    """
    n = ct.n
    gamma = ct.tree.gamma
    perms = ct.coloring.permutations()
    word = Word()
    for f, m in enumerate(coeffs):
        if m == 0:
            continue
        i, j = unflatten(f, n)
        target = perms[i](j)
        loop = gamma[j - 1] * Word(((f, 1),)) * gamma[target - 1].inverse()
        piece = loop if m > 0 else loop.inverse()
        for _ in range(abs(m)):
            word = word * piece
    return cyclic_reduce(free_reduce(word))


def choose_x_prime(x, l_alpha: Lattice, l_beta: Lattice):
    """Deterministic part of x lying in the first Lagrangian such that the
    remainder lies in the second."""
    columns = l_alpha.columns() + l_beta.columns()
    system = IntMatrix.from_columns(columns, l_alpha.ambient)
    sol = solve(system, list(x))
    if sol is None:
        raise ValidationError("class is not in the sum of the two Lagrangians")
    return l_alpha.basis.mul_vector(sol[: l_alpha.rank])


def configuration_triples(w: Word, coloring: Coloring) -> list[ConfigurationTriple]:
    """One triple per cyclically adjacent pair of path lifts in the word."""
    letters = w.letters
    if not letters:
        return []
    n = coloring.n
    perms = coloring.permutations()

    def endpoints(letter):
        f, sign = letter
        i, j = unflatten(f, n)
        if sign > 0:
            return i, j, perms[i](j)
        return i, perms[i](j), j

    out = []
    count = len(letters)
    for s in range(count):
        i1, _, end1 = endpoints(letters[s])
        i2, start2, _ = endpoints(letters[(s + 1) % count])
        if end1 != start2:
            raise ConsistencyError("loop word is not cyclically composable")
        entry = 2 * i1 + 1 if letters[s][1] > 0 else 2 * i1
        exit_ = 2 * i2 if letters[(s + 1) % count][1] > 0 else 2 * i2 + 1
        if entry == exit_:
            raise ConsistencyError("entry equals exit; word was not reduced")
        out.append(ConfigurationTriple(end1, entry, exit_))
    return out


def local_intersection(t1: ConfigurationTriple, t2: ConfigurationTriple) -> int:
    """Signed chord crossing inside one neighborhood; the first triple takes
    the outer push-off, the second the inner."""
    if t1.fiber != t2.fiber:
        return 0
    span = 8 * (max(t1.entry, t1.exit, t2.entry, t2.exit) + 1)
    a = (8 * t1.entry - _OUTER_OFFSET) % span
    b = (8 * t1.exit + _OUTER_OFFSET) % span
    c = (8 * t2.entry - _INNER_OFFSET) % span
    d = (8 * t2.exit + _INNER_OFFSET) % span
    dc = (c - a) % span
    dd = (d - a) % span
    db = (b - a) % span
    in_c = 0 < dc < db
    in_d = 0 < dd < db
    if in_c == in_d:
        return 0
    if dc < db < dd:
        return _ACBD_SIGN
    if dd < db < dc:
        return -_ACBD_SIGN
    raise ConsistencyError("degenerate chord configuration")


def _pair_triples(outer, inner) -> int:
    return sum(local_intersection(t1, t2) for t1 in outer for t2 in inner)


def pair_loopwords(outer: Word, inner: Word, coloring: Coloring) -> int:
    """Pairing of two based loop words; the first takes the outer push-off."""
    return _pair_triples(
        configuration_triples(outer, coloring),
        configuration_triples(inner, coloring),
    )


def surface_pairing(u, v, ct: CoverTripod, coords: SurfaceCoordinates | None = None) -> int:
    """Algebraic intersection number on the central surface; the first
    argument takes the outer push-off."""
    if coords is None:
        coords = surface_h1(ct)
    wu = class_to_loopword(coords.lift.mul_vector(list(u)), ct)
    wv = class_to_loopword(coords.lift.mul_vector(list(v)), ct)
    return pair_loopwords(wu, wv, ct.coloring)


def pairing(x, y, ct: CoverTripod, coords=None, lagrangians=None) -> int:
    """Intersection number of two H2 classes given in surface coordinates."""
    if coords is None:
        coords = surface_h1(ct)
    if lagrangians is None:
        lagrangians = all_lagrangians(ct, coords)
    la, lb, lg = lagrangians
    lab = _lattice_sum_cols(la, lb)
    for vec in (x, y):
        if not lg.contains(vec) or solve(lab, list(vec)) is None:
            raise ValidationError("class is outside the H2 numerator lattice")
    xp = choose_x_prime(x, la, lb)
    return surface_pairing(xp, y, ct, coords)


def _lattice_sum_cols(a: Lattice, b: Lattice) -> IntMatrix:
    return IntMatrix.from_columns(a.columns() + b.columns(), a.ambient)


@dataclass(frozen=True)
class IntersectionForm:
    gram: IntMatrix
    h2: H2Description

    @property
    def rank(self) -> int:
        return self.gram.rows


def intersection_form(ct: CoverTripod) -> IntersectionForm:
    """Gram matrix of the intersection form on the free part of H2."""
    coords = surface_h1(ct)
    lagrangians = all_lagrangians(ct, coords)
    desc = h2(ct, coords, lagrangians)
    reps = desc.surface_reps
    la, lb, _ = lagrangians
    outer_triples = []
    inner_triples = []
    for rep in reps:
        xp = choose_x_prime(rep, la, lb)
        wo = class_to_loopword(coords.lift.mul_vector(list(xp)), ct)
        wi = class_to_loopword(coords.lift.mul_vector(list(rep)), ct)
        outer_triples.append(configuration_triples(wo, ct.coloring))
        inner_triples.append(configuration_triples(wi, ct.coloring))
    size = len(reps)
    rows = [
        [_pair_triples(outer_triples[a], inner_triples[b]) for b in range(size)]
        for a in range(size)
    ]
    gram = IntMatrix.from_rows(rows, size)
    if gram != gram.transpose():
        raise ConsistencyError(f"intersection form is not symmetric: {rows}")
    return IntersectionForm(gram, desc)


def gram_matrix(ct: CoverTripod) -> IntMatrix:
    return intersection_form(ct).gram


def signature(g: IntMatrix) -> int:
    """Signature of a symmetric integer matrix by exact rational
    diagonalization; zero-diagonal pivots are handled by adding another
    basis vector, which turns a hyperbolic pair into a (+1, -1) pair."""
    if g.rows != g.cols:
        raise ValidationError("signature of a non-square matrix")
    if g != g.transpose():
        raise ValidationError("signature of a non-symmetric matrix")
    n = g.rows
    m = [[Fraction(g.entry(i, j)) for j in range(n)] for i in range(n)]
    sig = 0
    for k in range(n):
        if m[k][k] == 0:
            j = next((t for t in range(k + 1, n) if m[t][t] != 0), None)
            if j is not None:
                for t in range(n):
                    m[k][t], m[j][t] = m[j][t], m[k][t]
                for t in range(n):
                    m[t][k], m[t][j] = m[t][j], m[t][k]
            else:
                j = next((t for t in range(k + 1, n) if m[k][t] != 0), None)
                if j is None:
                    continue
                for t in range(n):
                    m[k][t] += m[j][t]
                for t in range(n):
                    m[t][k] += m[t][j]
        p = m[k][k]
        sig += 1 if p > 0 else -1
        for i in range(k + 1, n):
            f = m[i][k] / p
            if f:
                for t in range(k, n):
                    m[i][t] -= f * m[k][t]
                for t in range(k + 1, n):
                    m[t][i] = m[i][t]
                m[k][i] = Fraction(0)
                m[i][k] = Fraction(0)
    return sig


def parity(g: IntMatrix) -> str:
    """"even" when every diagonal entry is even, else "odd"."""
    return "even" if all(g.entry(i, i) % 2 == 0 for i in range(g.rows)) else "odd"


def is_dihedral_coloring(c: Coloring) -> bool:
    """True when every endpoint permutation is a reflection of the odd
    p-gon with vertices 1..p."""
    p = c.n
    if p < 3 or p % 2 == 0:
        return False
    half = (p + 1) // 2  # inverse of 2 mod p
    for perm in c.permutations():
        center = ((perm(1) + 1) * half) % p
        for j in range(1, p + 1):
            r = (2 * center - j) % p
            if perm(j) != (r if r else p):
                return False
    return True


def xi_p(ct: CoverTripod, p: int, e_f: int = 0) -> Fraction:
    """Ribbon obstruction (p-1)/4 * e_F - signature for p-dihedral covers."""
    if p != ct.n:
        raise ValidationError(f"coloring has degree {ct.n}, not {p}")
    if not is_dihedral_coloring(ct.coloring):
        raise ValidationError("coloring is not dihedral; obstruction undefined")
    sigma = signature(gram_matrix(ct))
    return Fraction(p - 1, 4) * e_f - sigma


def intersection_report(ct: CoverTripod, p: int | None = None, e_f: int = 0) -> dict:
    """JSON-ready report: Gram matrix, signature, parity, optional Xi."""
    form = intersection_form(ct)
    out = {
        "gram": form.gram.to_lists(),
        "signature": signature(form.gram),
        "parity": parity(form.gram),
        "xi": None,
    }
    if p is not None:
        out["xi"] = {"p": p, "e_f": e_f, "value": str(xi_p(ct, p, e_f))}
    return out

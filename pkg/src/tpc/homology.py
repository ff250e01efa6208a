"""Homology of the branched cover by exact lattice arithmetic over Z.

H1 of the central surface is the torsion-free quotient of the path-lift
generators by the abelianized surface relations; the kernels of the three
handlebody inclusions are Lagrangian sublattices, and H2/H3 come from their
sums, intersections, and quotients.  Sums are honest Z-spans (never
saturated): torsion in H2 arises exactly from that choice.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .cover import CoverTripod, fundamental_group, trisection_parameters
from .errors import ConsistencyError, ConsistencyWarning, ValidationError
from .matrices import (
    HermiteColumnForm,
    IntMatrix,
    hermite_column_form,
    inverse_unimodular,
    kernel_columns,
    smith_normal_form,
    solve,
)
from .presentation import AbelianInvariants, abelian_invariants

SIDES = ("alpha", "beta", "gamma")


@dataclass(frozen=True)
class Lattice:
    """Sublattice of Z^ambient, basis columns in canonical column HNF."""

    ambient: int
    basis: IntMatrix

    @staticmethod
    def from_columns(ambient: int, columns) -> "Lattice":
        raw = IntMatrix.from_columns(list(columns), ambient)
        h = hermite_column_form(raw)
        return Lattice(ambient, IntMatrix.from_columns(h.basis_columns(), ambient))

    @staticmethod
    def zero(ambient: int) -> "Lattice":
        return Lattice.from_columns(ambient, [])

    @staticmethod
    def full(ambient: int) -> "Lattice":
        return Lattice(ambient, IntMatrix.identity(ambient))

    @property
    def rank(self) -> int:
        return self.basis.cols

    def columns(self) -> list[tuple[int, ...]]:
        return self.basis.columns()

    def contains(self, v) -> bool:
        return solve(self.basis, list(v)) is not None

    def is_primitive(self) -> bool:
        snf = smith_normal_form(self.basis)
        return all(d == 1 for d in snf.invariant_factors())


def lattice_sum(a: Lattice, b: Lattice) -> Lattice:
    """Honest Z-span of the union of bases (no saturation)."""
    if a.ambient != b.ambient:
        raise ValidationError("lattice sum needs equal ambient ranks")
    return Lattice.from_columns(a.ambient, a.columns() + b.columns())


def lattice_intersect(a: Lattice, b: Lattice) -> Lattice:
    """Intersection via the kernel of the side-by-side system [A | -B]."""
    if a.ambient != b.ambient:
        raise ValidationError("lattice intersection needs equal ambient ranks")
    negated = [tuple(-x for x in col) for col in b.columns()]
    system = IntMatrix.from_columns(a.columns() + negated, a.ambient)
    vectors = []
    for k in kernel_columns(system):
        vectors.append(a.basis.mul_vector(k[: a.rank]))
    return Lattice.from_columns(a.ambient, vectors)


# ---------------------------------------------------------------------------
# H1 of the central surface
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SurfaceCoordinates:
    """Coordinates on H1 of the branched central surface.

    lift maps surface classes (Z^2g) to path-lift exponent vectors
    (Z^{2bn}); projection maps back; projection after lift is the identity.
    """

    rank: int
    lift: IntMatrix
    projection: IntMatrix
    generator_names: tuple[str, ...]

    @property
    def genus(self) -> int:
        return self.rank // 2

    def basis_vectors(self) -> list[tuple[int, ...]]:
        return self.lift.columns()

    def format_class(self, coeffs) -> str:
        return format_loop_vector(self.lift.mul_vector(list(coeffs)), self.generator_names)


def format_loop_vector(vec, names) -> str:
    """Render an exponent vector as a signed combination of generators."""
    parts = []
    for c, name in zip(vec, names):
        if c == 0:
            continue
        mag = abs(c)
        term = name if mag == 1 else f"{mag}*{name}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {term}")
    return " ".join(parts) if parts else "0"


def _unit(m: int, i: int) -> tuple[int, ...]:
    return tuple(1 if k == i else 0 for k in range(m))


def _outside_q_span(h: HermiteColumnForm, x) -> bool:
    residual = [Fraction(v) for v in x]
    for i, j in h.pivots:
        if residual[i]:
            c = residual[i] / h.H.entry(i, j)
            col = h.H.column(j)
            for r in range(len(residual)):
                residual[r] -= c * col[r]
    return any(residual)


def _greedy_standard_basis(vbasis, m: int, free: int) -> list[int] | None:
    """Standard coordinates that complete the relation lattice to Z^m,
    preferring the earliest generator indices; None when no such subset
    exists."""
    chosen: list[int] = []
    current = hermite_column_form(IntMatrix.from_columns(list(vbasis), m))
    for i in range(m):
        if len(chosen) == free:
            break
        e = _unit(m, i)
        if not _outside_q_span(current, e):
            continue
        cand = list(vbasis) + [_unit(m, s) for s in chosen] + [e]
        snf = smith_normal_form(IntMatrix.from_columns(cand, m))
        factors = snf.invariant_factors()
        if len(factors) == len(vbasis) + len(chosen) + 1 and all(d == 1 for d in factors):
            chosen.append(i)
            current = hermite_column_form(
                IntMatrix.from_columns(list(vbasis) + [_unit(m, s) for s in chosen], m)
            )
    return chosen if len(chosen) == free else None


def surface_h1(ct: CoverTripod) -> SurfaceCoordinates:
    """Coordinates for the torsion-free H1 of the branched surface.

    Prefers a basis of plain path-lift generators (earliest indices first)
    so small worked examples read off directly; falls back to a Smith
    normal form basis when no generator subset works.
    """
    pres = ct.surface(branched=True)
    rel = pres.abelianization_matrix()
    m = rel.cols
    relcols = rel.transpose()
    snf = smith_normal_form(relcols)
    factors = snf.invariant_factors()
    torsion = [d for d in factors if d > 1]
    if torsion:
        raise ConsistencyError(
            f"surface homology has torsion {torsion}; not a closed orientable surface"
        )
    free = m - len(factors)
    if free % 2:
        raise ConsistencyError(f"surface first Betti number {free} is odd")
    names = tuple(pres.name(g) for g in range(m))
    vbasis = hermite_column_form(relcols).basis_columns()
    chosen = _greedy_standard_basis(vbasis, m, free)
    if chosen is not None:
        lift_cols = [_unit(m, s) for s in chosen]
        mat = IntMatrix.from_columns(list(vbasis) + lift_cols, m)
        inv = inverse_unimodular(mat)
        projection = IntMatrix.from_rows(inv.to_lists()[len(vbasis) :], m)
        lift = IntMatrix.from_columns(lift_cols, m)
    else:
        r = len(factors)
        uinv = inverse_unimodular(snf.U)
        lift = IntMatrix.from_columns([uinv.column(r + k) for k in range(free)], m)
        projection = IntMatrix.from_rows(snf.U.to_lists()[r:], m)
    return SurfaceCoordinates(free, lift, projection, names)


# ---------------------------------------------------------------------------
# Lagrangians and the homology groups
# ---------------------------------------------------------------------------


def lagrangian(ct: CoverTripod, side: str, coords: SurfaceCoordinates | None = None) -> Lattice:
    """Kernel of H1(surface) -> H1(handlebody) as a sublattice of Z^2g."""
    if coords is None:
        coords = surface_h1(ct)
    rel = ct.side(side, branched=True).abelianization_matrix()
    negated = [tuple(-x for x in col) for col in rel.transpose().columns()]
    system = IntMatrix.from_columns(coords.lift.columns() + negated, coords.lift.rows)
    vectors = [k[: coords.rank] for k in kernel_columns(system)]
    lat = Lattice.from_columns(coords.rank, vectors)
    if lat.rank != coords.genus:
        raise ConsistencyError(
            f"kernel into handlebody {side} has rank {lat.rank}, expected genus {coords.genus}"
        )
    if not lat.is_primitive():
        raise ConsistencyError(f"kernel lattice for side {side} is not primitive")
    return lat


def all_lagrangians(ct: CoverTripod, coords: SurfaceCoordinates | None = None):
    if coords is None:
        coords = surface_h1(ct)
    return tuple(lagrangian(ct, side, coords) for side in SIDES)


@dataclass(frozen=True)
class QuotientDescription:
    invariants: AbelianInvariants
    representatives: tuple[tuple[int, ...], ...]


def lattice_quotient(numerator: Lattice, denominator: Lattice) -> QuotientDescription:
    """Invariants of numerator/denominator with free-part representatives.

    Representatives complete the Smith-transformed denominator basis inside
    the numerator, expressed in the numerator's ambient coordinates.
    """
    coeffs = []
    for col in denominator.columns():
        x = solve(numerator.basis, list(col))
        if x is None:
            raise ConsistencyError("denominator lattice not contained in numerator")
        coeffs.append(x)
    inclusion = IntMatrix.from_columns(coeffs, numerator.rank)
    snf = smith_normal_form(inclusion)
    factors = snf.invariant_factors()
    torsion = tuple(d for d in factors if d > 1)
    free = numerator.rank - len(factors)
    uinv = inverse_unimodular(snf.U)
    reps = tuple(
        numerator.basis.mul_vector(uinv.column(len(factors) + k)) for k in range(free)
    )
    return QuotientDescription(AbelianInvariants(free, torsion), reps)


@dataclass(frozen=True)
class H2Description:
    invariants: AbelianInvariants
    surface_reps: tuple[tuple[int, ...], ...]
    loop_reps: tuple[tuple[int, ...], ...]


def h2(ct: CoverTripod, coords=None, lagrangians=None) -> H2Description:
    """H2 as (L_gamma meet (L_alpha + L_beta)) / (L_gamma meet L_alpha + L_gamma meet L_beta)."""
    if coords is None:
        coords = surface_h1(ct)
    if lagrangians is None:
        lagrangians = all_lagrangians(ct, coords)
    la, lb, lg = lagrangians
    numerator = lattice_intersect(lg, lattice_sum(la, lb))
    denominator = lattice_sum(lattice_intersect(lg, la), lattice_intersect(lg, lb))
    q = lattice_quotient(numerator, denominator)
    loops = tuple(coords.lift.mul_vector(list(r)) for r in q.representatives)
    return H2Description(q.invariants, q.representatives, loops)


def h3(ct: CoverTripod, coords=None, lagrangians=None) -> AbelianInvariants:
    """H3 is free of the rank of the triple intersection."""
    if coords is None:
        coords = surface_h1(ct)
    if lagrangians is None:
        lagrangians = all_lagrangians(ct, coords)
    la, lb, lg = lagrangians
    triple = lattice_intersect(lattice_intersect(la, lb), lg)
    return AbelianInvariants(triple.rank, ())


@dataclass(frozen=True)
class HomologySummary:
    H0: AbelianInvariants
    H1: AbelianInvariants
    H2: AbelianInvariants
    H3: AbelianInvariants
    H4: AbelianInvariants
    h2_surface_reps: tuple[tuple[int, ...], ...]
    h2_loop_reps: tuple[tuple[int, ...], ...]
    warnings: tuple[str, ...]

    def betti(self) -> tuple[int, int, int, int, int]:
        return (
            self.H0.free_rank,
            self.H1.free_rank,
            self.H2.free_rank,
            self.H3.free_rank,
            self.H4.free_rank,
        )

    def format(self) -> str:
        lines = []
        for k, inv in enumerate((self.H0, self.H1, self.H2, self.H3, self.H4)):
            lines.append(f"H{k} = {inv.format()}")
        for w in self.warnings:
            lines.append(f"warning: {w}")
        return "\n".join(lines)


def summary(ct: CoverTripod) -> HomologySummary:
    """All homology groups with duality and Euler-characteristic checks."""
    coords = surface_h1(ct)
    lagrangians = all_lagrangians(ct, coords)
    h2d = h2(ct, coords, lagrangians)
    h3v = h3(ct, coords, lagrangians)
    h1 = abelian_invariants(fundamental_group(ct))
    if h3v.free_rank != h1.free_rank:
        raise ConsistencyError(
            f"duality rank check failed: b3 = {h3v.free_rank} but b1 = {h1.free_rank}"
        )
    params = trisection_parameters(ct)
    chi = 2 - 2 * h1.free_rank + h2d.invariants.free_rank
    chi_tri = 2 + params.g - (params.k1 + params.k2 + params.k3)
    if chi != chi_tri:
        raise ConsistencyError(
            f"Euler characteristic mismatch: homology gives {chi}, "
            f"trisection parameters give {chi_tri}"
        )
    notes = ()
    if tuple(h1.torsion) != tuple(h2d.invariants.torsion):
        msg = (
            f"linking-form duality suspect: H1 torsion {list(h1.torsion)} "
            f"differs from H2 torsion {list(h2d.invariants.torsion)}"
        )
        warnings.warn(msg, ConsistencyWarning, stacklevel=2)
        notes = (msg,)
    z = AbelianInvariants(1, ())
    return HomologySummary(
        z, h1, h2d.invariants, h3v, z, h2d.surface_reps, h2d.loop_reps, notes
    )


def homology_report(ct: CoverTripod) -> dict:
    """JSON-ready homology report with H2 basis in path-lift coordinates."""
    s = summary(ct)

    def enc(inv: AbelianInvariants) -> dict:
        return {"free": inv.free_rank, "torsion": list(inv.torsion)}

    return {
        "H0": enc(s.H0),
        "H1": enc(s.H1),
        "H2": enc(s.H2),
        "H3": enc(s.H3),
        "H4": enc(s.H4),
        "H2_basis": [list(v) for v in s.h2_loop_reps],
    }

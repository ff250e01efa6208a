"""Permutation labellings of diagram endpoints and their validation.

A coloring assigns a permutation of the sheets {1..n} to each of the 2b
endpoint meridians.  A word in the meridians acts on sheets first letter
first; a coloring is valid when every tangle relator (and the surface
relator) acts trivially.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from .errors import ValidationError
from .presentation import Word

if TYPE_CHECKING:  # pragma: no cover
    from .wirtinger import Tripod


@dataclass(frozen=True)
class Permutation:
    """Permutation of {1..n}; images[i] is the image of i+1."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValidationError(f"not a permutation of 1..{n}: {self.images}")

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(1, n + 1)))

    @staticmethod
    def from_cycles(n: int, cycles) -> "Permutation":
        images = list(range(1, n + 1))
        for cycle in cycles:
            cycle = [int(x) for x in cycle]
            for x in cycle:
                if not 1 <= x <= n:
                    raise ValidationError(f"cycle entry {x} outside 1..{n}")
            if len(set(cycle)) != len(cycle):
                raise ValidationError(f"repeated entry in cycle {cycle}")
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                if images[a - 1] != a:
                    raise ValidationError("cycles are not disjoint")
                images[a - 1] = b
        return Permutation(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def inverse(self) -> "Permutation":
        out = [0] * len(self.images)
        for i, y in enumerate(self.images):
            out[y - 1] = i + 1
        return Permutation(tuple(out))

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self.compose(other))(x) = self(other(x))."""
        if self.degree != other.degree:
            raise ValidationError("degree mismatch in composition")
        return Permutation(tuple(self.images[y - 1] for y in other.images))

    def is_identity(self) -> bool:
        return all(y == i + 1 for i, y in enumerate(self.images))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its least element, sorted."""
        seen = [False] * self.degree
        out = []
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            cycle = [start]
            seen[start - 1] = True
            x = self(start)
            while x != start:
                cycle.append(x)
                seen[x - 1] = True
                x = self(x)
            if len(cycle) > 1 or include_fixed:
                out.append(tuple(cycle))
        return out

    def num_cycles(self) -> int:
        """Cycle count including fixed points."""
        return len(self.cycles(include_fixed=True))


@dataclass(frozen=True)
class ColoringSpec:
    """Raw endpoint labelling: degree and one permutation per endpoint."""

    degree: int
    endpoint_images: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for images in self.endpoint_images:
            if len(images) != self.degree:
                raise ValidationError("endpoint permutation degree mismatch")


@dataclass(frozen=True)
class Coloring:
    spec: ColoringSpec

    @staticmethod
    def from_permutations(perms) -> "Coloring":
        perms = tuple(perms)
        if not perms:
            raise ValidationError("coloring needs at least one endpoint")
        n = perms[0].degree
        return Coloring(ColoringSpec(n, tuple(p.images for p in perms)))

    @property
    def n(self) -> int:
        return self.spec.degree

    @property
    def num_endpoints(self) -> int:
        return len(self.spec.endpoint_images)

    def permutation(self, endpoint: int) -> Permutation:
        return Permutation(self.spec.endpoint_images[endpoint])

    def permutations(self) -> list[Permutation]:
        return [Permutation(im) for im in self.spec.endpoint_images]

    def act(self, w: Word, sheet: int) -> int:
        """Image of a sheet under the word, first letter acting first."""
        for g, s in w.letters:
            p = self.permutation(g)
            sheet = p(sheet) if s > 0 else p.inverse()(sheet)
        return sheet

    def word_permutation(self, w: Word) -> Permutation:
        return Permutation(tuple(self.act(w, l) for l in range(1, self.n + 1)))


@dataclass(frozen=True)
class ColoringReport:
    ok: bool
    failures: tuple[tuple[str, int, Word], ...]  # (group label, relator index, relator)

    def format(self) -> str:
        if self.ok:
            return "coloring valid"
        lines = ["coloring invalid:"]
        for label, idx, rel in self.failures:
            lines.append(f"  {label} relator {idx}: {rel.format()} does not act trivially")
        return "\n".join(lines)


def validate_coloring(t: "Tripod", c: Coloring) -> ColoringReport:
    """Check the surface relator and all three tangles' relators act trivially."""
    if c.num_endpoints != 2 * t.b:
        raise ValidationError(
            f"coloring has {c.num_endpoints} endpoints, diagram needs {2 * t.b}"
        )
    failures = []
    for label, pres in (
        ("surface", t.surface_group),
        ("alpha", t.alpha),
        ("beta", t.beta),
        ("gamma", t.gamma),
    ):
        for idx, rel in enumerate(pres.relators):
            if not c.word_permutation(rel).is_identity():
                failures.append((label, idx, rel))
    return ColoringReport(not failures, tuple(failures))


def is_transitive(c: Coloring) -> bool:
    """True when the endpoint permutations generate a transitive action."""
    n = c.n
    perms = c.permutations()
    seen = {1}
    frontier = [1]
    while frontier:
        x = frontier.pop()
        for p in perms:
            for y in (p(x), p.inverse()(x)):
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
    return len(seen) == n


def dihedral_coloring(colors, p: int) -> Coloring:
    """Coloring by reflections of the p-gon: color c gives j -> 2c - j mod p."""
    if p < 3 or p % 2 == 0:
        raise ValidationError(f"dihedral degree must be odd and >= 3, got {p}")
    perms = []
    for c in colors:
        images = []
        for j in range(1, p + 1):
            r = (2 * c - j) % p
            images.append(r if r else p)
        perms.append(Permutation(tuple(images)))
    return Coloring.from_permutations(perms)


def cyclic_coloring(signs, n: int) -> Coloring:
    """Coloring sending endpoint k to the n-cycle (1..n) raised to signs[k]."""
    if n < 1:
        raise ValidationError(f"cyclic degree must be >= 1, got {n}")
    step = Permutation(tuple((i % n) + 1 for i in range(1, n + 1)))
    inv = step.inverse()
    perms = []
    for s in signs:
        if s not in (1, -1):
            raise ValidationError(f"cyclic sign must be +-1, got {s}")
        perms.append(step if s > 0 else inv)
    return Coloring.from_permutations(perms)


def stevedore_sigma_tau(n: int) -> tuple[Permutation, Permutation]:
    """The pair sigma = (1,2,...,n) and tau with tau^-1 sigma tau = sigma^2.

    tau^-1 lists the odd values 1,3,...,n followed by the even values
    2,4,...,n-1 (two-row form), which conjugates the n-cycle to its square.
    """
    if n < 3 or n % 2 == 0:
        raise ValidationError(f"degree must be odd and >= 3, got {n}")
    sigma = Permutation(tuple((i % n) + 1 for i in range(1, n + 1)))
    k = (n + 3) // 2
    tau_inv = []
    for i in range(1, n + 1):
        tau_inv.append(2 * i - 1 if i <= k - 1 else 2 * (i - k + 1))
    tau = Permutation(tuple(tau_inv)).inverse()
    return sigma, tau


def stevedore_coloring(n: int) -> Coloring:
    """Degree-n coloring of the 5-bridge ribbon disk double.

    The meridian images are a = sigma, b = x_2 = tau; then x_0 = tau after
    sigma^-1, x_1 its inverse, and the remaining endpoint pairs alternate
    tau, tau^-1.
    """
    sigma, tau = stevedore_sigma_tau(n)
    x0 = tau.compose(sigma.inverse())
    x1 = x0.inverse()
    perms = [x0, x1]
    for _ in range(4):
        perms.extend([tau, tau.inverse()])
    return Coloring.from_permutations(perms)


def cyclic_coloring_search(t: "Tripod", n: int) -> Coloring:
    """Find sign exponents making the cyclic coloring valid.

    Signs must alternate across each tangle's matchings (the image group is
    abelian, so matched endpoints need cancelling exponents); that determines
    the signs up to a global flip on each component of the matching graph,
    and the remaining choices are searched.
    """
    m = 2 * t.b
    adjacency: dict[int, list[int]] = {k: [] for k in range(m)}
    for tangle in (t.diagram.alpha, t.diagram.beta, t.diagram.gamma):
        for i, j in tangle.puncture_pairing():
            adjacency[i].append(j)
            adjacency[j].append(i)
    signs = [0] * m
    components = []
    for start in range(m):
        if signs[start]:
            continue
        comp = [start]
        signs[start] = 1
        queue = [start]
        while queue:
            x = queue.pop()
            for y in adjacency[x]:
                if signs[y] == 0:
                    signs[y] = -signs[x]
                    comp.append(y)
                    queue.append(y)
                elif signs[y] != -signs[x] and n > 2:
                    raise ValidationError(
                        "matching graph is not sign-alternating; no cyclic coloring"
                    )
        components.append(comp)
    for mask in range(1 << len(components)):
        flipped = list(signs)
        for ci, comp in enumerate(components):
            if mask >> ci & 1:
                for k in comp:
                    flipped[k] = -flipped[k]
        c = cyclic_coloring(flipped, n)
        if validate_coloring(t, c).ok:
            return c
    raise ValidationError(f"no valid cyclic coloring of degree {n} found")

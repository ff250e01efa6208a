"""Tri-plane diagrams in braid notation: data model, JSON round-trip,
structural validation, unlink component counts.

A tangle is a list of braid crossings (bottom to top) plus a perfect
matching of the 2b top positions (the maxima).  Crossings may join
non-adjacent positions; the two strands exchange positions and the
intermediate strands are untouched (band-style crossings).
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .coloring import Coloring, ColoringSpec, Permutation
from .errors import ValidationError

TANGLE_KEYS = ("alpha", "beta", "gamma")
PAIR_NAMES = ("alpha-beta", "beta-gamma", "gamma-alpha")


@dataclass(frozen=True)
class BraidCrossing:
    strand_a: int
    strand_b: int
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValidationError(f"crossing sign must be +-1, got {self.sign}")
        if self.strand_a == self.strand_b:
            raise ValidationError(f"crossing joins strand {self.strand_a} to itself")
        if self.strand_a < 0 or self.strand_b < 0:
            raise ValidationError("negative strand position")


@dataclass(frozen=True)
class TangleDiagram:
    bridge_number: int
    crossings: tuple[BraidCrossing, ...]
    matchings: tuple[tuple[int, int], ...]

    def __post_init__(self):
        b = self.bridge_number
        if b < 1:
            raise ValidationError(f"bridge number must be >= 1, got {b}")
        for c in self.crossings:
            if c.strand_a >= 2 * b or c.strand_b >= 2 * b:
                raise ValidationError(
                    f"crossing ({c.strand_a},{c.strand_b}) outside positions 0..{2 * b - 1}"
                )
        covered = []
        for pair in self.matchings:
            if len(pair) != 2 or pair[0] == pair[1]:
                raise ValidationError(f"matching {pair} is not a pair of distinct positions")
            for x in pair:
                if not 0 <= x < 2 * b:
                    raise ValidationError(f"matching index {x} outside positions 0..{2 * b - 1}")
            covered.extend(pair)
        if sorted(covered) != list(range(2 * b)):
            raise ValidationError(
                f"matchings must partition positions 0..{2 * b - 1}, got {self.matchings}"
            )

    def braid_permutation(self) -> Permutation:
        """Where each bottom puncture ends up among the top positions.

        Returned on {1..2b} (shifted by one from position indices)."""
        b2 = 2 * self.bridge_number
        pos = list(range(b2))  # pos[p] = current position of strand starting at p
        for c in self.crossings:
            i, j = c.strand_a, c.strand_b
            si = pos.index(i)
            sj = pos.index(j)
            pos[si], pos[sj] = j, i
        return Permutation(tuple(pos[p] + 1 for p in range(b2)))

    def puncture_pairing(self) -> list[tuple[int, int]]:
        """Which bottom punctures are joined by each strand arc."""
        perm = self.braid_permutation()
        top_to_bottom = {perm(p + 1) - 1: p for p in range(2 * self.bridge_number)}
        out = []
        for u, v in self.matchings:
            p, q = top_to_bottom[u], top_to_bottom[v]
            out.append((min(p, q), max(p, q)))
        return sorted(out)


@dataclass(frozen=True)
class TriPlaneDiagram:
    bridge_number: int
    alpha: TangleDiagram
    beta: TangleDiagram
    gamma: TangleDiagram

    def __post_init__(self):
        for key in TANGLE_KEYS:
            t = getattr(self, key)
            if t.bridge_number != self.bridge_number:
                raise ValidationError(
                    f"tangle {key} has bridge number {t.bridge_number}, expected {self.bridge_number}"
                )

    def tangle(self, key: str) -> TangleDiagram:
        if key not in TANGLE_KEYS:
            raise ValidationError(f"unknown tangle {key!r}")
        return getattr(self, key)


def component_count(d: TriPlaneDiagram, pair: str) -> int:
    """Components of the unlink obtained by gluing two tangles along the
    bridge sphere (first tangle upper, second reflected below)."""
    if pair not in PAIR_NAMES:
        raise ValidationError(f"pair must be one of {PAIR_NAMES}, got {pair!r}")
    first, second = pair.split("-")
    pairing_a = d.tangle(first).puncture_pairing()
    pairing_b = d.tangle(second).puncture_pairing()
    b2 = 2 * d.bridge_number
    nxt_a = {}
    nxt_b = {}
    for u, v in pairing_a:
        nxt_a[u], nxt_a[v] = v, u
    for u, v in pairing_b:
        nxt_b[u], nxt_b[v] = v, u
    seen = set()
    count = 0
    for start in range(b2):
        if start in seen:
            continue
        count += 1
        x = start
        while x not in seen:
            seen.add(x)
            y = nxt_a[x]
            seen.add(y)
            x = nxt_b[y]
    return count


# ---------------------------------------------------------------------------
# JSON round trip
# ---------------------------------------------------------------------------


def _require(cond: bool, msg: str):
    if not cond:
        raise ValidationError(msg)


def _tangle_from_payload(key: str, payload, b: int) -> TangleDiagram:
    _require(isinstance(payload, dict), f"tangles.{key} must be an object")
    _require(set(payload) <= {"crossings", "matchings"}, f"tangles.{key} has unknown keys")
    crossings = payload.get("crossings", [])
    matchings = payload.get("matchings", [])
    _require(isinstance(crossings, list), f"tangles.{key}.crossings must be a list")
    _require(isinstance(matchings, list), f"tangles.{key}.matchings must be a list")
    cr = []
    for idx, entry in enumerate(crossings):
        _require(
            isinstance(entry, list) and len(entry) == 3 and all(isinstance(x, int) for x in entry),
            f"tangles.{key}.crossings[{idx}] must be [i, j, sign]",
        )
        cr.append(BraidCrossing(entry[0], entry[1], entry[2]))
    ma = []
    for idx, entry in enumerate(matchings):
        _require(
            isinstance(entry, list) and len(entry) == 2 and all(isinstance(x, int) for x in entry),
            f"tangles.{key}.matchings[{idx}] must be [i, j]",
        )
        ma.append((entry[0], entry[1]))
    return TangleDiagram(b, tuple(cr), tuple(ma))


def _coloring_from_payload(payload, b: int, n: int) -> Coloring:
    _require(isinstance(payload, list), "coloring must be a list of permutations")
    _require(len(payload) == 2 * b, f"coloring must have {2 * b} entries, got {len(payload)}")
    perms = []
    for idx, cycles in enumerate(payload):
        _require(isinstance(cycles, list), f"coloring[{idx}] must be a list of cycles")
        for cyc in cycles:
            _require(
                isinstance(cyc, list) and all(isinstance(x, int) for x in cyc),
                f"coloring[{idx}] cycles must be integer lists",
            )
        try:
            perms.append(Permutation.from_cycles(n, cycles))
        except ValidationError as e:
            raise ValidationError(f"coloring[{idx}]: {e}") from None
    return Coloring.from_permutations(perms)


def parse_diagram(text: str) -> tuple[TriPlaneDiagram, Coloring]:
    """Parse the JSON interchange format; returns the diagram and coloring."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValidationError(f"not valid JSON: {e}") from None
    _require(isinstance(payload, dict), "top level must be an object")
    _require(
        set(payload) <= {"bridge_number", "degree", "tangles", "coloring"},
        f"unknown top-level keys {sorted(set(payload) - {'bridge_number', 'degree', 'tangles', 'coloring'})}",
    )
    for key in ("bridge_number", "degree", "tangles", "coloring"):
        _require(key in payload, f"missing key {key!r}")
    b = payload["bridge_number"]
    n = payload["degree"]
    _require(isinstance(b, int) and b >= 1, "bridge_number must be a positive integer")
    _require(isinstance(n, int) and n >= 1, "degree must be a positive integer")
    tangles = payload["tangles"]
    _require(isinstance(tangles, dict), "tangles must be an object")
    _require(set(tangles) == set(TANGLE_KEYS), f"tangles must have keys {TANGLE_KEYS}")
    parsed = {key: _tangle_from_payload(key, tangles[key], b) for key in TANGLE_KEYS}
    d = TriPlaneDiagram(b, parsed["alpha"], parsed["beta"], parsed["gamma"])
    c = _coloring_from_payload(payload["coloring"], b, n)
    return d, c


def _canonical_cycles(p: Permutation) -> list[list[int]]:
    return [list(c) for c in p.cycles(include_fixed=False)]


def serialize_diagram(d: TriPlaneDiagram, c: Coloring) -> str:
    """Canonical JSON text; byte-identical for equal inputs."""
    payload = {
        "bridge_number": d.bridge_number,
        "degree": c.n,
        "tangles": {
            key: {
                "crossings": [[x.strand_a, x.strand_b, x.sign] for x in d.tangle(key).crossings],
                "matchings": [[u, v] for u, v in d.tangle(key).matchings],
            }
            for key in TANGLE_KEYS
        },
        "coloring": [_canonical_cycles(p) for p in c.permutations()],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# Converter for notebook-style string lists
# ---------------------------------------------------------------------------

_TUPLE_RE = re.compile(r"\(([^()]*)\)")


def _int_tokens(body: str) -> list[int]:
    return [int(tok) for tok in body.split(",") if tok.strip()]


def tangle_from_notebook(crossings: str, matchings: str, bridge_number: int) -> TangleDiagram:
    """Build a tangle from strings like "(1,2,+),(1,2,+)" and "(0,1),(2,7)"."""
    cr = []
    for m in _TUPLE_RE.finditer(crossings):
        body = m.group(1).replace("+", "1").replace("-", "-1")
        vals = _int_tokens(body)
        if len(vals) != 3:
            raise ValidationError(f"crossing tuple ({m.group(1)}) must have three entries")
        cr.append(BraidCrossing(vals[0], vals[1], vals[2]))
    ma = []
    for m in _TUPLE_RE.finditer(matchings):
        vals = _int_tokens(m.group(1))
        if len(vals) != 2:
            raise ValidationError(f"matching tuple ({m.group(1)}) must have two entries")
        ma.append((vals[0], vals[1]))
    return TangleDiagram(bridge_number, tuple(cr), tuple(ma))


def coloring_from_notebook(perm_strings, degree: int) -> Coloring:
    """Build a coloring from per-endpoint cycle strings like "(1,2)" or
    "(2,5,3)(4,6,7)"; "id" or an empty string is the identity."""
    perms = []
    for text in perm_strings:
        text = text.strip()
        if text in ("", "id", "()", "(1)"):
            perms.append(Permutation.identity(degree))
            continue
        cycles = [_int_tokens(m.group(1)) for m in _TUPLE_RE.finditer(text)]
        if not cycles:
            raise ValidationError(f"cannot parse permutation {text!r}")
        perms.append(Permutation.from_cycles(degree, cycles))
    return Coloring.from_permutations(perms)

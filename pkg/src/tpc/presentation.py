"""Finitely presented groups: words, abelian invariants, Tietze moves,
Todd-Coxeter coset enumeration.

A word is a sequence of (generator index, sign) letters; the empty word is
the identity.  All invariants are computed from the presentation as given;
Tietze simplification only ever feeds human-readable reports.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ValidationError
from .matrices import IntMatrix, cokernel_invariants

Letter = tuple[int, int]


@dataclass(frozen=True)
class Word:
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        for g, s in self.letters:
            if s not in (1, -1):
                raise ValidationError(f"letter sign must be +-1, got {s}")
            if g < 0:
                raise ValidationError(f"negative generator index {g}")

    @staticmethod
    def from_letters(letters) -> "Word":
        return Word(tuple((int(g), int(s)) for g, s in letters))

    @staticmethod
    def generator(g: int, sign: int = 1) -> "Word":
        return Word(((g, sign),))

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple((g, -s) for g, s in reversed(self.letters)))

    def exponent_sums(self, num_generators: int) -> tuple[int, ...]:
        out = [0] * num_generators
        for g, s in self.letters:
            out[g] += s
        return tuple(out)

    def generators_used(self) -> set[int]:
        return {g for g, _ in self.letters}

    def format(self, names: "tuple[str, ...] | None" = None) -> str:
        if not self.letters:
            return "1"
        parts = []
        for g, s in self.letters:
            name = names[g] if names else f"x{g}"
            parts.append(name if s > 0 else name + "^-1")
        return " ".join(parts)


def free_reduce(w: Word) -> Word:
    stack: list[Letter] = []
    for letter in w.letters:
        if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
            stack.pop()
        else:
            stack.append(letter)
    return Word(tuple(stack))


def cyclic_reduce(w: Word) -> Word:
    r = free_reduce(w)
    letters = list(r.letters)
    while len(letters) >= 2 and letters[0][0] == letters[-1][0] and letters[0][1] == -letters[-1][1]:
        letters = letters[1:-1]
    return Word(tuple(letters))


@dataclass(frozen=True)
class Presentation:
    num_generators: int
    relators: tuple[Word, ...]
    generator_names: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.generator_names is not None and len(self.generator_names) != self.num_generators:
            raise ValidationError("generator_names length mismatch")
        for r in self.relators:
            for g, _ in r.letters:
                if g >= self.num_generators:
                    raise ValidationError(
                        f"relator uses generator {g}, presentation has {self.num_generators}"
                    )

    def name(self, g: int) -> str:
        return self.generator_names[g] if self.generator_names else f"x{g}"

    def format(self) -> str:
        gens = ", ".join(self.name(g) for g in range(self.num_generators))
        rels = ", ".join(r.format(self.generator_names) for r in self.relators)
        return f"< {gens} | {rels} >"

    def abelianization_matrix(self) -> IntMatrix:
        """Rows are relators, columns are generators (exponent sums)."""
        rows = [list(r.exponent_sums(self.num_generators)) for r in self.relators]
        return IntMatrix.from_rows(rows, self.num_generators)


@dataclass(frozen=True)
class AbelianInvariants:
    free_rank: int
    torsion: tuple[int, ...]  # divisibility-ordered, each > 1

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def order(self) -> int | None:
        """Group order when finite, else None."""
        if self.free_rank:
            return None
        n = 1
        for d in self.torsion:
            n *= d
        return n

    def format(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def abelian_invariants(p: Presentation) -> AbelianInvariants:
    free, torsion = cokernel_invariants(p.abelianization_matrix())
    return AbelianInvariants(free, tuple(torsion))


def certify_infinite(p: Presentation) -> bool:
    """True when the abelianization has positive free rank (a certificate
    of infinite order); False is inconclusive."""
    return abelian_invariants(p).free_rank > 0


# ---------------------------------------------------------------------------
# Tietze simplification (report-quality only, never load-bearing)
# ---------------------------------------------------------------------------


def _substitute(w: Word, g: int, replacement: Word) -> Word:
    out: list[Letter] = []
    inv = replacement.inverse().letters
    for letter in w.letters:
        if letter[0] == g:
            out.extend(replacement.letters if letter[1] > 0 else inv)
        else:
            out.append(letter)
    return free_reduce(Word(tuple(out)))


def _drop_generator(words: list[Word], names: list[str], g: int) -> list[Word]:
    remap = {}
    for old in range(len(names)):
        if old != g:
            remap[old] = old - (1 if old > g else 0)
    del names[g]
    return [Word(tuple((remap[h], s) for h, s in w.letters)) for w in words]


def _shorten_by(r: Word, s: Word) -> Word | None:
    """Try to shorten cyclic word r using relator s; None if no gain."""
    n = len(s)
    if n == 0 or len(r) < (n + 2) // 2:
        return None
    variants = []
    for base in (s, s.inverse()):
        for k in range(n):
            variants.append(Word(base.letters[k:] + base.letters[:k]))
    best = None
    rl = r.letters
    for v in variants:
        vl = v.letters
        # longest prefix of v occurring in r: replacing m letters by n-m
        for m in range(len(rl), 0, -1):
            if 2 * m <= n:
                break
            seg = vl[:m]
            for i in range(len(rl) - m + 1):
                if rl[i:i + m] == seg:
                    tail = Word(vl[m:]).inverse()
                    cand = free_reduce(Word(rl[:i] + tail.letters + rl[i + m:]))
                    if best is None or len(cand) < len(best):
                        best = cand
                    break
            if best is not None:
                break
    if best is not None and len(best) < len(r):
        return best
    return None


def tietze_simplify(p: Presentation, max_moves: int = 10000) -> Presentation:
    """Generator/relator reduction by Tietze moves, deterministic and budgeted.

    The result presents the same group.  Quality is best-effort: callers must
    not rely on reaching any particular normal form.
    """
    words = [free_reduce(r) for r in p.relators]
    names = [p.name(g) for g in range(p.num_generators)]
    moves = 0
    changed = True
    while changed and moves < max_moves:
        changed = False
        words = [cyclic_reduce(w) for w in words]
        words = [w for w in words if len(w) > 0]
        words.sort(key=lambda w: (len(w), w.letters))
        # drop duplicate relators (also inverses)
        seen = set()
        uniq = []
        for w in words:
            key = min(w.letters, w.inverse().letters)
            if key not in seen:
                seen.add(key)
                uniq.append(w)
        if len(uniq) != len(words):
            changed = True
        words = uniq
        # eliminate a generator that some relator determines
        victim = None
        for idx, w in enumerate(words):
            counts: dict[int, int] = {}
            for g, _ in w.letters:
                counts[g] = counts.get(g, 0) + 1
            once = sorted(g for g, c in counts.items() if c == 1)
            if once:
                victim = (idx, once[0])
                break
        if victim is not None:
            idx, g = victim
            w = words.pop(idx)
            pos = next(i for i, (h, _) in enumerate(w.letters) if h == g)
            gl = w.letters[pos]
            # w = a g^e b  =>  g^e = a^-1 b^-1
            a = Word(w.letters[:pos])
            b = Word(w.letters[pos + 1:])
            repl = free_reduce(a.inverse() * b.inverse())
            if gl[1] < 0:
                repl = repl.inverse()
            words = [_substitute(x, g, repl) for x in words]
            words = _drop_generator(words, names, g)
            moves += 1
            changed = True
            continue
        # pairwise overlap shortening
        for i in range(len(words)):
            for j in range(len(words)):
                if i == j or moves >= max_moves:
                    continue
                shorter = _shorten_by(words[i], words[j])
                if shorter is not None:
                    words[i] = shorter
                    moves += 1
                    changed = True
            if changed:
                break
    words = [cyclic_reduce(w) for w in words]
    words = [w for w in words if len(w) > 0]
    words.sort(key=lambda w: (len(w), w.letters))
    return Presentation(len(names), tuple(words), tuple(names))


# ---------------------------------------------------------------------------
# Todd-Coxeter coset enumeration (HLT with row filling)
# ---------------------------------------------------------------------------


@dataclass
class CosetTable:
    """Result of a coset enumeration over the trivial subgroup.

    status is "complete" (order is exact) or "bound-exceeded".  When
    complete, `action` maps each generator to the permutation it induces on
    the cosets, numbered 0..order-1.
    """

    status: str
    order: int | None
    max_cosets: int
    action: list[list[int]] = field(default_factory=list)

    def permutation_of(self, g: int) -> list[int]:
        return self.action[g]


def todd_coxeter(p: Presentation, max_cosets: int = 1_000_000) -> CosetTable:
    """Enumerate cosets of the trivial subgroup; order of the group if it
    completes within the bound."""
    n = p.num_generators
    ncols = 2 * n

    def col(g: int, s: int) -> int:
        return 2 * g + (0 if s > 0 else 1)

    def inv_col(c: int) -> int:
        return c ^ 1

    relator_cols = []
    for r in p.relators:
        w = free_reduce(r)
        if len(w) > 0:
            relator_cols.append([col(g, s) for g, s in w.letters])

    used = set()
    for w in relator_cols:
        for c in w:
            used.add(c // 2)
    if used != set(range(n)) and n > 0:
        # a generator without relators gives a free factor: never completes
        return CosetTable("bound-exceeded", None, max_cosets)

    table: list[list[int]] = [[0] * ncols]  # coset ids are 1-based; 0 = undefined
    table.append([0] * ncols)  # row for coset 1
    parent = [0, 1]
    alive = 1

    def rep(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pending: list[tuple[int, int]] = []

    def merge(x: int, y: int):
        nonlocal alive
        pending.append((x, y))
        while pending:
            a, b = pending.pop()
            a, b = rep(a), rep(b)
            if a == b:
                continue
            if b < a:
                a, b = b, a
            parent[b] = a
            alive -= 1
            row_b = table[b]
            row_a = table[a]
            for c in range(ncols):
                d = row_b[c]
                if not d:
                    continue
                row_b[c] = 0
                d = rep(d)
                e = row_a[c]
                if e:
                    pending.append((rep(e), d))
                else:
                    row_a[c] = d
                    back = table[d][inv_col(c)]
                    if back:
                        pending.append((rep(back), a))
                    else:
                        table[d][inv_col(c)] = a

    def define(alpha: int, c: int) -> int | None:
        nonlocal alive
        if len(table) - 1 >= max_cosets:
            return None
        table.append([0] * ncols)
        parent.append(len(table) - 1)
        beta = len(table) - 1
        alive += 1
        table[alpha][c] = beta
        table[beta][inv_col(c)] = alpha
        return beta

    def scan_and_fill(alpha: int, word: list[int]) -> bool:
        """Trace relator cycle at alpha, defining cosets to close it.
        Returns False when the coset bound is hit."""
        f, i = alpha, 0
        b, j = alpha, len(word) - 1
        while True:
            while i <= j:
                nxt = table[f][word[i]]
                if not nxt:
                    break
                f = rep(nxt)
                i += 1
            if i > j:
                if f != b:
                    merge(f, b)
                return True
            while j >= i:
                prv = table[b][inv_col(word[j])]
                if not prv:
                    break
                b = rep(prv)
                j -= 1
            if j < i:
                merge(f, b)
                return True
            if j == i:
                # one gap: deduction
                table[f][word[i]] = b
                table[b][inv_col(word[i])] = f
                return True
            beta = define(f, word[i])
            if beta is None:
                return False
            f = beta
            i += 1

    omega = 1
    while omega < len(table):
        if rep(omega) != omega:
            omega += 1
            continue
        for word in relator_cols:
            if not scan_and_fill(omega, word):
                return CosetTable("bound-exceeded", None, max_cosets)
            if rep(omega) != omega:
                break
        if rep(omega) == omega:
            row = table[omega]
            for c in range(ncols):
                if rep(omega) != omega:
                    break
                if not row[c]:
                    if define(omega, c) is None:
                        return CosetTable("bound-exceeded", None, max_cosets)
        omega += 1

    live = sorted(x for x in range(1, len(table)) if rep(x) == x)
    index_of = {x: i for i, x in enumerate(live)}
    action = []
    for g in range(n):
        images = []
        for x in live:
            y = table[x][col(g, 1)]
            images.append(index_of[rep(y)])
        action.append(images)
    return CosetTable("complete", len(live), max_cosets, action)

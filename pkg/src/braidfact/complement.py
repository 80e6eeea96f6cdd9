"""Fundamental groups of plane-curve complements, at desk scale.

From a validated cuspidal factorization of the full twist this module
builds the standard finite presentation of the complement group (Artin
action of each conjugator on the free group, one local relator per factor,
one projective relator), simplifies presentations by Tietze moves,
enumerates homomorphisms to small symmetric groups, and bounds group
orders by coset enumeration.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from .braid import BraidWord, Permutation, equals, full_twist
from .errors import FormatError
from .factorization import CuspidalFactor, Factorization, validate


def _reduce(letters) -> tuple[int, ...]:
    out: list[int] = []
    for k in letters:
        if out and out[-1] == -k:
            out.pop()
        else:
            out.append(int(k))
    return tuple(out)


@dataclass(frozen=True)
class FreeWord:
    """Freely reduced word over x_1..x_n; letter k means x_|k|^sign(k)."""

    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if any(k == 0 for k in self.letters):
            raise ValueError("letters must be nonzero")
        object.__setattr__(self, "letters", _reduce(self.letters))

    def __mul__(self, other: FreeWord) -> FreeWord:
        return FreeWord(self.letters + other.letters)

    def inverse(self) -> FreeWord:
        return FreeWord(tuple(-k for k in reversed(self.letters)))

    def cyclically_reduced(self) -> FreeWord:
        ls = list(self.letters)
        while len(ls) > 1 and ls[0] == -ls[-1]:
            ls = ls[1:-1]
        return FreeWord(tuple(ls))

    def max_index(self) -> int:
        return max((abs(k) for k in self.letters), default=0)

    def __len__(self) -> int:
        return len(self.letters)


@dataclass(frozen=True)
class FinitePresentation:
    """Generator count plus freely reduced relators.

    Relators that reduce to the empty word impose nothing and are dropped,
    which keeps the text format unambiguous (one nonempty line per relator).
    """

    ngens: int
    relators: tuple[FreeWord, ...]

    def __post_init__(self) -> None:
        if self.ngens < 0:
            raise ValueError("generator count must be >= 0")
        object.__setattr__(self, "relators", tuple(r for r in self.relators if r.letters))
        for r in self.relators:
            if r.max_index() > self.ngens:
                raise ValueError("relator uses a generator out of range")


def artin_action(w: BraidWord, u: FreeWord) -> FreeWord:
    """Action of a braid word on the free group F_d, first letter first.

    X_i maps x_i to x_i x_{i+1} x_i^-1 and x_{i+1} to x_i; X_i^-1 maps
    x_i to x_{i+1} and x_{i+1} to x_{i+1}^-1 x_i x_{i+1}; others fixed.
    """
    if u.max_index() > w.strands:
        raise ValueError("free-word index exceeds strand count")
    letters = u.letters
    for k in w.letters:
        i = abs(k)
        out: list[int] = []
        for l in letters:
            a = abs(l)
            if k > 0:
                if a == i:
                    img = (i, i + 1, -i)
                elif a == i + 1:
                    img = (i,)
                else:
                    img = (a,)
            else:
                if a == i:
                    img = (i + 1,)
                elif a == i + 1:
                    img = (-(i + 1), i, i + 1)
                else:
                    img = (a,)
            if l < 0:
                img = tuple(-x for x in reversed(img))
            out.extend(img)
        letters = _reduce(out)
    return FreeWord(letters)


def zvk_presentation(F: Factorization) -> FinitePresentation:
    """Present the complement group of a validated full-twist factorization.

    For a factor (rho, s) let a and b be the images of x_1 and x_2 under
    the action of rho.  The relator is a b^-1 for s=1, the commutator
    a b a^-1 b^-1 for s=2, and a b a b^-1 a^-1 b^-1 for s=3.  Relators are
    emitted in factor order, then the projective relator x_d ... x_2 x_1.
    """
    if not F.is_cuspidal:
        raise ValueError("presentation requires the cuspidal variant")
    d = F.strands
    if not equals(F.target, full_twist(d)):
        raise ValueError("presentation requires the full-twist target")
    if not validate(F).product_ok:
        raise ValueError("factorization does not validate")
    relators = []
    for f in F.factors:
        a = artin_action(f.rho, FreeWord((1,)))
        b = artin_action(f.rho, FreeWord((2,)))
        if f.s == 1:
            r = a * b.inverse()
        elif f.s == 2:
            r = a * b * a.inverse() * b.inverse()
        else:
            r = a * b * a * b.inverse() * a.inverse() * b.inverse()
        relators.append(r)
    relators.append(FreeWord(tuple(range(d, 0, -1))))
    return FinitePresentation(d, tuple(relators))


# ---------------------------------------------------------------------------
# Tietze simplification


def _substitute(r: FreeWord, gen: int, repl: FreeWord) -> FreeWord:
    out: list[int] = []
    for l in r.letters:
        if l == gen:
            out.extend(repl.letters)
        elif l == -gen:
            out.extend(repl.inverse().letters)
        else:
            out.append(l)
    return FreeWord(tuple(out))


def _drop_generator(r: FreeWord, gen: int) -> FreeWord:
    assert all(abs(l) != gen for l in r.letters)
    return FreeWord(tuple(l - 1 if l > gen else l + 1 if l < -gen else l for l in r.letters))


def simplify(P: FinitePresentation, budget: int = 1000) -> FinitePresentation:
    """Tietze simplification: eliminate generators occurring once in some
    relator, cyclically reduce, and drop trivial or duplicate relators.

    Presents an isomorphic group, never increases the generator count, and
    is deterministic: among candidates the shortest defining relator wins,
    ties broken by generator index then relator index.  The budget caps
    elimination steps.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    ngens = P.ngens
    relators = [r.cyclically_reduced() for r in P.relators]
    steps = 0
    while steps < budget:
        relators = [r for r in relators if r.letters]
        seen: set = set()
        kept = []
        for r in relators:
            if r.letters not in seen:
                seen.add(r.letters)
                kept.append(r)
        relators = kept
        best = None
        for ri, r in enumerate(relators):
            counts: dict[int, int] = {}
            for l in r.letters:
                counts[abs(l)] = counts.get(abs(l), 0) + 1
            for gen, cnt in counts.items():
                if cnt == 1:
                    cand = (len(r), gen, ri)
                    if best is None or cand < best:
                        best = cand
        if best is None:
            break
        _, gen, ri = best
        r = relators.pop(ri)
        pos = next(i for i, l in enumerate(r.letters) if abs(l) == gen)
        rotated = r.letters[pos:] + r.letters[:pos]
        rest = FreeWord(rotated[1:])
        # rotated = (+-gen) . rest == 1, so gen = rest^-1 or gen = rest
        repl = rest.inverse() if rotated[0] > 0 else rest
        relators = [
            _drop_generator(_substitute(x, gen, repl), gen).cyclically_reduced()
            for x in relators
        ]
        ngens -= 1
        steps += 1
    relators = [r for r in relators if r.letters]
    return FinitePresentation(ngens, tuple(relators))


# ---------------------------------------------------------------------------
# homomorphisms to symmetric groups


@dataclass(frozen=True)
class SymmetricImage:
    """Images of the presentation generators in S_n."""

    n: int
    images: tuple[Permutation, ...]
    epi: bool


def _evaluate(r: FreeWord, images: list[tuple[int, ...]], n: int) -> tuple[int, ...]:
    cur = tuple(range(1, n + 1))
    for l in r.letters:
        p = images[abs(l) - 1]
        if l < 0:
            inv = [0] * n
            for x, y in enumerate(p, start=1):
                inv[y - 1] = x
            p = tuple(inv)
        cur = tuple(p[x - 1] for x in cur)
    return cur


def _generates_full(images: list[tuple[int, ...]], n: int) -> bool:
    identity = tuple(range(1, n + 1))
    gens = [p for p in images if p != identity]
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for q in frontier:
            for p in gens:
                qp = tuple(p[x - 1] for x in q)
                if qp not in seen:
                    seen.add(qp)
                    nxt.append(qp)
        frontier = nxt
    import math

    return len(seen) == math.factorial(n)


def enumerate_homs(
    P: FinitePresentation,
    n: int,
    up_to_conjugacy: bool = True,
    epi_only: bool = False,
    *,
    max_n: int = 7,
    max_gens: int = 8,
) -> list[SymmetricImage]:
    """All homomorphisms to S_n by backtracking, complete within the caps.

    Generator images are chosen in lexicographic order; each relator is
    checked as soon as all its generators are assigned.  With
    up_to_conjugacy only the least representative of each simultaneous
    conjugacy class is returned; with epi_only only images generating S_n.
    """
    if n < 1 or n > max_n:
        raise ValueError(f"n must be in 1..{max_n}")
    if P.ngens > max_gens:
        raise ValueError(f"generator count exceeds cap {max_gens}")
    perms = sorted(itertools.permutations(range(1, n + 1)))
    by_last_gen: dict[int, list[FreeWord]] = {}
    for r in P.relators:
        by_last_gen.setdefault(r.max_index(), []).append(r)
    if 0 in by_last_gen:
        # relators with no letters are trivially satisfied
        del by_last_gen[0]

    found: list[tuple[tuple[int, ...], ...]] = []
    images: list[tuple[int, ...]] = []

    def assign(g: int) -> None:
        if g > P.ngens:
            found.append(tuple(images))
            return
        for p in perms:
            images.append(p)
            if all(
                _evaluate(r, images, n) == perms[0]
                for r in by_last_gen.get(g, ())
            ):
                assign(g + 1)
            images.pop()

    assign(1)

    out = []
    for tup in found:
        if epi_only and not _generates_full(list(tup), n):
            continue
        if up_to_conjugacy:
            best = tup
            for c in perms:
                inv = [0] * n
                for x, y in enumerate(c, start=1):
                    inv[y - 1] = x
                conj = tuple(
                    tuple(c[p[inv[x - 1] - 1] - 1] for x in range(1, n + 1))
                    for p in tup
                )
                if conj < best:
                    best = conj
            if best != tup:
                continue
        out.append(
            SymmetricImage(
                n,
                tuple(Permutation(p) for p in tup),
                _generates_full(list(tup), n),
            )
        )
    return out


# ---------------------------------------------------------------------------
# coset enumeration (HLT with a row budget and one lookahead sweep)


def group_order(P: FinitePresentation, budget: int = 10000) -> int | None:
    """Exact group order by coset enumeration, or None within the budget.

    Enumerates cosets of the trivial subgroup HLT-style: relators are
    scanned at every live coset and gaps are filled by defining new cosets,
    up to `budget` rows ever defined.  On budget exhaustion one lookahead
    sweep makes deductions without definitions.  A returned integer is
    exact: the final table is complete and verified against every relator.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    if P.ngens == 0:
        return 1
    ncols = 2 * P.ngens
    relators = [r.letters for r in P.relators if r.letters]

    def col(l: int) -> int:
        return 2 * (abs(l) - 1) + (0 if l > 0 else 1)

    def inv_col(c: int) -> int:
        return c ^ 1

    table: list[list[int | None]] = [[None] * ncols]
    rep = [0]

    def find(x: int) -> int:
        while rep[x] != x:
            rep[x] = rep[rep[x]]
            x = rep[x]
        return x

    def get(a: int, c: int) -> int | None:
        e = table[a][c]
        if e is None:
            return None
        e = find(e)
        table[a][c] = e
        return e

    pending: deque[tuple[int, int]] = deque()

    def set_entry(a: int, c: int, b: int) -> None:
        ea = get(a, c)
        if ea is not None:
            if ea != b:
                pending.append((ea, b))
            return
        table[a][c] = b
        eb = get(b, inv_col(c))
        if eb is None:
            table[b][inv_col(c)] = a
        elif eb != a:
            pending.append((eb, a))

    def process_coincidences() -> None:
        while pending:
            x, y = pending.popleft()
            x, y = find(x), find(y)
            if x == y:
                continue
            if y < x:
                x, y = y, x
            rep[y] = x
            for c in range(ncols):
                e = table[y][c]
                if e is None:
                    continue
                table[y][c] = None
                set_entry(x, c, find(e))

    defined = 1

    def define(a: int, c: int) -> int | None:
        nonlocal defined
        if defined >= budget:
            return None
        table.append([None] * ncols)
        rep.append(len(table) - 1)
        b = len(table) - 1
        defined += 1
        set_entry(a, c, b)
        return b

    def scan(alpha: int, word: tuple[int, ...], fill: bool) -> None:
        f = find(alpha)
        i = 0
        m = len(word)
        while True:
            while i < m:
                nxt = get(f, col(word[i]))
                if nxt is None:
                    break
                f = nxt
                i += 1
            if i == m:
                if f != find(alpha):
                    pending.append((f, find(alpha)))
                return
            b = find(alpha)
            j = m - 1
            while j >= i:
                nxt = get(b, inv_col(col(word[j])))
                if nxt is None:
                    break
                b = nxt
                j -= 1
            if j < i:
                # both directions reached position i: cosets coincide
                if f != b:
                    pending.append((f, b))
                return
            if j == i:
                set_entry(f, col(word[i]), b)
                return
            if not fill:
                return
            g = define(f, col(word[i]))
            if g is None:
                return
            f = g
            i += 1

    exhausted = False
    alpha = 0
    while alpha < len(table):
        if find(alpha) != alpha:
            alpha += 1
            continue
        for word in relators:
            scan(alpha, word, fill=True)
            process_coincidences()
            if find(alpha) != alpha:
                break
            if defined >= budget:
                exhausted = True
                break
        if find(alpha) == alpha and not exhausted:
            # fill the rest of the row so the table provably completes
            for c in range(ncols):
                if get(alpha, c) is not None:
                    continue
                if define(alpha, c) is None:
                    exhausted = True
                    break
                process_coincidences()
                if find(alpha) != alpha:
                    break
        if exhausted:
            break
        alpha += 1

    if exhausted:
        # lookahead: deductions and coincidences only, no definitions
        for alpha in range(len(table)):
            if find(alpha) != alpha:
                continue
            for word in relators:
                scan(alpha, word, fill=False)
                process_coincidences()
                if find(alpha) != alpha:
                    break

    live = [a for a in range(len(table)) if find(a) == a]
    for a in live:
        if any(get(a, c) is None for c in range(ncols)):
            return None
    # verification pass: every relator closes at every live coset
    for a in live:
        for word in relators:
            f = a
            for l in word:
                f = get(f, col(l))
            if f != a:
                return None
    return len(live)


# ---------------------------------------------------------------------------
# presentation text format: generator count, then one relator per line


def format_presentation(P: FinitePresentation) -> str:
    lines = [str(P.ngens)]
    for r in P.relators:
        if r.letters:
            lines.append(" ".join(str(k) for k in r.letters))
    return "\n".join(lines) + "\n"


def parse_presentation(text: str) -> FinitePresentation:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty presentation")
    try:
        ngens = int(lines[0])
    except ValueError:
        raise FormatError("first line must be the generator count") from None
    relators = []
    for ln in lines[1:]:
        try:
            letters = tuple(int(tok) for tok in ln.split())
            relators.append(FreeWord(letters))
        except ValueError:
            raise FormatError(f"bad relator line {ln!r}") from None
    try:
        return FinitePresentation(ngens, tuple(relators))
    except ValueError as e:
        raise FormatError(str(e)) from None


def format_homs(homs: list[SymmetricImage]) -> str:
    lines = []
    for h in homs:
        lines.append(" ".join(p.cycle_notation() for p in h.images) or "()")
    return "\n".join(lines) + ("\n" if lines else "")

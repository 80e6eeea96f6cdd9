"""Words, normal forms, and conjugacy in the braid group B_d.

Conventions used throughout the package:

* Generators are numbered 1..d-1; a signed letter k denotes X_|k|^sign(k).
* Permutations map {1..d} to itself and compose left to right:
  (p * q)(x) = q(p(x)).  The permutation of a word applies its first letter
  first, so permutation_of(compose(u, v)) equals
  permutation_of(u) * permutation_of(v).
* Normal forms are left greedy: w = D^inf . A_1 ... A_k where D is the half
  twist, each A_i is a permutation braid distinct from the identity and D,
  and every adjacent pair is left weighted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from ._kernel import normal_form as _kernel_normal_form
from .errors import FormatError


@dataclass(frozen=True)
class Permutation:
    """Bijection of {1..d}, stored as the tuple of images of 1, 2, ..., d."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        d = len(self.images)
        if sorted(self.images) != list(range(1, d + 1)):
            raise ValueError(f"not a permutation of 1..{d}: {self.images!r}")

    @staticmethod
    def identity(d: int) -> Permutation:
        return Permutation(tuple(range(1, d + 1)))

    @staticmethod
    def transposition(d: int, i: int, j: int) -> Permutation:
        if not (1 <= i <= d and 1 <= j <= d) or i == j:
            raise ValueError(f"bad transposition ({i} {j}) for size {d}")
        images = list(range(1, d + 1))
        images[i - 1], images[j - 1] = j, i
        return Permutation(tuple(images))

    @property
    def size(self) -> int:
        return len(self.images)

    def apply(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        # left to right: apply self first, then other
        if self.size != other.size:
            raise ValueError("size mismatch in permutation product")
        return Permutation(tuple(other.images[i - 1] for i in self.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for x, y in enumerate(self.images, start=1):
            inv[y - 1] = x
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(y == x for x, y in enumerate(self.images, start=1))

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Nontrivial cycles, each starting at its least element, sorted."""
        seen = [False] * self.size
        out = []
        for start in range(1, self.size + 1):
            if seen[start - 1]:
                continue
            cyc = [start]
            seen[start - 1] = True
            x = self.apply(start)
            while x != start:
                cyc.append(x)
                seen[x - 1] = True
                x = self.apply(x)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return tuple(out)

    def cycle_type(self) -> tuple[int, ...]:
        """Partition of d by cycle lengths, fixed points included, descending."""
        lengths = [len(c) for c in self.cycles()]
        lengths += [1] * (self.size - sum(lengths))
        return tuple(sorted(lengths, reverse=True))

    def cycle_notation(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cycs)


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators of B_d; not stored freely reduced."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise ValueError("strand count must be >= 1")
        object.__setattr__(self, "letters", tuple(self.letters))
        for k in self.letters:
            if k == 0 or abs(k) > self.strands - 1:
                raise ValueError(
                    f"letter {k} out of range for {self.strands} strands"
                )

    def __len__(self) -> int:
        return len(self.letters)


@dataclass(frozen=True)
class CanonicalForm:
    """Left-greedy normal form: half-twist power plus permutation braids."""

    strands: int
    inf: int
    factors: tuple[Permutation, ...]

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)

    def to_word(self) -> BraidWord:
        """A word equal to this form: the half twist inf times, then factors."""
        half = half_twist(self.strands).letters
        if self.inf >= 0:
            letters = list(half) * self.inf
        else:
            letters = [-k for k in reversed(half)] * (-self.inf)
        for p in self.factors:
            letters.extend(permutation_braid_letters(p))
        return BraidWord(self.strands, tuple(letters))


def permutation_braid_letters(p: Permutation) -> tuple[int, ...]:
    """Positive word for the permutation braid of p (one letter per inversion).

    Bubble sort by adjacent position swaps; recording swap indices in the
    order performed yields a reduced word composing left to right to p.
    """
    v = list(p.images)
    out = []
    moved = True
    while moved:
        moved = False
        for i in range(len(v) - 1):
            if v[i] > v[i + 1]:
                v[i], v[i + 1] = v[i + 1], v[i]
                out.append(i + 1)
                moved = True
    return tuple(out)


# ---------------------------------------------------------------------------
# word operations


def compose(u: BraidWord, v: BraidWord) -> BraidWord:
    if u.strands != v.strands:
        raise ValueError(f"strand mismatch: {u.strands} vs {v.strands}")
    return BraidWord(u.strands, u.letters + v.letters)


def invert(u: BraidWord) -> BraidWord:
    return BraidWord(u.strands, tuple(-k for k in reversed(u.letters)))


def conjugate(u: BraidWord, z: BraidWord) -> BraidWord:
    """z^-1 u z."""
    return compose(invert(z), compose(u, z))


def identity_word(d: int) -> BraidWord:
    return BraidWord(d, ())


def full_twist(d: int) -> BraidWord:
    """The central element (X_1 ... X_{d-1})^d, a word of length d(d-1)."""
    if d < 1:
        raise ValueError("strand count must be >= 1")
    return BraidWord(d, tuple(range(1, d)) * d)


def half_twist(d: int) -> BraidWord:
    """The half twist D = (X_1)(X_2 X_1) ... (X_{d-1} ... X_1)."""
    if d < 1:
        raise ValueError("strand count must be >= 1")
    letters = []
    for i in range(1, d):
        letters.extend(range(i, 0, -1))
    return BraidWord(d, tuple(letters))


@lru_cache(maxsize=1 << 17)
def _cached_nf(d: int, letters: tuple[int, ...]) -> tuple[int, tuple[tuple[int, ...], ...]]:
    return _kernel_normal_form(d, letters)


def canonical_form(w: BraidWord) -> CanonicalForm:
    inf, factors = _cached_nf(w.strands, w.letters)
    return CanonicalForm(
        w.strands,
        inf,
        tuple(Permutation(tuple(x + 1 for x in f)) for f in factors),
    )


def normalized(w: BraidWord) -> BraidWord:
    """The word of the canonical form; equal to w, length-stable under reuse."""
    return canonical_form(w).to_word()


def equals(u: BraidWord, v: BraidWord) -> bool:
    if u.strands != v.strands:
        raise ValueError(f"strand mismatch: {u.strands} vs {v.strands}")
    return _cached_nf(u.strands, u.letters) == _cached_nf(v.strands, v.letters)


def exponent_sum(w: BraidWord) -> int:
    return sum(1 if k > 0 else -1 for k in w.letters)


def permutation_of(w: BraidWord) -> Permutation:
    """Image under B_d -> S_d, X_i -> (i, i+1), first letter applied first."""
    images = list(range(1, w.strands + 1))
    for k in w.letters:
        i = abs(k) - 1
        images[i], images[i + 1] = images[i + 1], images[i]
    return Permutation(tuple(images))


def is_positive(w: BraidWord) -> bool:
    """Membership in the positive monoid, decided by canonical inf >= 0."""
    return canonical_form(w).inf >= 0


# ---------------------------------------------------------------------------
# word text format: whitespace-separated signed integers


def parse_word(text: str, strands: int) -> BraidWord:
    letters = []
    for tok in text.split():
        try:
            k = int(tok)
        except ValueError:
            raise FormatError(f"bad word token {tok!r}") from None
        letters.append(k)
    try:
        return BraidWord(strands, tuple(letters))
    except ValueError as e:
        raise FormatError(str(e)) from None


def format_word(w: BraidWord) -> str:
    return " ".join(str(k) for k in w.letters)


# ---------------------------------------------------------------------------
# conjugacy: cycling/decycling to a summit representative, then closure of
# the super summit set under conjugation by permutation braids


@dataclass(frozen=True)
class ConjugacyResult:
    outcome: str  # "conjugate" | "not_conjugate" | "unknown"
    witness: BraidWord | None = None
    reason: str | None = None
    work: int = 0


class _WorkBudget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def tick(self, cost: int = 1) -> None:
        self.used += cost
        if self.used > self.limit:
            raise _BudgetHit()


class _BudgetHit(Exception):
    pass


@lru_cache(maxsize=32)
def enumerate_braids(d: int, max_len: int) -> tuple[BraidWord, ...]:
    """All distinct braids with a word of length <= max_len, one word each.

    Words are enumerated by length, then lexicographically by letter tuple
    (letters ordered as integers); each braid is represented by the first
    word that reaches it, so the result is sorted by that order and starts
    with the empty word.
    """
    alphabet = tuple(sorted(k for k in range(-(d - 1), d) if k != 0))
    seen = set()
    out = []
    for n in range(max_len + 1):
        for letters in itertools.product(alphabet, repeat=n):
            w = BraidWord(d, letters)
            cf = canonical_form(w)
            key = (cf.inf, tuple(p.images for p in cf.factors))
            if key not in seen:
                seen.add(key)
                out.append(w)
    return tuple(out)


@lru_cache(maxsize=64)
def _simple_words(d: int) -> tuple[BraidWord, ...]:
    """Words of all non-identity permutation braids, in a fixed order."""
    out = []
    for images in itertools.permutations(range(1, d + 1)):
        p = Permutation(images)
        if not p.is_identity():
            out.append(BraidWord(d, permutation_braid_letters(p)))
    return tuple(out)


def _tau(p: Permutation) -> Permutation:
    """Conjugation of a permutation braid by the half twist."""
    d = p.size
    return Permutation(tuple(d + 1 - p.apply(d + 1 - x) for x in range(1, d + 1)))


def _nf_key(cf: CanonicalForm) -> tuple:
    return (cf.inf, tuple(p.images for p in cf.factors))


def _summit(u: BraidWord, w: BraidWord, z: BraidWord, budget: _WorkBudget):
    """Cycle to maximal inf and decycle to minimal sup, from w = z^-1 u z.

    Returns (w', z', cf') with w' a summit element and conjugate(u, z') = w'.
    Trajectories are followed until a repeated normal form; the best element
    seen is kept.  Iterated cycling cannot increase sup and iterated
    decycling cannot decrease inf, so each phase ranges over a finite set.
    """
    budget.tick()
    cf = canonical_form(w)
    improved = True
    while improved:
        improved = False
        # cycling phase: push inf up
        best = (w, z, cf)
        seen = {_nf_key(cf)}
        cur, zcur, cfc = w, z, cf
        while cfc.factors:
            head = cfc.factors[0]
            if cfc.inf % 2:
                head = _tau(head)
            step = BraidWord(u.strands, permutation_braid_letters(head))
            budget.tick()
            cur = normalized(conjugate(cur, step))
            zcur = normalized(compose(zcur, step))
            cfc = canonical_form(cur)
            if cfc.inf > best[2].inf:
                best = (cur, zcur, cfc)
                improved = True
            k = _nf_key(cfc)
            if k in seen:
                break
            seen.add(k)
        w, z, cf = best
        # decycling phase: push sup down
        best = (w, z, cf)
        seen = {_nf_key(cf)}
        cur, zcur, cfc = w, z, cf
        while cfc.factors:
            tail = cfc.factors[-1]
            step = invert(BraidWord(u.strands, permutation_braid_letters(tail)))
            budget.tick()
            cur = normalized(conjugate(cur, step))
            zcur = normalized(compose(zcur, step))
            cfc = canonical_form(cur)
            if cfc.sup < best[2].sup:
                best = (cur, zcur, cfc)
                improved = True
            k = _nf_key(cfc)
            if k in seen:
                break
            seen.add(k)
        w, z, cf = best
    return w, z, cf


def _better(a: tuple[int, int], b: tuple[int, int]) -> bool:
    """Summit preference: higher inf, then shorter canonical length."""
    return a[0] > b[0] or (a[0] == b[0] and a[1] < b[1])


def _super_summit_set(u: BraidWord, budget: _WorkBudget):
    """Close the super summit set of u under permutation-braid conjugation.

    Returns (states, best) where states maps normal-form keys to conjugator
    words z with conjugate(u, z) in that class member, and best = (inf, len).
    If any conjugation improves on the current summit values the search
    restarts from the improved element, so the returned set sits at the true
    summit values and is closed under all simple conjugations.
    """
    d = u.strands
    simples = _simple_words(d)
    w, z, cf = _summit(u, u, identity_word(d), budget)
    while True:
        best = (cf.inf, cf.canonical_length)
        states = {_nf_key(cf): (z, w)}
        queue = [_nf_key(cf)]
        restart = None
        while queue and restart is None:
            key = queue.pop(0)
            zcur, wcur = states[key]
            for step in simples:
                budget.tick()
                cand = normalized(conjugate(wcur, step))
                cfc = canonical_form(cand)
                q = (cfc.inf, cfc.canonical_length)
                if _better(q, best):
                    zc = normalized(compose(zcur, step))
                    restart = _summit(u, cand, zc, budget)
                    break
                if q == best:
                    k = _nf_key(cfc)
                    if k not in states:
                        states[k] = (normalized(compose(zcur, step)), cand)
                        queue.append(k)
        if restart is None:
            return states, best
        w, z, cf = restart


def conjugacy_test(u: BraidWord, v: BraidWord, budget: int) -> ConjugacyResult:
    """Decide conjugacy in B_d within a work budget.

    "conjugate" always carries a witness z verified to satisfy
    equals(conjugate(u, z), v); "not_conjugate" names a separating invariant
    or reports completed disjoint super summit sets; "unknown" means the
    budget ran out first.
    """
    if u.strands != v.strands:
        raise ValueError(f"strand mismatch: {u.strands} vs {v.strands}")
    if budget <= 0:
        raise ValueError("budget must be positive")
    if exponent_sum(u) != exponent_sum(v):
        return ConjugacyResult("not_conjugate", reason="exponent_sum")
    if permutation_of(u).cycle_type() != permutation_of(v).cycle_type():
        return ConjugacyResult("not_conjugate", reason="permutation_cycle_type")
    if equals(u, v):
        return ConjugacyResult("conjugate", witness=identity_word(u.strands))
    wb = _WorkBudget(budget)
    try:
        states_u, best_u = _super_summit_set(u, wb)
        states_v, best_v = _super_summit_set(v, wb)
    except _BudgetHit:
        return ConjugacyResult("unknown", reason="budget_exhausted", work=wb.used)
    if best_u != best_v:
        return ConjugacyResult(
            "not_conjugate", reason="summit_inf_and_length", work=wb.used
        )
    common = sorted(states_u.keys() & states_v.keys())
    if not common:
        return ConjugacyResult(
            "not_conjugate", reason="disjoint_super_summit_sets", work=wb.used
        )
    key = common[0]
    zu, _ = states_u[key]
    zv, _ = states_v[key]
    witness = normalized(compose(zu, invert(zv)))
    if not equals(conjugate(u, witness), v):
        raise AssertionError("conjugacy witness failed verification")
    return ConjugacyResult("conjugate", witness=witness, work=wb.used)


def summit_key(w: BraidWord, budget: int):
    """A conjugacy-invariant key: the least normal form in the super summit
    set, or None if the budget is exhausted before the set is closed."""
    if budget <= 0:
        raise ValueError("budget must be positive")
    wb = _WorkBudget(budget)
    try:
        states, _ = _super_summit_set(w, wb)
    except _BudgetHit:
        return None
    return min(states.keys())

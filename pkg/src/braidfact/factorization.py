"""Factorizations of the full twist into conjugates of generator powers.

A cuspidal factor (rho, s) stands for the word rho^-1 X_1^s rho with
s in {1, 2, 3} (branch point, node, cusp).  A factorization is an ordered
tuple of such factors, or of plain braid words in the generic variant,
together with a target braid that the factor product must equal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .braid import (
    BraidWord,
    canonical_form,
    compose,
    conjugate,
    enumerate_braids,
    equals,
    exponent_sum,
    format_word,
    full_twist,
    identity_word,
    invert,
    normalized,
    parse_word,
    permutation_of,
)
from .errors import FormatError, SearchBudgetExceeded

VALID_S = (1, 2, 3)


@dataclass(frozen=True)
class CuspidalFactor:
    rho: BraidWord
    s: int

    def __post_init__(self) -> None:
        if self.s not in VALID_S:
            raise ValueError(f"s must be one of {VALID_S}, got {self.s}")


@dataclass(frozen=True)
class Factorization:
    strands: int
    factors: tuple
    target: BraidWord | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(self.factors))
        if self.target is None:
            object.__setattr__(self, "target", full_twist(self.strands))
        if self.target.strands != self.strands:
            raise ValueError("target strand count mismatch")
        kinds = {type(f) for f in self.factors}
        if not kinds <= {CuspidalFactor, BraidWord}:
            raise ValueError("factors must be CuspidalFactor or BraidWord")
        if len(kinds) > 1:
            raise ValueError("cannot mix cuspidal and generic factors")
        for f in self.factors:
            w = f.rho if isinstance(f, CuspidalFactor) else f
            if w.strands != self.strands:
                raise ValueError("factor strand count mismatch")

    @property
    def is_cuspidal(self) -> bool:
        return all(isinstance(f, CuspidalFactor) for f in self.factors)

    @property
    def r(self) -> int:
        return len(self.factors)


@dataclass(frozen=True)
class SingularityCounts:
    n1: int
    n2: int
    n3: int


@dataclass(frozen=True)
class ValidationReport:
    product_ok: bool
    counts: SingularityCounts | None
    exponent_ok: bool | None

    @property
    def ok(self) -> bool:
        return self.product_ok and self.exponent_ok is not False


def factor_word(f: CuspidalFactor) -> BraidWord:
    """The braid rho^-1 X_1^s rho."""
    d = f.rho.strands
    return compose(invert(f.rho), compose(BraidWord(d, (1,) * f.s), f.rho))


def factor_words(F: Factorization) -> tuple[BraidWord, ...]:
    return tuple(
        factor_word(f) if isinstance(f, CuspidalFactor) else f for f in F.factors
    )


def product_word(F: Factorization) -> BraidWord:
    out = identity_word(F.strands)
    for w in factor_words(F):
        out = compose(out, w)
    return out


def singularity_counts(F: Factorization) -> SingularityCounts | None:
    if not F.is_cuspidal:
        return None
    svals = [f.s for f in F.factors]
    return SingularityCounts(svals.count(1), svals.count(2), svals.count(3))


def validate(F: Factorization) -> ValidationReport:
    """Check the factor product against the target; never raises on failure."""
    product_ok = equals(product_word(F), F.target)
    counts = singularity_counts(F)
    exponent_ok = None
    if F.is_cuspidal:
        d = F.strands
        exponent_ok = sum(f.s for f in F.factors) == d * (d - 1)
    return ValidationReport(product_ok, counts, exponent_ok)


def _freely_reduced(w: BraidWord) -> BraidWord:
    """Cancel adjacent inverse letters; the braid is unchanged."""
    out: list[int] = []
    for l in w.letters:
        if out and out[-1] == -l:
            out.pop()
        else:
            out.append(l)
    return BraidWord(w.strands, tuple(out))


def hurwitz_move(F: Factorization, i: int, direction: str) -> Factorization:
    """Hurwitz move at 1-based position i (acting on factors i and i+1).

    right: (g_i, g_{i+1}) -> (g_i g_{i+1} g_i^-1, g_i)
    left:  (g_i, g_{i+1}) -> (g_{i+1}, g_{i+1}^-1 g_i g_{i+1})

    Cuspidal factors keep their s value; the transported conjugator becomes
    rho g^-1 (right move) or rho g (left move) for the adjacent factor word g.
    """
    if direction not in ("left", "right"):
        raise ValueError(f"direction must be left or right, got {direction!r}")
    if not 1 <= i < F.r:
        raise IndexError(f"move index {i} out of range 1..{F.r - 1}")
    a = F.factors[i - 1]
    b = F.factors[i]
    wa = factor_word(a) if isinstance(a, CuspidalFactor) else a
    wb = factor_word(b) if isinstance(b, CuspidalFactor) else b
    if direction == "right":
        if isinstance(b, CuspidalFactor):
            moved = CuspidalFactor(_freely_reduced(compose(b.rho, invert(wa))), b.s)
        else:
            moved = _freely_reduced(conjugate(b, invert(wa)))
        pair = (moved, a)
    else:
        if isinstance(a, CuspidalFactor):
            moved = CuspidalFactor(_freely_reduced(compose(a.rho, wb)), a.s)
        else:
            moved = _freely_reduced(conjugate(a, wb))
        pair = (b, moved)
    factors = F.factors[: i - 1] + pair + F.factors[i + 1 :]
    return Factorization(F.strands, factors, F.target)


def conjugate_all(F: Factorization, z: BraidWord) -> Factorization:
    """Simultaneous conjugation: every factor becomes z^-1 (factor) z."""
    if z.strands != F.strands:
        raise ValueError("conjugator strand count mismatch")
    if F.is_cuspidal:
        factors = tuple(CuspidalFactor(compose(f.rho, z), f.s) for f in F.factors)
    else:
        factors = tuple(conjugate(f, z) for f in F.factors)
    return Factorization(F.strands, factors, F.target)


# ---------------------------------------------------------------------------
# exhaustive search for cuspidal factorizations of the full twist


def profile_exponent_ok(d: int, profile) -> bool:
    """The exponent obstruction: the s-values must sum to d(d-1)."""
    return sum(profile) == d * (d - 1)


class _NodeBudget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def tick(self) -> None:
        self.used += 1
        if self.used > self.limit:
            raise SearchBudgetExceeded(self.used)


def _nf_key(w: BraidWord):
    cf = canonical_form(w)
    return (cf.inf, tuple(p.images for p in cf.factors))


def search_factorization(
    d: int,
    profile,
    max_conjugator_length: int,
    *,
    max_nodes: int = 2_000_000,
) -> Factorization | None:
    """Find a validated cuspidal factorization of the full twist, or None.

    The search is exhaustive over conjugators of word length up to
    max_conjugator_length, one canonical representative per distinct braid
    (shortest word, then smallest letter sequence).  The witness returned
    is the least one under the documented order: s-sequences ascending
    lexicographically, then conjugator candidate indices slot by slot.
    Raises SearchBudgetExceeded when max_nodes runs out, which is distinct
    from returning None (nothing within bounds).
    """
    if d < 1:
        raise ValueError("strand count must be >= 1")
    if max_conjugator_length < 0 or max_nodes <= 0:
        raise ValueError("bounds must be nonnegative/positive")
    profile = tuple(sorted(profile))
    for s in profile:
        if s not in VALID_S:
            raise ValueError(f"profile values must be in {VALID_S}")
    target = full_twist(d)
    if not profile_exponent_ok(d, profile):
        return None
    if not profile:
        return Factorization(d, (), target)

    budget = _NodeBudget(max_nodes)
    cands = enumerate_braids(d, max_conjugator_length)
    assert cands[0].letters == ()
    target_exp = d * (d - 1)

    # factor words and normal-form data per s value, computed on demand
    words_by_s: dict[int, list[BraidWord]] = {}
    stats_by_s: dict[int, tuple[int, int]] = {}  # s -> (min inf, max sup)
    table_by_s: dict[int, dict] = {}  # s -> nf key -> least candidate index

    def prepare(s: int) -> None:
        if s in words_by_s:
            return
        words = []
        table = {}
        min_inf, max_sup = None, None
        for idx, rho in enumerate(cands):
            budget.tick()
            w = normalized(factor_word(CuspidalFactor(rho, s)))
            words.append(w)
            cf = canonical_form(w)
            key = (cf.inf, tuple(p.images for p in cf.factors))
            table.setdefault(key, idx)
            min_inf = cf.inf if min_inf is None else min(min_inf, cf.inf)
            max_sup = cf.sup if max_sup is None else max(max_sup, cf.sup)
        words_by_s[s] = words
        stats_by_s[s] = (min_inf, max_sup)
        table_by_s[s] = table

    def feasible(rest_word: BraidWord, remaining: tuple[int, ...]) -> bool:
        if exponent_sum(rest_word) != sum(remaining):
            return False
        perm = permutation_of(rest_word)
        n_cycles = len(perm.cycles()) + sum(
            1 for x in range(1, d + 1) if perm.apply(x) == x
        )
        t_needed = d - n_cycles
        odd = sum(1 for s in remaining if s % 2)
        if odd < t_needed or (odd - t_needed) % 2:
            return False
        cf = canonical_form(rest_word)
        lo = sum(stats_by_s[s][0] for s in remaining)
        hi = sum(stats_by_s[s][1] for s in remaining)
        return lo <= cf.inf and cf.sup <= hi

    for seq in sorted(set(itertools.permutations(profile))):
        for s in set(seq):
            prepare(s)
        r = len(seq)
        dead: set = set()
        choice: list[int] = []

        def rec(j: int, prefix: BraidWord) -> bool:
            budget.tick()
            rest = normalized(compose(invert(prefix), target))
            key = (j, _nf_key(rest))
            if key in dead:
                return False
            if not feasible(rest, seq[j:]):
                dead.add(key)
                return False
            if j == r - 1:
                idx = table_by_s[seq[j]].get(key[1])
                if idx is None:
                    dead.add(key)
                    return False
                choice.append(idx)
                return True
            for idx in range(len(cands)):
                w = words_by_s[seq[j]][idx]
                if rec(j + 1, normalized(compose(prefix, w))):
                    choice.append(idx)
                    return True
            dead.add(key)
            return False

        if rec(0, identity_word(d)):
            choice.reverse()
            factors = tuple(
                CuspidalFactor(cands[idx], s) for idx, s in zip(choice, seq)
            )
            F = Factorization(d, factors, target)
            report = validate(F)
            if not report.product_ok:
                raise AssertionError("search produced an invalid factorization")
            return F
    return None


# ---------------------------------------------------------------------------
# file format
#
#   strands 3
#   target full_twist          (or: target word=1 2 1 2 1 2)
#   factor s=1 rho=            (cuspidal: rho letters after "rho=")
#   factor s=3 rho=1 -2
#
# Generic factor lines use "factor word=<letters>".  Blank lines and lines
# starting with "#" are ignored.


def format_factorization(F: Factorization) -> str:
    lines = [f"strands {F.strands}"]
    if F.target.letters == full_twist(F.strands).letters:
        lines.append("target full_twist")
    else:
        lines.append(f"target word={format_word(F.target)}")
    for f in F.factors:
        if isinstance(f, CuspidalFactor):
            lines.append(f"factor s={f.s} rho={format_word(f.rho)}")
        else:
            lines.append(f"factor word={format_word(f)}")
    return "\n".join(lines) + "\n"


def parse_factorization(text: str) -> Factorization:
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not lines or not lines[0].startswith("strands "):
        raise FormatError("first line must be 'strands <d>'")
    try:
        d = int(lines[0].split(maxsplit=1)[1])
    except (IndexError, ValueError):
        raise FormatError("bad strand count") from None
    if d < 1:
        raise FormatError("strand count must be >= 1")
    if len(lines) < 2 or not lines[1].startswith("target "):
        raise FormatError("second line must be 'target ...'")
    tgt = lines[1][len("target ") :].strip()
    try:
        if tgt == "full_twist":
            target = full_twist(d)
        elif tgt.startswith("word="):
            target = parse_word(tgt[len("word=") :], d)
        else:
            raise FormatError(f"bad target {tgt!r}")
        factors: list = []
        for ln in lines[2:]:
            if not ln.startswith("factor "):
                raise FormatError(f"unexpected line {ln!r}")
            body = ln[len("factor ") :].strip()
            if body.startswith("word="):
                factors.append(parse_word(body[len("word=") :], d))
            elif body.startswith("s="):
                head, _, rho_part = body.partition(" rho=")
                if not _:
                    raise FormatError(f"factor line missing rho=: {ln!r}")
                try:
                    s = int(head[len("s=") :])
                except ValueError:
                    raise FormatError(f"bad s value in {ln!r}") from None
                if s not in VALID_S:
                    raise FormatError(f"s={s} out of range {VALID_S}")
                factors.append(CuspidalFactor(parse_word(rho_part, d), s))
            else:
                raise FormatError(f"bad factor line {ln!r}")
        return Factorization(d, tuple(factors), target)
    except FormatError:
        raise
    except ValueError as e:
        raise FormatError(str(e)) from None

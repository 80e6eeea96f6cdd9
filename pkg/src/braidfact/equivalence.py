"""Semi-deciding whether two factorizations have the same type.

Two factorizations are of the same type when one can be carried to the
other by a finite sequence of Hurwitz moves followed by one simultaneous
conjugation.  Negative certificates come from cheap move-and-conjugation
invariants (fingerprints); positive certificates come from a bounded
breadth-first orbit search and always replay exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import (
    BraidWord,
    canonical_form,
    conjugate,
    enumerate_braids,
    equals,
    exponent_sum,
    format_word,
    identity_word,
    invert,
    normalized,
    parse_word,
    permutation_of,
    summit_key,
)
from .errors import FormatError
from .factorization import (
    CuspidalFactor,
    Factorization,
    conjugate_all,
    factor_words,
    hurwitz_move,
    product_word,
    validate,
)


@dataclass(frozen=True)
class Fingerprint:
    """Invariants of the move-and-conjugation equivalence.

    Every field is unchanged by Hurwitz moves and by simultaneous
    conjugation.  conjugacy_keys entries may be ("unknown",) when the
    per-factor conjugacy search ran out of budget.
    """

    strands: int
    factor_count: int
    exponent_sum: int
    s_multiset: tuple[int, ...] | None
    cycle_types: tuple[tuple[int, ...], ...]
    conjugacy_keys: tuple | None = None


def fingerprint(F: Factorization, *, conjugacy_budget: int = 0) -> Fingerprint:
    """Compute the invariant fingerprint of a validated factorization."""
    report = validate(F)
    if not report.product_ok:
        raise ValueError("fingerprint requires a validated factorization")
    words = factor_words(F)
    s_multiset = (
        tuple(sorted(f.s for f in F.factors)) if F.is_cuspidal else None
    )
    cycle_types = tuple(sorted(permutation_of(w).cycle_type() for w in words))
    keys = None
    if conjugacy_budget > 0:
        entries = []
        for w in words:
            k = summit_key(w, conjugacy_budget)
            entries.append(("known", k) if k is not None else ("unknown",))
        keys = tuple(sorted(entries))
    return Fingerprint(
        F.strands,
        F.r,
        exponent_sum(product_word(F)),
        s_multiset,
        cycle_types,
        keys,
    )


def canonical_key(F: Factorization) -> tuple:
    """Hashable key equal exactly when factor tuples match word by word."""
    out = []
    for w in factor_words(F):
        cf = canonical_form(w)
        out.append((cf.inf, tuple(p.images for p in cf.factors)))
    return tuple(out)


@dataclass(frozen=True)
class SearchBudget:
    """Bounds for the orbit search; every bound must be positive.

    max_factor_nf_length bounds the canonical length (number of permutation
    braid factors in the normal form) of any single factor in an explored
    state; None derives 2 * (largest input factor canonical length, min 1).
    """

    max_states: int = 2000
    max_factor_nf_length: int | None = None
    conjugator_length_bound: int = 3


@dataclass(frozen=True)
class EquivalenceVerdict:
    outcome: str  # "equivalent" | "distinguished" | "inconclusive"
    path: tuple[tuple[int, str], ...] | None = None
    conjugator: BraidWord | None = None
    field: str | None = None
    values: tuple[str, str] | None = None
    states: int = 0
    orbit_complete: bool = False


def _normalize_state(F: Factorization) -> Factorization:
    """Replace factor words by their normal-form words (equal braids)."""
    if F.is_cuspidal:
        factors = tuple(
            CuspidalFactor(normalized(f.rho), f.s) for f in F.factors
        )
    else:
        factors = tuple(normalized(w) for w in F.factors)
    return Factorization(F.strands, factors, F.target)


def _max_canonical_length(F: Factorization) -> int:
    return max(
        (canonical_form(w).canonical_length for w in factor_words(F)),
        default=0,
    )


def replay(F: Factorization, path, conjugator: BraidWord | None) -> Factorization:
    """Apply a move path and a final simultaneous conjugation to F."""
    G = F
    for i, direction in path:
        G = hurwitz_move(G, i, direction)
    if conjugator is not None:
        G = conjugate_all(G, conjugator)
    return G


def _fingerprint_fields(a: Fingerprint, b: Fingerprint):
    yield "factor_count", a.factor_count, b.factor_count
    yield "exponent_sum", a.exponent_sum, b.exponent_sum
    if a.s_multiset is not None and b.s_multiset is not None:
        yield "s_multiset", a.s_multiset, b.s_multiset
    yield "cycle_type_multiset", a.cycle_types, b.cycle_types


def decide_equivalence(
    F1: Factorization, F2: Factorization, budget: SearchBudget = SearchBudget()
) -> EquivalenceVerdict:
    """Search for a move path plus conjugation carrying F1 to F2.

    Fingerprints are compared first; a differing field is a sound negative
    certificate.  Otherwise the move orbit of F1 is explored breadth first
    (moves in ascending index order, "left" before "right"), matching
    against F2 conjugated by every enumerated conjugator.  A returned
    "equivalent" verdict has been replayed and verified factor by factor.
    """
    if F1.strands != F2.strands:
        raise ValueError("strand counts differ")
    if not equals(F1.target, F2.target):
        raise ValueError("targets differ")
    if budget.max_states <= 0 or budget.conjugator_length_bound <= 0:
        raise ValueError("budgets must be positive")
    if budget.max_factor_nf_length is not None and budget.max_factor_nf_length <= 0:
        raise ValueError("budgets must be positive")
    if not validate(F1).product_ok or not validate(F2).product_ok:
        raise ValueError("both factorizations must validate")

    fp1 = fingerprint(F1)
    fp2 = fingerprint(F2)
    for field, v1, v2 in _fingerprint_fields(fp1, fp2):
        if v1 != v2:
            return EquivalenceVerdict(
                "distinguished", field=field, values=(str(v1), str(v2))
            )

    nf_bound = budget.max_factor_nf_length
    if nf_bound is None:
        nf_bound = 2 * max(_max_canonical_length(F1), _max_canonical_length(F2), 1)

    # match targets: state G hits when G equals conjugate_all(F2, z^-1)
    targets: dict[tuple, BraidWord] = {}
    for z in enumerate_braids(F1.strands, budget.conjugator_length_bound):
        key = canonical_key(_normalize_state(conjugate_all(F2, invert(z))))
        targets.setdefault(key, z)

    def hit(key) -> BraidWord | None:
        return targets.get(key)

    def verified(path, z) -> EquivalenceVerdict:
        G = replay(F1, path, z)
        got = factor_words(G)
        want = factor_words(F2)
        if len(got) != len(want) or not all(
            equals(a, b) for a, b in zip(got, want)
        ):
            raise AssertionError("equivalence path failed replay verification")
        return EquivalenceVerdict(
            "equivalent", path=tuple(path), conjugator=z, states=len(seen)
        )

    start = _normalize_state(F1)
    start_key = canonical_key(start)
    seen = {start_key}
    frontier = [(start, ())]
    z = hit(start_key)
    if z is not None:
        return verified((), z)

    truncated = len(seen) >= budget.max_states
    while frontier and not truncated:
        next_frontier = []
        for state, path in frontier:
            if truncated:
                break
            for i in range(1, state.r):
                if truncated:
                    break
                for direction in ("left", "right"):
                    child = _normalize_state(hurwitz_move(state, i, direction))
                    if any(
                        canonical_form(w).canonical_length > nf_bound
                        for w in factor_words(child)
                    ):
                        continue
                    key = canonical_key(child)
                    if key in seen:
                        continue
                    seen.add(key)
                    z = hit(key)
                    if z is not None:
                        return verified(path + ((i, direction),), z)
                    next_frontier.append((child, path + ((i, direction),)))
                    if len(seen) >= budget.max_states:
                        truncated = True
                        break
        frontier = next_frontier
    return EquivalenceVerdict(
        "inconclusive", states=len(seen), orbit_complete=not truncated
    )


def explore_orbit(
    F: Factorization, max_states: int, max_factor_nf_length: int | None = None
):
    """Keys of the bounded Hurwitz-move orbit of F; complete flag included."""
    if max_states <= 0:
        raise ValueError("max_states must be positive")
    nf_bound = max_factor_nf_length
    if nf_bound is None:
        nf_bound = 2 * max(_max_canonical_length(F), 1)
    start = _normalize_state(F)
    seen = {canonical_key(start)}
    frontier = [start]
    while frontier and len(seen) < max_states:
        next_frontier = []
        for state in frontier:
            for i in range(1, state.r):
                for direction in ("left", "right"):
                    child = _normalize_state(hurwitz_move(state, i, direction))
                    if any(
                        canonical_form(w).canonical_length > nf_bound
                        for w in factor_words(child)
                    ):
                        continue
                    key = canonical_key(child)
                    if key not in seen:
                        seen.add(key)
                        next_frontier.append(child)
        frontier = next_frontier
    return frozenset(seen), not frontier


# ---------------------------------------------------------------------------
# verdict serialization


def format_verdict(v: EquivalenceVerdict) -> str:
    lines = [f"outcome {v.outcome}"]
    if v.outcome == "equivalent":
        for i, direction in v.path:
            lines.append(f"move {i} {direction}")
        lines.append(f"conjugator {format_word(v.conjugator)}".rstrip())
    elif v.outcome == "distinguished":
        lines.append(f"field {v.field}")
        lines.append(f"value1 {v.values[0]}")
        lines.append(f"value2 {v.values[1]}")
    else:
        lines.append(f"states {v.states}")
    return "\n".join(lines) + "\n"


def parse_verdict(text: str, strands: int) -> EquivalenceVerdict:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("outcome "):
        raise FormatError("first line must be 'outcome ...'")
    outcome = lines[0].split(maxsplit=1)[1]
    if outcome == "equivalent":
        path = []
        conjugator = None
        for ln in lines[1:]:
            if ln.startswith("move "):
                parts = ln.split()
                if len(parts) != 3 or parts[2] not in ("left", "right"):
                    raise FormatError(f"bad move line {ln!r}")
                try:
                    path.append((int(parts[1]), parts[2]))
                except ValueError:
                    raise FormatError(f"bad move line {ln!r}") from None
            elif ln.startswith("conjugator"):
                conjugator = parse_word(ln[len("conjugator") :], strands)
            else:
                raise FormatError(f"unexpected line {ln!r}")
        if conjugator is None:
            raise FormatError("missing conjugator line")
        return EquivalenceVerdict("equivalent", path=tuple(path), conjugator=conjugator)
    if outcome == "distinguished":
        fields = dict(
            ln.split(maxsplit=1) if " " in ln else (ln, "") for ln in lines[1:]
        )
        if "field" not in fields:
            raise FormatError("missing field line")
        return EquivalenceVerdict(
            "distinguished",
            field=fields["field"],
            values=(fields.get("value1", ""), fields.get("value2", "")),
        )
    if outcome == "inconclusive":
        states = 0
        for ln in lines[1:]:
            if ln.startswith("states "):
                try:
                    states = int(ln.split()[1])
                except ValueError:
                    raise FormatError(f"bad states line {ln!r}") from None
        return EquivalenceVerdict("inconclusive", states=states)
    raise FormatError(f"unknown outcome {outcome!r}")

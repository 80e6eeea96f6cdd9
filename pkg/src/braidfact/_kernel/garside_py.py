"""Pure-Python kernel for left-greedy Garside normal forms in B_d.

A braid is stored as a pair (inf, factors): a power of the half twist
followed by a sequence of permutation braids, none of them trivial or
equal to the half twist, with every adjacent pair left-weighted.  Two
words represent the same braid iff this pair coincides, which is what
makes the kernel the single arbiter of equality for everything built
on top of it.

Permutation braids are permutations of range(d) in one-line notation.
Composition is read left to right: (p * q)(x) = q(p(x)), so the
permutation of a word is the product of the transpositions of its
letters in reading order.  Under this convention

  - the starting set of a factor b is the descent set {i : b[i] > b[i+1]},
  - the finishing set of a is the descent set of its inverse,
  - a pair (a, b) is left-weighted iff starting(b) is contained in
    finishing(a).

The normalisation loop slides one crossing at a time from the front of
a factor to the back of its left neighbour until every pair is
left-weighted; each slide strictly increases the left factor, so the
loop terminates, and the left-weighted pair for a fixed product is
unique.  New factors are appended on the right and combed backwards;
once a comb step leaves the left factor unchanged the prefix is still
left-weighted and the comb stops.

This module must stay behaviourally identical to the compiled twin in
_garside.pyx; tests/test_kernel.py holds both to a brute-force
fixpoint reference.
"""

IMPL_NAME = "pure"


def half_twist_perm(d):
    """One-line notation of the half twist's permutation (order reversal)."""
    return tuple(range(d - 1, -1, -1))


def _fix_pair(a, ai, b, bi, d):
    """Make the adjacent factor pair (a, b) left-weighted in place.

    a, ai, b, bi are one-line notations of the two factors and their
    inverses, as mutable lists.  Returns True if a changed.
    """
    changed = False
    moved = True
    while moved:
        moved = False
        for i in range(d - 1):
            if b[i] > b[i + 1] and ai[i] < ai[i + 1]:
                # slide crossing i: a <- a * s_i, b <- s_i * b
                x = ai[i]
                y = ai[i + 1]
                a[x] = i + 1
                a[y] = i
                ai[i] = y
                ai[i + 1] = x
                u = b[i]
                b[i] = b[i + 1]
                b[i + 1] = u
                bi[b[i]] = i
                bi[u] = i + 1
                moved = True
                changed = True
    return changed


def _invert(p, d):
    inv = [0] * d
    for i in range(d):
        inv[p[i]] = i
    return inv


def normal_form(d, letters):
    """Left normal form of the braid word given by signed generator letters.

    Letter k with 1 <= |k| <= d-1 is the |k|-th Artin generator, negative
    for its inverse.  Returns (inf, factors) where factors is a tuple of
    permutation tuples in one-line notation over range(d).
    """
    if d < 1:
        raise ValueError("strand count must be >= 1")
    if not letters:
        return 0, ()

    w0 = list(range(d - 1, -1, -1))

    # Each positive letter contributes the transposition s_i; each negative
    # letter sigma_i^-1 = Delta^-1 * (Delta sigma_i^-1) contributes the
    # permutation braid w0 * s_i together with one inverse half twist.
    raw = []
    dpows = []
    for k in letters:
        i = abs(k) - 1
        if i < 0 or i >= d - 1:
            raise ValueError("letter %d out of range for %d strands" % (k, d))
        if k > 0:
            p = list(range(d))
            p[i], p[i + 1] = p[i + 1], p[i]
            raw.append(p)
            dpows.append(0)
        else:
            p = list(w0)
            p[d - 1 - i], p[d - 2 - i] = i + 1, i
            raw.append(p)
            dpows.append(-1)

    # Shift all half-twist powers to the front: a factor passing one power
    # of Delta is conjugated by the involution tau(p) = w0 . p . w0.
    dp = 0
    for j in range(len(raw) - 1, -1, -1):
        if dp & 1:
            p = raw[j]
            raw[j] = [d - 1 - p[d - 1 - x] for x in range(d)]
        dp += dpows[j]

    # Append factors one at a time, combing backwards after each append.
    identity = list(range(d))
    factors = []
    inverses = []
    for p in raw:
        if p == identity:
            continue
        factors.append(p)
        inverses.append(_invert(p, d))
        j = len(factors) - 2
        while j >= 0:
            if not _fix_pair(factors[j], inverses[j], factors[j + 1], inverses[j + 1], d):
                break
            if factors[j + 1] == identity:
                # fully absorbed; only ever happens at the tail of the list
                factors.pop(j + 1)
                inverses.pop(j + 1)
            j -= 1

    # Closing sweep: the comb above already yields the normal form, but a
    # clean full pass certifies left-weightedness unconditionally and costs
    # one scan when nothing moves.
    dirty = True
    while dirty:
        dirty = False
        j = 0
        while j < len(factors) - 1:
            if _fix_pair(factors[j], inverses[j], factors[j + 1], inverses[j + 1], d):
                dirty = True
            if factors[j + 1] == identity:
                factors.pop(j + 1)
                inverses.pop(j + 1)
            else:
                j += 1

    # Leading half twists join the Delta power; trailing identities were
    # never created (absorbed factors are dropped eagerly).
    lead = 0
    while lead < len(factors) and factors[lead] == w0:
        lead += 1

    return dp + lead, tuple(tuple(p) for p in factors[lead:])

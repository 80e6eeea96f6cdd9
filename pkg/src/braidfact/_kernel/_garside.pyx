# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of garside_py: left-greedy Garside normal forms in B_d.

Same contract and conventions as braidfact._kernel.garside_py; kept
behaviourally identical and held to the same reference in the tests.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memmove

IMPL_NAME = "compiled"


cdef inline bint _fix_pair(int* a, int* ai, int* b, int* bi, int d) noexcept nogil:
    cdef bint changed = False
    cdef bint moved = True
    cdef int i, x, y, u
    while moved:
        moved = False
        for i in range(d - 1):
            if b[i] > b[i + 1] and ai[i] < ai[i + 1]:
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


cdef inline bint _is_identity(int* p, int d) noexcept nogil:
    cdef int x
    for x in range(d):
        if p[x] != x:
            return False
    return True


cdef inline bint _is_w0(int* p, int d) noexcept nogil:
    cdef int x
    for x in range(d):
        if p[x] != d - 1 - x:
            return False
    return True


def normal_form(int d, letters):
    """Left normal form (inf, permutation factors) of a signed-letter word."""
    if d < 1:
        raise ValueError("strand count must be >= 1")
    cdef Py_ssize_t n = len(letters)
    if n == 0:
        return 0, ()

    cdef int* raw = <int*>malloc(n * d * sizeof(int))
    cdef int* dpows = <int*>malloc(n * sizeof(int))
    cdef int* fac = <int*>malloc(n * d * sizeof(int))
    cdef int* inv = <int*>malloc(n * d * sizeof(int))
    cdef int* tmp = <int*>malloc(d * sizeof(int))
    if raw == NULL or dpows == NULL or fac == NULL or inv == NULL or tmp == NULL:
        free(raw); free(dpows); free(fac); free(inv); free(tmp)
        raise MemoryError()

    cdef Py_ssize_t j, m, k
    cdef int i, x, dp, lead
    cdef long kk
    cdef bint dirty
    cdef int* p
    cdef int* q
    try:
        for j in range(n):
            kk = letters[j]
            i = (kk if kk > 0 else -kk) - 1
            if i < 0 or i >= d - 1:
                raise ValueError("letter %d out of range for %d strands" % (kk, d))
            p = raw + j * d
            if kk > 0:
                for x in range(d):
                    p[x] = x
                p[i] = i + 1
                p[i + 1] = i
                dpows[j] = 0
            else:
                for x in range(d):
                    p[x] = d - 1 - x
                p[d - 1 - i] = i + 1
                p[d - 2 - i] = i
                dpows[j] = -1

        # shift half-twist powers to the front via tau(p) = w0 . p . w0
        dp = 0
        for j in range(n - 1, -1, -1):
            if dp & 1:
                p = raw + j * d
                for x in range(d):
                    tmp[x] = d - 1 - p[d - 1 - x]
                for x in range(d):
                    p[x] = tmp[x]
            dp += dpows[j]

        # incremental append with backward comb
        k = 0
        for j in range(n):
            p = raw + j * d
            if _is_identity(p, d):
                continue
            q = fac + k * d
            for x in range(d):
                q[x] = p[x]
                inv[k * d + p[x]] = x
            k += 1
            m = k - 2
            while m >= 0:
                if not _fix_pair(fac + m * d, inv + m * d,
                                 fac + (m + 1) * d, inv + (m + 1) * d, d):
                    break
                if _is_identity(fac + (m + 1) * d, d):
                    if m + 2 < k:
                        memmove(fac + (m + 1) * d, fac + (m + 2) * d,
                                (k - m - 2) * d * sizeof(int))
                        memmove(inv + (m + 1) * d, inv + (m + 2) * d,
                                (k - m - 2) * d * sizeof(int))
                    k -= 1
                m -= 1

        # closing sweep: certify left-weightedness with full passes
        dirty = True
        while dirty:
            dirty = False
            m = 0
            while m < k - 1:
                if _fix_pair(fac + m * d, inv + m * d,
                             fac + (m + 1) * d, inv + (m + 1) * d, d):
                    dirty = True
                if _is_identity(fac + (m + 1) * d, d):
                    if m + 2 < k:
                        memmove(fac + (m + 1) * d, fac + (m + 2) * d,
                                (k - m - 2) * d * sizeof(int))
                        memmove(inv + (m + 1) * d, inv + (m + 2) * d,
                                (k - m - 2) * d * sizeof(int))
                    k -= 1
                else:
                    m += 1

        lead = 0
        while lead < k and _is_w0(fac + lead * d, d):
            lead += 1

        out = tuple(
            tuple(fac[m * d + x] for x in range(d)) for m in range(lead, k)
        )
        return dp + lead, out
    finally:
        free(raw)
        free(dpows)
        free(fac)
        free(inv)
        free(tmp)

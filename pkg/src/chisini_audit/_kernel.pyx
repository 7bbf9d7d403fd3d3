# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled sweep kernel.

Same codes, checks and traversal order as ``_kernel_py``. All arithmetic
is 64-bit; ``kernel.MAX_COMPILED_M`` keeps every intermediate far from
overflow.
"""

cdef enum:
    N_CODES = 11
    N_CHECKS = 11
    SURVIVOR = 10

IMPLEMENTATION = "cython"


cdef inline int _pipeline(long long m, long long d, long long g1, long long c,
                          long long n, long long k2, long long e,
                          long long poly) noexcept nogil:
    cdef long long k
    cdef bint bmy
    if g1 < -1:
        return 1
    if c < 0:
        return 2
    if n < 0:
        return 3
    k = 2 * d * (2 * d - 1) - 3 * c - 2 * n
    if (k < 2 and d >= 2) or 2 * d > k * (k - 1):
        return 4
    if 2 * (3 * d + g1) - c <= 0:
        return 5
    if poly > 0:
        return 0
    if m >= 5 and g1 <= 2:
        return 6
    bmy = k2 <= 3 * e
    if 6 <= m <= 11 and bmy:
        return 7
    if m >= 8 and not bmy:
        return 8
    if (m == 6 or m == 7) and not bmy:
        if k2 <= 2 * e and k2 <= -2:
            return SURVIVOR
        return 9
    return SURVIVOR


def classify(long long m, long long dbar, long long u, long long gbar, long long t):
    cdef long long d = (m * (m - 1) - 2 * dbar) // 2
    cdef long long w = u - gbar
    cdef long long g1 = m * (2 * m * m - 7 * m + 5) // 2 - 5 * (m - 3) * dbar - 4 * w + 9 * t
    cdef long long c = m * (m - 1) * (m - 2) - 3 * (m - 2) * dbar + 3 * t
    cdef long long n = d * (2 * d - 3) - c - g1
    cdef long long k2 = m * (m - 4) * (m - 4) - (5 * m - 24) * dbar - 4 * w + 9 * t
    cdef long long e = m * m * (m - 4) + 6 * m - (7 * m - 24) * dbar - 8 * w + 15 * t
    cdef long long poly = ((m - 2) * (m * (m - 1) * (m - 2) - (7 * m - 24) * dbar - 8 * w)
                           + 3 * (5 * m - 12) * t)
    return _pipeline(m, d, g1, c, n, k2, e, poly)


def scan(long long m, long long dbar_lo, long long dbar_hi):
    cdef long long counts[N_CODES]
    cdef long long checks[N_CHECKS]
    cdef long long top = (m - 1) * (m - 2) // 2
    cdef long long dbar, u, u_lo, u_hi, gbar, gmax, t, t_top, d, w
    cdef long long g1_0, c_0, n_0, k2_0, e_0, p_0, p_t
    cdef long long g1, c, n, k2, e, poly, x, den
    cdef bint bmy_branch, violating, feasible
    cdef int code, i
    survivors = []

    for i in range(N_CODES):
        counts[i] = 0
    for i in range(N_CHECKS):
        checks[i] = 0
    if dbar_hi > top + 1:
        dbar_hi = top + 1
    if dbar_lo < 0:
        dbar_lo = 0

    with nogil:
        for dbar in range(dbar_lo, dbar_hi):
            if (m * (m - 1) - 2 * dbar) % 2 != 0:
                checks[2] += 1
            d = (m * (m - 1) - 2 * dbar) // 2
            if top - dbar != 1 - m + d:
                checks[1] += 1
            if dbar == 0:
                u_lo = 0
                u_hi = 1
            else:
                u_lo = 1
                u_hi = dbar + 1
            for u in range(u_lo, u_hi):
                if u == 0:
                    gmax = 0
                else:
                    gmax = (dbar - u) * (dbar - u - 1) // 2
                for gbar in range(gmax + 1):
                    w = u - gbar
                    g1_0 = m * (2 * m * m - 7 * m + 5) // 2 - 5 * (m - 3) * dbar - 4 * w
                    c_0 = m * (m - 1) * (m - 2) - 3 * (m - 2) * dbar
                    n_0 = d * (2 * d - 3) - c_0 - g1_0
                    if n_0 > 0:
                        t_top = n_0 // 12
                    else:
                        t_top = 0
                    k2_0 = m * (m - 4) * (m - 4) - (5 * m - 24) * dbar - 4 * w
                    e_0 = m * m * (m - 4) + 6 * m - (7 * m - 24) * dbar - 8 * w
                    p_0 = (m - 2) * (m * (m - 1) * (m - 2) - (7 * m - 24) * dbar - 8 * w)
                    p_t = 3 * (5 * m - 12)
                    for t in range(t_top + 1):
                        g1 = g1_0 + 9 * t
                        c = c_0 + 3 * t
                        n = d * (2 * d - 3) - c - g1
                        k2 = k2_0 + 9 * t
                        e = e_0 + 15 * t
                        poly = p_0 + p_t * t
                        code = _pipeline(m, d, g1, c, n, k2, e, poly)
                        counts[code] += 1
                        if code == SURVIVOR:
                            with gil:
                                survivors.append((m, dbar, u, gbar, t))

                        if 9 * m - 9 * d + g1 != k2 or 3 * m + 2 * g1 - c != e:
                            checks[0] += 1
                        if d * (2 * d - 3) != c + n + g1:
                            checks[3] += 1
                        x = 3 * d + g1
                        den = 2 * x - c
                        bmy_branch = 3 * c <= 9 * d + 5 * g1
                        violating = poly <= 0
                        if den > 0:
                            checks[4] += 1
                            if violating == (m * den > 4 * x):
                                checks[5] += 1
                            if bmy_branch:
                                checks[6] += 1
                                if not 12 * den > 4 * x:
                                    checks[7] += 1
                        else:
                            checks[10] += 1
                        feasible = g1 >= -1 and c >= 0 and n >= 0
                        if violating and feasible:
                            if 6 <= m <= 11 and bmy_branch:
                                checks[8] += 1
                            if (m == 6 or m == 7) and k2 <= 2 * e and k2 <= -2:
                                checks[9] += 1

    return ([counts[i] for i in range(N_CODES)],
            [checks[i] for i in range(N_CHECKS)],
            survivors)

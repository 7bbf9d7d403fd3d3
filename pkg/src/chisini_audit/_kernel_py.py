"""Pure-Python sweep kernel.

Mirror of ``_kernel.pyx``; the two must agree code for code. Outcome codes
index ``kernel.OUTCOME_KEYS`` and check slots index ``kernel.CHECK_KEYS``.
"""

NOT_VIOLATING = 0
INF_GENUS = 1
INF_CUSPS = 2
INF_NODES = 3
INF_PLUCKER = 4
UNDEFINED_DEN = 5
LOW_GENUS = 6
LEMMA_GEN = 7
NON_GENERAL = 8
UNREALIZABLE = 9
SURVIVOR = 10
N_CODES = 11
N_CHECKS = 11

IMPLEMENTATION = "python"


def classify(m, dbar, u, gbar, t):
    """Outcome code of one tuple; same pipeline as ``sweep.judge``."""
    d = (m * (m - 1) - 2 * dbar) // 2
    w = u - gbar
    g1 = m * (2 * m * m - 7 * m + 5) // 2 - 5 * (m - 3) * dbar - 4 * w + 9 * t
    c = m * (m - 1) * (m - 2) - 3 * (m - 2) * dbar + 3 * t
    n = d * (2 * d - 3) - c - g1
    k2 = m * (m - 4) ** 2 - (5 * m - 24) * dbar - 4 * w + 9 * t
    e = m * m * (m - 4) + 6 * m - (7 * m - 24) * dbar - 8 * w + 15 * t
    poly = (m - 2) * (m * (m - 1) * (m - 2) - (7 * m - 24) * dbar - 8 * w) + 3 * (5 * m - 12) * t
    return _pipeline(m, d, g1, c, n, k2, e, poly)


def _pipeline(m, d, g1, c, n, k2, e, poly):
    if g1 < -1:
        return INF_GENUS
    if c < 0:
        return INF_CUSPS
    if n < 0:
        return INF_NODES
    k = 2 * d * (2 * d - 1) - 3 * c - 2 * n
    if (k < 2 and d >= 2) or 2 * d > k * (k - 1):
        return INF_PLUCKER
    if 2 * (3 * d + g1) - c <= 0:
        return UNDEFINED_DEN
    if poly > 0:
        return NOT_VIOLATING
    if m >= 5 and g1 <= 2:
        return LOW_GENUS
    bmy = k2 <= 3 * e
    if 6 <= m <= 11 and bmy:
        return LEMMA_GEN
    if m >= 8 and not bmy:
        return NON_GENERAL
    if (m == 6 or m == 7) and not bmy:
        if k2 <= 2 * e and k2 <= -2:
            return SURVIVOR
        return UNREALIZABLE
    return SURVIVOR


def scan(m, dbar_lo, dbar_hi):
    """Judge every box tuple of degree ``m`` with ``dbar_lo <= dbar < dbar_hi``.

    Returns ``(counts, checks, survivors)`` where ``survivors`` lists the
    ``(m, dbar, u, gbar, t)`` tuples coded SURVIVOR in lexicographic order.
    """
    counts = [0] * N_CODES
    checks = [0] * N_CHECKS
    survivors = []
    top = (m - 1) * (m - 2) // 2
    dbar_hi = min(dbar_hi, top + 1)
    line_genus_base = top
    for dbar in range(max(dbar_lo, 0), dbar_hi):
        if (m * (m - 1) - 2 * dbar) % 2:
            checks[2] += 1
        d = (m * (m - 1) - 2 * dbar) // 2
        if line_genus_base - dbar != 1 - m + d:
            checks[1] += 1
        u_values = range(0, 1) if dbar == 0 else range(1, dbar + 1)
        for u in u_values:
            gmax = 0 if u == 0 else (dbar - u) * (dbar - u - 1) // 2
            for gbar in range(gmax + 1):
                w = u - gbar
                g1_0 = m * (2 * m * m - 7 * m + 5) // 2 - 5 * (m - 3) * dbar - 4 * w
                c_0 = m * (m - 1) * (m - 2) - 3 * (m - 2) * dbar
                n_0 = d * (2 * d - 3) - c_0 - g1_0
                t_top = n_0 // 12 if n_0 > 0 else 0
                k2_0 = m * (m - 4) ** 2 - (5 * m - 24) * dbar - 4 * w
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
                    if violating and g1 >= -1 and c >= 0 and n >= 0:
                        if 6 <= m <= 11 and bmy_branch:
                            checks[8] += 1
                        if (m == 6 or m == 7) and k2 <= 2 * e and k2 <= -2:
                            checks[9] += 1
    return counts, checks, survivors

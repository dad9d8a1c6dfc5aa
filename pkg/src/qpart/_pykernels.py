"""Pure-Python inner loops.

These are the reference kernels; ``_ckernels`` mirrors every function here
with the same signature and falls back to these on int64 overflow.
All arguments and results are plain lists of Python ints.
"""


def mul_trunc(a, b, order):
    """Cauchy product of two coefficient lists, truncated at ``order``."""
    out = [0] * (order + 1)
    nb = len(b)
    for i, x in enumerate(a):
        if not x or i > order:
            continue
        top = min(order - i + 1, nb)
        for j in range(top):
            y = b[j]
            if y:
                out[i + j] += x * y
    return out


def invert_trunc(a, order):
    """Reciprocal of a series with unit constant term (+1 or -1)."""
    c0 = a[0]
    out = [0] * (order + 1)
    out[0] = c0  # 1/c0 == c0 for c0 in {1, -1}
    for n in range(1, order + 1):
        s = 0
        for k in range(1, min(n, len(a) - 1) + 1):
            ak = a[k]
            if ak:
                s += ak * out[n - k]
        out[n] = -c0 * s
    return out


def run_dp_counts(n_max, min_part, one_run_weight):
    """Count sets of distinct parts >= ``min_part`` weighted by 2**(#maximal runs).

    A run whose smallest element is 1 is weighted by ``one_run_weight``
    instead of 2.  Returns counts for weights 0..n_max.
    """
    # open_[w]: last considered value taken; closed[w]: not taken
    closed = [0] * (n_max + 1)
    open_ = [0] * (n_max + 1)
    closed[0] = 1
    for v in range(max(min_part, 1), n_max + 1):
        start = one_run_weight if v == 1 else 2
        new_open = [0] * (n_max + 1)
        for w in range(v, n_max + 1):
            new_open[w] = start * closed[w - v] + open_[w - v]
        closed = [c + o for c, o in zip(closed, open_)]
        open_ = new_open
    return [c + o for c, o in zip(closed, open_)]


def run_dp_refined(m_max, n_max, min_part, one_run_weight):
    """As :func:`run_dp_counts` but split by number of parts; table[m][n]."""
    size = n_max + 1
    closed = [[0] * size for _ in range(m_max + 1)]
    open_ = [[0] * size for _ in range(m_max + 1)]
    closed[0][0] = 1
    for v in range(max(min_part, 1), n_max + 1):
        start = one_run_weight if v == 1 else 2
        new_open = [[0] * size for _ in range(m_max + 1)]
        for m in range(1, m_max + 1):
            cprev = closed[m - 1]
            oprev = open_[m - 1]
            row = new_open[m]
            for w in range(v, size):
                row[w] = start * cprev[w - v] + oprev[w - v]
        closed = [
            [c + o for c, o in zip(crow, orow)] for crow, orow in zip(closed, open_)
        ]
        open_ = new_open
    return [[c + o for c, o in zip(crow, orow)] for crow, orow in zip(closed, open_)]


def overpartition_counts(n_max, plain_ok, over_ok):
    """Overpartitions of 0..n_max with per-value permissions.

    ``plain_ok[v]`` / ``over_ok[v]`` say whether value v may appear
    non-overlined (any multiplicity) / overlined (at most once).
    """
    counts = [0] * (n_max + 1)
    counts[0] = 1
    for v in range(1, n_max + 1):
        if over_ok[v]:
            for w in range(n_max, v - 1, -1):
                counts[w] += counts[w - v]
        if plain_ok[v]:
            for w in range(v, n_max + 1):
                counts[w] += counts[w - v]
    return counts

# cython: language_level=3
"""Compiled mirrors of the pure-Python integer kernels in ``_kernels_py``.

Digit values and accumulators stay Python integers (they are unbounded); the
win comes from compiling away interpreter dispatch in the tight loops.  The
two implementations must stay behaviourally identical — the test suite
cross-checks them whenever this module builds.
"""


def rational_digits(u, v, w, long long limit):
    """See ``bcf._kernels_py.rational_digits``."""
    cdef list a = []
    cdef list b = []
    cdef Py_ssize_t count = 0
    while True:
        bi = v // w
        r = v - bi * w
        if r == 0:
            b.append(bi)
            return a, b, u, w, True
        if count == limit:
            return a, b, 0, 1, False
        ai = u // w
        a.append(ai)
        b.append(bi)
        count += 1
        u, v, w = w, u - ai * w, r


def convergent_triples(a, b, Py_ssize_t n):
    """See ``bcf._kernels_py.convergent_triples``."""
    cdef Py_ssize_t i
    a1, a2, a3 = 1, 0, 0
    b1, b2, b3 = 0, 1, 0
    c1, c2, c3 = 0, 0, 1
    cdef list out = []
    for i in range(n + 1):
        ai = a[i]
        bi = b[i]
        ta = ai * a1 + bi * a2 + a3
        tb = ai * b1 + bi * b2 + b3
        tc = ai * c1 + bi * c2 + c3
        out.append((ta, tb, tc))
        a1, a2, a3 = ta, a1, a2
        b1, b2, b3 = tb, b1, b2
        c1, c2, c3 = tc, c1, c2
    return out


def backward_entry(a, b, Py_ssize_t m, Py_ssize_t n):
    """See ``bcf._kernels_py.backward_entry``."""
    cdef Py_ssize_t k
    x1, x2, x3 = 1, 0, 0
    for k in range(n, m - 1, -1):
        bk1 = b[k + 1] if k + 1 <= n else 0
        x1, x2, x3 = a[k] * x1 + bk1 * x2 + x3, x1, x2
    return x1, b[m] * x2 + x3, x2


def convergent_matrix(a, b, Py_ssize_t n):
    """See ``bcf._kernels_py.convergent_matrix``."""
    cdef Py_ssize_t i
    cdef list rows = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    cdef list r
    for i in range(n + 1):
        ai = a[i]
        bi = b[i]
        for r in rows:
            r[0], r[1], r[2] = ai * r[0] + bi * r[1] + r[2], r[0], r[1]
    return tuple(tuple(r) for r in rows)


def gap_series(a, b, Py_ssize_t n):
    """See ``bcf._kernels_py.gap_series``."""
    cdef Py_ssize_t i
    a1, a2, a3 = 1, 0, 0
    c1, c2, c3 = 0, 0, 1
    cdef list out = []
    for i in range(n + 1):
        ai = a[i]
        bi = b[i]
        ta = ai * a1 + bi * a2 + a3
        tc = ai * c1 + bi * c2 + c3
        if i:
            out.append((abs(ta * c1 - a1 * tc), tc * c1))
        a1, a2, a3 = ta, a1, a2
        c1, c2, c3 = tc, c1, c2
    return out

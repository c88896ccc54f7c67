# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled Bland pivot loop for the dense phase-1 simplex tableau.

Semantically identical to ``_simplex_py.pivot_loop``; the pure-Python module
is the reference implementation and the import-time fallback.
"""


def pivot_loop(double[:, ::1] T, long long[::1] basis, double eps, long max_iter):
    """Run Bland-rule pivots on tableau T in place until optimal.

    T is (p+1) x (q+1): p constraint rows, one reduced-cost row, rhs in the
    last column.  Returns 0 if optimal, 1 if the iteration cap was hit.
    A column with negative reduced cost but no entry above eps is skipped:
    the phase-1 objective is bounded below, so that signal is numerical noise.
    """
    cdef Py_ssize_t p = T.shape[0] - 1
    cdef Py_ssize_t q = T.shape[1] - 1
    cdef Py_ssize_t i, j, k, col, row
    cdef double ratio, best, piv, factor
    cdef long it

    for it in range(max_iter):
        # entering: smallest pivotable column with negative reduced cost,
        # leaving: min ratio, ties by smallest basis label (Bland)
        col = -1
        row = -1
        best = 0.0
        for j in range(q):
            if T[p, j] >= -eps:
                continue
            for i in range(p):
                if T[i, j] > eps:
                    ratio = T[i, q] / T[i, j]
                    if row < 0 or ratio < best or (ratio == best and basis[i] < basis[row]):
                        row = i
                        best = ratio
            if row >= 0:
                col = j
                break
        if col < 0:
            return 0
        piv = T[row, col]
        for k in range(q + 1):
            T[row, k] = T[row, k] / piv
        for i in range(p + 1):
            if i == row:
                continue
            factor = T[i, col]
            if factor != 0.0:
                for k in range(q + 1):
                    T[i, k] = T[i, k] - factor * T[row, k]
                T[i, col] = 0.0
        basis[row] = col
    return 1

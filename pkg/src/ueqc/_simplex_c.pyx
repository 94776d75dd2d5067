# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled pivot kernel for the exact-rational simplex.

Behaviorally identical to ueqc._simplex_py; the win is removing interpreter
overhead around the object-arithmetic inner loops.
"""

BACKEND = "c"


cpdef void pivot(list rows, Py_ssize_t nrows, Py_ssize_t ncols, Py_ssize_t pr, Py_ssize_t pc):
    cdef Py_ssize_t i, j
    cdef list prow = <list>rows[pr]
    cdef object p = prow[pc]
    cdef object inv = 1 / p
    cdef object v, f
    cdef list row
    for j in range(ncols):
        if j != pc:
            v = prow[j]
            if v:
                prow[j] = v * inv
    prow[pc] = inv
    for i in range(nrows):
        if i == pr:
            continue
        row = <list>rows[i]
        f = row[pc]
        if f:
            for j in range(ncols):
                if j != pc:
                    v = prow[j]
                    if v:
                        row[j] = row[j] - f * v
            row[pc] = -f * inv


cpdef Py_ssize_t bland_entering(list objrow, list labels, Py_ssize_t width):
    cdef Py_ssize_t j, best = -1
    cdef long long best_label = -1, lab
    for j in range(width):
        if objrow[j] < 0:
            lab = <long long>labels[j]
            if best < 0 or lab < best_label:
                best = j
                best_label = lab
    return best


cpdef Py_ssize_t ratio_leaving(list rows, Py_ssize_t nbasic, Py_ssize_t pc,
                               Py_ssize_t rhs_col, list row_labels):
    cdef Py_ssize_t i, best = -1
    cdef object best_num = None, best_den = None, a, num, lhs, rhs
    cdef long long best_label = -1
    cdef bint better
    cdef list row
    for i in range(nbasic):
        row = <list>rows[i]
        a = row[pc]
        if a > 0:
            num = row[rhs_col]
            if best < 0:
                better = True
            else:
                lhs = num * best_den
                rhs = best_num * a
                better = lhs < rhs or (lhs == rhs and <long long>row_labels[i] < best_label)
            if better:
                best = i
                best_num = num
                best_den = a
                best_label = <long long>row_labels[i]
    return best

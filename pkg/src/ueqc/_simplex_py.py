"""Pure-Python pivot kernel for the exact-rational simplex.

The compiled twin (_simplex_c.pyx) implements exactly the same three
functions; ueqc._kernel picks whichever is importable.  Tableau rows are
plain lists of exact rationals (Fraction or gmpy2.mpq).
"""

BACKEND = "python"


def pivot(rows, nrows, ncols, pr, pc):
    """Tucker pivot in place: normalize row pr, eliminate column pc from all
    other rows, and write the exchanged coefficients into column pc."""
    prow = rows[pr]
    p = prow[pc]
    inv = 1 / p
    for j in range(ncols):
        if j != pc:
            v = prow[j]
            if v:
                prow[j] = v * inv
    prow[pc] = inv
    for i in range(nrows):
        if i == pr:
            continue
        row = rows[i]
        f = row[pc]
        if f:
            for j in range(ncols):
                if j != pc:
                    v = prow[j]
                    if v:
                        row[j] = row[j] - f * v
            row[pc] = -f * inv


def bland_entering(objrow, labels, width):
    """Column with negative reduced cost whose label is smallest; -1 if none."""
    best = -1
    best_label = -1
    for j in range(width):
        if objrow[j] < 0:
            lab = labels[j]
            if best < 0 or lab < best_label:
                best = j
                best_label = lab
    return best


def ratio_leaving(rows, nbasic, pc, rhs_col, row_labels):
    """Row of the minimum ratio rhs/entry over positive entries in column pc,
    ties broken by smallest basic label; -1 when the column is nonpositive."""
    best = -1
    best_num = None
    best_den = None
    best_label = -1
    for i in range(nbasic):
        a = rows[i][pc]
        if a > 0:
            num = rows[i][rhs_col]
            if best < 0:
                better = True
            else:
                lhs = num * best_den
                rhs = best_num * a
                better = lhs < rhs or (lhs == rhs and row_labels[i] < best_label)
            if better:
                best = i
                best_num = num
                best_den = a
                best_label = row_labels[i]
    return best

"""Exact-rational simplex for LPs in the standard form

    maximize c.x  subject to  A x <= b,  x >= 0.

Implementation: condensed (Tucker) tableau with Bland's anti-cycling rule and
a two-phase start for negative right-hand sides.  Every optimum comes with an
exact dual solution; `LPSolution.certify` re-checks feasibility of both sides
and the zero duality gap, so a wrong pivot can never produce a silently wrong
answer.  The inner pivot loops live in ueqc._kernel (compiled when built).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence

from . import _kernel
from .errors import CertificationError, Infeasible, SpecError, Unbounded
from .poly import _as_fraction

_MAX_PIVOTS = 5_000_000


@dataclass
class LinearProgram:
    """maximize c.x subject to A x <= b, x >= 0, all data exact rationals."""

    c: Sequence
    A: Sequence[Sequence]
    b: Sequence

    def __post_init__(self):
        self.c = [_as_fraction(v) for v in self.c]
        self.A = [[_as_fraction(v) for v in row] for row in self.A]
        self.b = [_as_fraction(v) for v in self.b]
        if len(self.A) != len(self.b):
            raise SpecError("A and b have different numbers of rows")
        for row in self.A:
            if len(row) != len(self.c):
                raise SpecError("A row width does not match c")

    @property
    def num_vars(self) -> int:
        return len(self.c)

    @property
    def num_constraints(self) -> int:
        return len(self.A)


@dataclass
class LPSolution:
    objective: Fraction
    x: List[Fraction]
    y: List[Fraction]
    pivots: int

    def certify(self, lp: LinearProgram) -> None:
        """Exact optimality check: primal/dual feasibility + zero gap."""
        if any(v < 0 for v in self.x) or any(v < 0 for v in self.y):
            raise CertificationError("negative primal or dual variable")
        for row, bi in zip(lp.A, lp.b):
            if sum(a * v for a, v in zip(row, self.x)) > bi:
                raise CertificationError("primal solution violates a constraint")
        for j, cj in enumerate(lp.c):
            if sum(lp.A[i][j] * self.y[i] for i in range(len(lp.A))) < cj:
                raise CertificationError("dual solution violates a constraint")
        primal = sum(c * v for c, v in zip(lp.c, self.x))
        dual = sum(b * v for b, v in zip(lp.b, self.y))
        if not (primal == dual == self.objective):
            raise CertificationError("duality gap is not exactly zero")

    def complementary_slackness(self, lp: LinearProgram) -> None:
        for j, xj in enumerate(self.x):
            if xj:
                reduced = (
                    sum(lp.A[i][j] * self.y[i] for i in range(len(lp.A))) - lp.c[j]
                )
                if reduced != 0:
                    raise CertificationError("positive variable with slack dual row")
        for i, yi in enumerate(self.y):
            if yi:
                slack = lp.b[i] - sum(a * v for a, v in zip(lp.A[i], self.x))
                if slack != 0:
                    raise CertificationError("positive multiplier on slack constraint")


class _Tableau:
    """Condensed tableau: m constraint rows + 1 objective row; the last
    column is the right-hand side.  Row i reads
    x_{basic[i]} = rhs_i - sum_j T[i][j] * x_{nonbasic[j]}."""

    def __init__(self, lp: LinearProgram, kernel):
        RAT = _kernel.RAT
        self.kernel = kernel
        self.m = lp.num_constraints
        self.v = lp.num_vars
        self.rows = [
            [RAT(a) for a in row] + [RAT(bi)] for row, bi in zip(lp.A, lp.b)
        ]
        self.rows.append([RAT(0)] * (self.v + 1))  # objective placeholder
        self.col_labels = list(range(self.v))
        self.row_labels = [self.v + i for i in range(self.m)]
        self.pivots = 0

    @property
    def width(self) -> int:
        return len(self.col_labels)

    def set_objective(self, cvec) -> None:
        """Express z = sum cvec[id] * x_id in the current dictionary."""
        RAT = _kernel.RAT
        obj = [RAT(0)] * (self.width + 1)
        for j, lab in enumerate(self.col_labels):
            obj[j] = -RAT(cvec.get(lab, 0))
        for i, lab in enumerate(self.row_labels):
            ci = cvec.get(lab, 0)
            if ci:
                ci = RAT(ci)
                row = self.rows[i]
                for j in range(self.width):
                    if row[j]:
                        obj[j] += ci * row[j]
                obj[self.width] += ci * row[self.width]
        self.rows[self.m] = obj

    def pivot(self, leave_row: int, enter_col: int) -> None:
        self.kernel.pivot(
            self.rows, self.m + 1, self.width + 1, leave_row, enter_col
        )
        self.row_labels[leave_row], self.col_labels[enter_col] = (
            self.col_labels[enter_col],
            self.row_labels[leave_row],
        )
        self.pivots += 1
        if self.pivots > _MAX_PIVOTS:
            raise RuntimeError("pivot limit exceeded; solver bug")

    def run_simplex(self) -> Optional[int]:
        """Bland iterations to optimality; returns the entering column of an
        unbounded direction instead, if one is found."""
        obj = lambda: self.rows[self.m]
        while True:
            enter = self.kernel.bland_entering(obj(), self.col_labels, self.width)
            if enter < 0:
                return None
            leave = self.kernel.ratio_leaving(
                self.rows, self.m, enter, self.width, self.row_labels
            )
            if leave < 0:
                return enter
            self.pivot(leave, enter)

    def drop_column(self, col: int) -> None:
        for row in self.rows:
            del row[col]
        del self.col_labels[col]

    def rhs(self, i: int):
        return self.rows[i][self.width]

    def objective_value(self):
        return self.rows[self.m][self.width]

    def primal(self) -> List[Fraction]:
        x = [Fraction(0)] * self.v
        for i, lab in enumerate(self.row_labels):
            if lab < self.v:
                x[lab] = Fraction(self.rhs(i))
        return x

    def duals(self) -> List[Fraction]:
        """Multipliers for the original constraints, read off the reduced
        costs of nonbasic slack variables."""
        y = [Fraction(0)] * self.m
        obj = self.rows[self.m]
        for j, lab in enumerate(self.col_labels):
            if self.v <= lab < self.v + self.m:
                y[lab - self.v] = Fraction(obj[j])
        return y

    def ray(self, enter_col: int) -> List[Fraction]:
        d = [Fraction(0)] * self.v
        lab = self.col_labels[enter_col]
        if lab < self.v:
            d[lab] = Fraction(1)
        for i, rl in enumerate(self.row_labels):
            if rl < self.v:
                d[rl] = Fraction(-self.rows[i][enter_col])
        return d


def solve_lp(lp: LinearProgram, kernel=None) -> LPSolution:
    """Solve to proven optimality; raises Infeasible/Unbounded with exact
    certificates attached."""
    kernel = kernel or _kernel
    t = _Tableau(lp, kernel)
    aux_id = lp.num_vars + lp.num_constraints

    if any(bi < 0 for bi in lp.b):
        RAT = _kernel.RAT
        # phase 1: maximize -x0 with an extra column -1 in every row
        for i in range(t.m):
            t.rows[i].insert(t.width, RAT(-1))
        t.rows[t.m].insert(t.width, RAT(0))
        t.col_labels.append(aux_id)
        t.set_objective({aux_id: -1})
        worst = min(range(t.m), key=lambda i: (t.rhs(i), t.row_labels[i]))
        t.pivot(worst, t.width - 1)
        unb = t.run_simplex()
        if unb is not None:
            raise RuntimeError("phase-1 LP cannot be unbounded; solver bug")
        if t.objective_value() < 0:
            farkas = t.duals()
            _check_farkas(lp, farkas)
            raise Infeasible(certificate=farkas)
        if aux_id in t.row_labels:
            r = t.row_labels.index(aux_id)
            piv = next((j for j in range(t.width) if t.rows[r][j]), None)
            if piv is None:
                del t.rows[r]
                del t.row_labels[r]
                t.m -= 1
            else:
                t.pivot(r, piv)
        t.drop_column(t.col_labels.index(aux_id))
        t.set_objective({j: c for j, c in enumerate(lp.c)})
    else:
        t.set_objective({j: c for j, c in enumerate(lp.c)})

    unb = t.run_simplex()
    if unb is not None:
        ray = t.ray(unb)
        _check_ray(lp, ray)
        raise Unbounded(ray=ray)

    sol = LPSolution(
        objective=Fraction(t.objective_value()),
        x=t.primal(),
        y=t.duals(),
        pivots=t.pivots,
    )
    sol.certify(lp)
    return sol


def _check_farkas(lp: LinearProgram, y) -> None:
    if any(v < 0 for v in y):
        raise CertificationError("Farkas certificate has a negative entry")
    for j in range(lp.num_vars):
        if sum(lp.A[i][j] * y[i] for i in range(len(lp.A))) < 0:
            raise CertificationError("Farkas certificate fails A^T y >= 0")
    if sum(b * v for b, v in zip(lp.b, y)) >= 0:
        raise CertificationError("Farkas certificate fails b.y < 0")


def _check_ray(lp: LinearProgram, d) -> None:
    if any(v < 0 for v in d):
        raise CertificationError("improving ray has a negative entry")
    if sum(c * v for c, v in zip(lp.c, d)) <= 0:
        raise CertificationError("ray does not improve the objective")
    for row in lp.A:
        if sum(a * v for a, v in zip(row, d)) > 0:
            raise CertificationError("ray leaves the feasible cone")

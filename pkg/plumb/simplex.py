"""
Exact rational phase-1 simplex.

Decides whether {y >= 0, A y >= b} is feasible and returns a vertex of the
feasible region when it is. Everything is done over Fraction and the
entering/leaving choices follow Bland's rule, so the method terminates
without any tolerance.
"""

import logging
from fractions import Fraction


logger = logging.getLogger("plumb.simplex")


class SimplexTableau(object):
    """
    Tableau for  A y - s + t = b  (rows sign-normalized so that b >= 0)
    with surplus s >= 0 and artificial t >= 0, minimizing sum(t).

    Columns are numbered: structural 0..n-1, surplus n..n+m-1,
    artificial n+m..n+2m-1.
    """

    def __init__(self, a, b):
        self.m = len(a)
        self.n = len(a[0]) if a else 0
        width = self.n + 2 * self.m
        self.rows = []
        self.rhs = []
        for i, (row, bi) in enumerate(zip(a, b)):
            bi = Fraction(bi)
            sign = -1 if bi < 0 else 1
            line = [Fraction(sign * x) for x in row] + [Fraction(0)] * (2 * self.m)
            line[self.n + i] = Fraction(-sign)
            line[self.n + self.m + i] = Fraction(1)
            self.rows.append(line)
            self.rhs.append(sign * bi)
        self.basis = [self.n + self.m + i for i in range(self.m)]
        # reduced costs of the phase-1 objective
        self.cost = [Fraction(0)] * width
        for j in range(width):
            if j >= self.n + self.m:
                continue
            self.cost[j] = -sum(self.rows[i][j] for i in range(self.m))
        self.pivots = 0

    def is_artificial(self, j):
        return j >= self.n + self.m

    def pivot(self, i, j):
        logger.debug("pivot {0} -> {1} ({2},{3})".format(self.basis[i], j, i, j))
        piv = self.rows[i][j]
        self.rows[i] = [x / piv for x in self.rows[i]]
        self.rhs[i] /= piv
        for k in range(self.m):
            if k != i and self.rows[k][j] != 0:
                f = self.rows[k][j]
                self.rows[k] = [x - f * y for x, y in zip(self.rows[k], self.rows[i])]
                self.rhs[k] -= f * self.rhs[i]
        f = self.cost[j]
        if f != 0:
            self.cost = [x - f * y for x, y in zip(self.cost, self.rows[i])]
        self.basis[i] = j
        self.pivots += 1

    def bland_step(self):
        entering = next((j for j, c in enumerate(self.cost) if c < 0), None)
        if entering is None:
            return 'optimal'
        candidates = [(self.rhs[i] / self.rows[i][entering], self.basis[i], i)
                      for i in range(self.m) if self.rows[i][entering] > 0]
        if not candidates:
            # phase-1 objective is bounded below by 0
            raise AssertionError("phase-1 objective unbounded")
        _, _, i = min(candidates)
        self.pivot(i, entering)
        return 'go_on'

    def run(self):
        while self.bland_step() != 'optimal':
            pass
        return self

    def objective(self):
        return sum(self.rhs[i] for i in range(self.m) if self.is_artificial(self.basis[i]))

    def solution(self):
        y = [Fraction(0)] * self.n
        for i, j in enumerate(self.basis):
            if j < self.n:
                y[j] = self.rhs[i]
        return y


def find_feasible(a, b):
    """
    A point y >= 0 with A y >= b, or None when there is none.

    :Parameters:
        a : list of rows of rationals (m x n)
        b : sequence of m rationals
    """
    if not a:
        return []
    tableau = SimplexTableau(a, b).run()
    value = tableau.objective()
    logger.debug("phase 1 finished after {0} pivots, objective {1}".format(
        tableau.pivots, value))
    if value != 0:
        return None
    y = tableau.solution()
    for row, bi in zip(a, b):
        assert sum(Fraction(x) * yj for x, yj in zip(row, y)) >= bi
    return y

"""Dense two-phase simplex solver

Solves linear programs in equality form:

    minimize c.x  subject to  A x = b,  x >= 0

Phase 1 minimizes the sum of artificial variables to find a basic
feasible solution; phase 2 optimizes the real objective from there.
Pivoting follows Bland's rule (lowest-index entering column, lowest-index
basic variable on ratio ties), so the solver cannot cycle and identical
inputs always yield the same vertex.  Callers add their own slack
variables.
"""

import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .base import DimensionMismatch, SolverError

log = logging.getLogger('lp')

PIVOT_TOLERANCE = 1e-9
FEASIBILITY_TOLERANCE = 1e-8
RATIO_TIE_TOLERANCE = 1e-12
MAX_PIVOTS = 5000

class LpStatus(Enum):
    OPTIMAL = 'optimal'
    INFEASIBLE = 'infeasible'
    UNBOUNDED = 'unbounded'

@dataclass(frozen=True)
class LpProblem:
    """Equality-form LP; every variable is implicitly nonnegative"""
    objective: tuple
    a_eq: tuple
    b_eq: tuple

    def __post_init__(self):
        n = len(self.objective)
        if len(self.a_eq) != len(self.b_eq):
            raise DimensionMismatch(
                f'{len(self.a_eq)} constraint rows but {len(self.b_eq)} right-hand sides')
        for i, row in enumerate(self.a_eq):
            if len(row) != n:
                raise DimensionMismatch(
                    f'constraint row {i} has {len(row)} coefficients, expected {n}')

    @property
    def num_vars(self):
        return len(self.objective)

    @staticmethod
    def build(objective, a_eq, b_eq):
        """Create a problem from any nested sequences or arrays"""
        return LpProblem(tuple(float(c) for c in objective),
            tuple(tuple(float(a) for a in row) for row in a_eq),
            tuple(float(b) for b in b_eq))

@dataclass(frozen=True)
class LpSolution:
    status: LpStatus
    x: tuple = ()
    objective_value: float = float('nan')
    reduced_costs: tuple = ()

    def is_optimal(self):
        return self.status is LpStatus.OPTIMAL

def _pivot(tableau, basis, row, col):
    tableau[row] /= tableau[row, col]
    for r in range(tableau.shape[0]):
        if r != row and tableau[r, col] != 0.0:
            tableau[r] -= tableau[r, col] * tableau[row]
    basis[row] = col

def _entering(costs, columns):
    for j in columns:
        if costs[j] < -PIVOT_TOLERANCE:
            return j
    return None

def _leaving(tableau, basis, col):
    best = None
    best_ratio = None
    for i in range(tableau.shape[0] - 1):
        a = tableau[i, col]
        if a > PIVOT_TOLERANCE:
            ratio = tableau[i, -1] / a
            if (best is None or ratio < best_ratio - RATIO_TIE_TOLERANCE or
                    (ratio <= best_ratio + RATIO_TIE_TOLERANCE and basis[i] < basis[best])):
                best, best_ratio = i, ratio
    return best

def _run_simplex(tableau, basis, columns):
    """Pivot until optimal; returns False if the objective is unbounded"""
    for count in range(MAX_PIVOTS):
        col = _entering(tableau[-1, :-1], columns)
        if col is None:
            log.debug(f'Simplex optimal after {count} pivots')
            return True
        row = _leaving(tableau, basis, col)
        if row is None:
            log.debug(f'Column {col} is unbounded')
            return False
        _pivot(tableau, basis, row, col)
    raise SolverError(f'simplex exceeded {MAX_PIVOTS} pivots')

def _price_out(tableau, basis, costs):
    """Write the reduced-cost row for costs given the current basis"""
    tableau[-1, :] = 0.0
    tableau[-1, :len(costs)] = costs
    for i, var in enumerate(basis):
        if var < len(costs) and costs[var] != 0.0:
            tableau[-1] -= costs[var] * tableau[i]

def solve(problem):
    """Solve an LpProblem, returning an LpSolution"""
    n = problem.num_vars
    c = np.array(problem.objective, dtype=float)
    a = np.array(problem.a_eq, dtype=float).reshape(len(problem.a_eq), n)
    b = np.array(problem.b_eq, dtype=float)
    m = a.shape[0]
    log.debug(f'Solving LP with {n} variables and {m} equality rows')

    # Phase 1: one artificial per row, rows flipped so that b >= 0
    negative = b < 0
    a[negative] *= -1
    b[negative] *= -1
    tableau = np.zeros((m + 1, n + m + 1))
    tableau[:m, :n] = a
    tableau[:m, n:n + m] = np.eye(m)
    tableau[:m, -1] = b
    basis = list(range(n, n + m))
    _price_out(tableau, basis, np.concatenate([np.zeros(n), np.ones(m)]))
    _run_simplex(tableau, basis, range(n + m))
    if -tableau[-1, -1] > FEASIBILITY_TOLERANCE:
        log.debug(f'Phase 1 residual {-tableau[-1, -1]}: infeasible')
        return LpSolution(LpStatus.INFEASIBLE)

    # Drive remaining artificials out of the basis; rows where that is
    # impossible are redundant and dropped
    keep = []
    for i in range(m):
        if basis[i] >= n:
            col = next((j for j in range(n) if abs(tableau[i, j]) > PIVOT_TOLERANCE), None)
            if col is None:
                log.debug(f'Dropping redundant constraint row {i}')
                continue
            _pivot(tableau, basis, i, col)
        keep.append(i)
    tableau = np.vstack([tableau[keep][:, list(range(n)) + [-1]], np.zeros((1, n + 1))])
    basis = [basis[i] for i in keep]

    # Phase 2
    _price_out(tableau, basis, c)
    if not _run_simplex(tableau, basis, range(n)):
        return LpSolution(LpStatus.UNBOUNDED)
    x = np.zeros(n)
    for i, var in enumerate(basis):
        x[var] = tableau[i, -1]
    x[(x < 0) & (x > -PIVOT_TOLERANCE)] = 0.0
    return LpSolution(LpStatus.OPTIMAL, tuple(float(v) for v in x), float(c @ x),
        tuple(float(r) for r in tableau[-1, :-1]))

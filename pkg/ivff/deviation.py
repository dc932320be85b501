"""Maximizing-deviation criterion weights

Criteria on which the alternatives differ more receive more weight.  For
each decision maker the total deviation of every criterion column is the
sum of pairwise IVFFN distances; weights follow from it in closed form
(or from the linear model when weights are entirely unknown).  Group
weights are then the point closest, in weighted absolute deviation, to
all decision makers' vectors, found with the simplex engine.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from .base import (EPSILON, AllColumnsConstant, BadLambda, DataError,
    DimensionMismatch, InfeasibleLp)
from .number import IVFFN, distance
from . import lp

log = logging.getLogger('deviation')

WEIGHT_SUM_TOLERANCE = 1e-9

class DecisionMatrix(object):
    """m x n matrix of IVFFN judgments (alternatives by criteria) for one decision maker"""

    def __init__(self, cells, dm_id = ''):
        self.dm_id = dm_id
        self.cells = tuple(tuple(row) for row in cells)
        if len(self.cells) < 2:
            raise DataError(f'matrix {dm_id!r} needs at least 2 alternatives')
        n = len(self.cells[0])
        if n < 1:
            raise DataError(f'matrix {dm_id!r} needs at least 1 criterion')
        for i, row in enumerate(self.cells):
            if len(row) != n:
                raise DimensionMismatch(f'matrix {dm_id!r} row {i} has {len(row)} cells, expected {n}')
            for value in row:
                if not isinstance(value, IVFFN):
                    raise DataError(f'matrix {dm_id!r} row {i} holds a non-IVFFN cell {value!r}')

    @property
    def shape(self):
        return (len(self.cells), len(self.cells[0]))

    def get_id(self):
        return self.dm_id

    def cell(self, i, j):
        return self.cells[i][j]

    def row(self, i):
        return self.cells[i]

    def column(self, j):
        return tuple(row[j] for row in self.cells)

    def select_rows(self, rows):
        """Sub-matrix with the given alternatives, in the given order"""
        return DecisionMatrix([self.cells[i] for i in rows], self.dm_id)

    def __eq__(self, other):
        return isinstance(other, DecisionMatrix) and self.cells == other.cells

@dataclass(frozen=True)
class WeightVector:
    """Nonnegative criterion weights summing to 1

    objective holds the optimal model value when the vector came from an
    LP, so that alternate optima can be audited.
    """
    weights: tuple
    objective: float = None

    def __post_init__(self):
        if any(w < -EPSILON for w in self.weights):
            raise DataError(f'negative weight in {self.weights}')
        if abs(sum(self.weights) - 1.0) > WEIGHT_SUM_TOLERANCE:
            raise DataError(f'weights {self.weights} do not sum to 1')

    @staticmethod
    def normalized(values, objective = None):
        """Scale nonnegative values to sum 1, clearing rounding negatives"""
        values = np.clip(np.asarray(values, dtype=float), 0.0, None)
        total = values.sum()
        if total <= 0:
            raise DataError('cannot normalize an all-zero weight vector')
        return WeightVector(tuple(float(v) for v in values / total), objective)

    def __len__(self):
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, j):
        return self.weights[j]

@dataclass(frozen=True)
class DeviationTable:
    """Total pairwise deviation D_j of every criterion column"""
    deviations: tuple

    def is_constant(self):
        return all(d <= 0.0 for d in self.deviations)

def deviation_table(matrix):
    """D_j = sum over ordered alternative pairs of distance(F_xj, F_sj)"""
    m, n = matrix.shape
    deviations = []
    for j in range(n):
        column = matrix.column(j)
        total = 0.0
        for xi in range(m):
            for sigma in range(xi + 1, m):
                total += distance(column[xi], column[sigma])
        deviations.append(2 * total)
    log.debug(f'{matrix.get_id()}: deviations {deviations}')
    return DeviationTable(tuple(deviations))

def _deviations(matrix):
    table = deviation_table(matrix)
    if table.is_constant():
        raise AllColumnsConstant(
            f'every criterion of {matrix.get_id()!r} is constant across alternatives')
    return np.array(table.deviations)

def per_dm_weights(matrix):
    """Closed-form weights: D_j / sqrt(sum D^2), then normalized to sum 1"""
    d = _deviations(matrix)
    unit = d / math.sqrt(float(np.sum(d ** 2)))
    return WeightVector.normalized(unit / unit.sum())

def per_dm_weights_cubic(matrix):
    """Exact maximizer of sum w_j D_j on the surface sum w_j^3 = 1, normalized to sum 1

    Stationarity gives w_j proportional to sqrt(D_j).
    """
    d = _deviations(matrix)
    roots = np.sqrt(d)
    on_surface = roots / np.cbrt(np.sum(d ** 1.5))
    return WeightVector.normalized(on_surface / on_surface.sum())

def per_dm_weights_lp(matrix):
    """Maximize sum w_j D_j on the simplex

    The optimum sits on a vertex (all weight on the largest deviation);
    tied maxima share the weight equally.
    """
    d = _deviations(matrix)
    n = len(d)
    problem = lp.LpProblem.build(-d, [np.ones(n)], [1.0])
    solution = lp.solve(problem)
    if not solution.is_optimal():
        raise InfeasibleLp(f'deviation LP for {matrix.get_id()!r} ended {solution.status.value}')
    best = -solution.objective_value
    tied = d >= best - EPSILON
    if tied.sum() > 1:
        log.debug(f'{matrix.get_id()}: {int(tied.sum())} criteria tie for the maximum deviation')
        return WeightVector.normalized(tied.astype(float), best)
    return WeightVector.normalized(solution.x, best)

DM_WEIGHT_MODELS = {
    'eq13': per_dm_weights,
    'cubic': per_dm_weights_cubic,
    'lp': per_dm_weights_lp,
}

def check_influence(alpha, count):
    """Validate decision-maker influence weights"""
    if len(alpha) != count:
        raise DimensionMismatch(f'{len(alpha)} influence weights for {count} decision makers')
    if any(a < 0 for a in alpha) or abs(sum(alpha) - 1.0) > 1e-6:
        raise BadLambda(f'influence weights {tuple(alpha)} must be nonnegative and sum to 1')

def group_weights(perdm, alpha):
    """Group weights minimizing sum_j sum_k alpha_k |w_j^k - w_j*|

    The absolute values are split into slack pairs (phi, psi); variables
    are laid out as [w* (n), then phi^k (n) and psi^k (n) for each k].
    """
    g = len(perdm)
    if g == 0:
        raise DimensionMismatch('no decision-maker weight vectors')
    check_influence(alpha, g)
    n = len(perdm[0])
    for k, vector in enumerate(perdm):
        if len(vector) != n:
            raise DimensionMismatch(f'weight vector {k} has {len(vector)} entries, expected {n}')
    num_vars = n + 2 * n * g
    c = np.zeros(num_vars)
    a_eq = []
    b_eq = []
    for k, vector in enumerate(perdm):
        phi = n + 2 * n * k
        psi = phi + n
        c[phi:phi + n] = alpha[k]
        c[psi:psi + n] = alpha[k]
        for j in range(n):
            row = np.zeros(num_vars)
            row[j] = 1.0
            row[phi + j] = 1.0
            row[psi + j] = -1.0
            a_eq.append(row)
            b_eq.append(vector[j])
    row = np.zeros(num_vars)
    row[:n] = 1.0
    a_eq.append(row)
    b_eq.append(1.0)
    solution = lp.solve(lp.LpProblem.build(c, a_eq, b_eq))
    if not solution.is_optimal():
        raise InfeasibleLp(f'group weight LP ended {solution.status.value}')
    log.info(f'Group weight LP objective {solution.objective_value:.6f}')
    return WeightVector.normalized(solution.x[:n], solution.objective_value)

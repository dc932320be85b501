"""IVFF weighted averaging (WA) and weighted geometric (WG) operators

WA combines membership grades through cubic probabilistic sums and
non-membership grades through weighted products; WG is its dual.  Both
are used twice in the decision procedure: across decision makers to
build the collective matrix, and across criteria to get one preference
value per alternative.
"""

import logging
from dataclasses import dataclass

import numpy as np

from .base import DimensionMismatch, ShapeMismatch, DataError
from .number import from_grades, score_triple
from .deviation import DecisionMatrix

log = logging.getLogger('aggregation')

COLLECTIVE_ID = 'collective'

@dataclass(frozen=True)
class PreferenceVector:
    """Aggregated preference value and score triple of every alternative"""
    values: tuple
    scores: tuple

    def __len__(self):
        return len(self.values)

def _grades(values, weights):
    weights = np.asarray(list(weights), dtype=float)
    if len(values) != len(weights) or len(values) == 0:
        raise DimensionMismatch(f'{len(values)} values for {len(weights)} weights')
    if np.any(weights < 0):
        raise DataError(f'negative aggregation weight in {weights}')
    grades = np.array([v.grades for v in values], dtype=float)
    return grades[:, :2], grades[:, 2:], weights[:, None]

def _cubic_mean(x, w):
    # 0 ** 0 == 1 keeps zero-weight entries neutral
    return np.cbrt(np.clip(1.0 - np.prod((1.0 - x ** 3) ** w, axis=0), 0.0, None))

def ivffwa(values, weights):
    """Weighted averaging operator"""
    member, nonmember, w = _grades(values, weights)
    zl, zu = _cubic_mean(member, w)
    nl, nu = np.prod(nonmember ** w, axis=0)
    return from_grades(float(zl), float(zu), float(nl), float(nu))

def ivffwg(values, weights):
    """Weighted geometric operator"""
    member, nonmember, w = _grades(values, weights)
    zl, zu = np.prod(member ** w, axis=0)
    nl, nu = _cubic_mean(nonmember, w)
    return from_grades(float(zl), float(zu), float(nl), float(nu))

OPERATORS = {
    'wa': ivffwa,
    'wg': ivffwg,
}

def collapse_dms(matrices, influence, operator = 'wa'):
    """Cellwise aggregation of all decision makers' matrices into one"""
    if not matrices:
        raise ShapeMismatch('no decision matrices to collapse')
    if len(matrices) != len(influence):
        raise DimensionMismatch(f'{len(matrices)} matrices for {len(influence)} influence weights')
    shape = matrices[0].shape
    for matrix in matrices:
        if matrix.shape != shape:
            raise ShapeMismatch(f'matrix {matrix.get_id()!r} is {matrix.shape}, expected {shape}')
    if len(matrices) == 1:
        return matrices[0]
    aggregate = OPERATORS[operator]
    m, n = shape
    log.debug(f'Collapsing {len(matrices)} matrices of shape {shape} with {operator}')
    cells = [[aggregate([matrix.cell(i, j) for matrix in matrices], influence)
        for j in range(n)] for i in range(m)]
    return DecisionMatrix(cells, COLLECTIVE_ID)

def preference_values(collective, weights, operator = 'wg'):
    """Aggregate every alternative's criteria row into one scored IVFFN"""
    m, n = collective.shape
    if len(weights) != n:
        raise ShapeMismatch(f'{len(weights)} weights for {n} criteria')
    aggregate = OPERATORS[operator]
    values = tuple(aggregate(collective.row(i), weights) for i in range(m))
    return PreferenceVector(values, tuple(score_triple(v) for v in values))

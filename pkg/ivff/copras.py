"""IVFF-COPRAS ranking

Cross-checks the maximizing-deviation ranking with a complex proportional
assessment.  For every alternative, the benefit criteria are combined into
a maximizing index and the cost criteria into a minimizing index, both in
weighted-averaging form with the group weights restricted to the criteria
concerned (not renormalized).  Relative degrees are

    xi_i = s(a_i) + sum(s(b)) / (s(b_i) * sum(1 / s(b)))

and utilities are 100 * xi_i / max(xi).  By default s is the normalized
score in [0, 1]; the 'raw' score mode uses the score in [-1, 1] and
rejects nonpositive cost scores.
"""

import logging
from dataclasses import dataclass

import numpy as np

from .base import (DataError, DimensionMismatch, EmptyMask, NoBenefitCriteria,
    OverlapError, UncoveredCriteria, ZeroCostScore)
from .number import score_triple
from .aggregation import collapse_dms, ivffwa
from . import pipeline

log = logging.getLogger('copras')

@dataclass(frozen=True)
class CoprasIndices:
    """Per-alternative benefit and cost indices, relative degrees and utilities

    cost is empty when the problem has no cost criteria.
    """
    benefit: tuple
    cost: tuple
    relative: tuple
    utility: tuple

def _masked(row, weights, mask):
    if len(mask) != len(row) or len(weights) != len(row):
        raise DimensionMismatch(
            f'{len(row)} cells, {len(weights)} weights and a mask of {len(mask)}')
    columns = [j for j, selected in enumerate(mask) if selected]
    if not columns:
        raise EmptyMask('criterion mask selects no criteria')
    return ivffwa([row[j] for j in columns], [weights[j] for j in columns])

def benefit_index(row, weights, benefit_mask):
    """Maximizing index of one alternative over the benefit criteria"""
    return _masked(row, weights, benefit_mask)

def cost_index(row, weights, cost_mask):
    """Minimizing index of one alternative over the cost criteria"""
    return _masked(row, weights, cost_mask)

def check_partition(benefit_mask, cost_mask):
    """Benefit and cost masks must be disjoint and cover every criterion"""
    if len(benefit_mask) != len(cost_mask):
        raise DimensionMismatch(f'masks of length {len(benefit_mask)} and {len(cost_mask)}')
    if not any(benefit_mask):
        raise NoBenefitCriteria('no criterion is marked as benefit')
    both = [j for j, (b, c) in enumerate(zip(benefit_mask, cost_mask)) if b and c]
    if both:
        raise OverlapError(f'criteria {both} are marked both benefit and cost')
    neither = [j for j, (b, c) in enumerate(zip(benefit_mask, cost_mask)) if not b and not c]
    if neither:
        raise UncoveredCriteria(f'criteria {neither} are neither benefit nor cost')

def partition(criteria):
    """Benefit and cost masks from the criteria kinds"""
    benefit_mask = tuple(c.kind == 'benefit' for c in criteria)
    cost_mask = tuple(c.kind == 'cost' for c in criteria)
    if not any(benefit_mask):
        raise NoBenefitCriteria('no criterion is marked as benefit; COPRAS needs benefit/cost kinds')
    unmarked = [c.name for c in criteria if c.kind is None]
    if unmarked:
        raise UncoveredCriteria(f'criteria {unmarked} have no benefit/cost kind')
    return benefit_mask, cost_mask

def _score(value, mode):
    triple = score_triple(value)
    return triple.normalized if mode == 'normalized' else triple.score

def copras_indices(collective, weights, benefit_mask, cost_mask, score = 'normalized'):
    """Indices, relative degrees and utilities for a collective matrix"""
    check_partition(benefit_mask, cost_mask)
    m, n = collective.shape
    if len(weights) != n:
        raise DimensionMismatch(f'{len(weights)} weights for {n} criteria')
    benefit = tuple(benefit_index(collective.row(i), weights, benefit_mask) for i in range(m))
    relative = np.array([_score(a, score) for a in benefit])
    cost = ()
    if any(cost_mask):
        cost = tuple(cost_index(collective.row(i), weights, cost_mask) for i in range(m))
        s_cost = np.array([_score(b, score) for b in cost])
        if np.any(s_cost <= 0):
            raise ZeroCostScore(f'cost index scores {s_cost.tolist()} are not all positive')
        relative = relative + s_cost.sum() / (s_cost * np.sum(1.0 / s_cost))
    best = relative.max()
    if best <= 0:
        raise DataError(f'relative degrees {relative.tolist()} have no positive maximum')
    utility = 100.0 * relative / best
    log.debug(f'COPRAS relative degrees {relative.tolist()}')
    return CoprasIndices(benefit, cost, tuple(float(r) for r in relative),
        tuple(float(u) for u in utility))

def copras_rank(problem, weights, options = None, md_ranking = None):
    """Rank a problem with IVFF-COPRAS using the given group weights

    When md_ranking is given, provenance records whether the two methods
    agree on the full order and on the top choice.
    """
    options = options or pipeline.PipelineOptions()
    benefit_mask, cost_mask = partition(problem.criteria)
    collective = collapse_dms(problem.matrices, problem.influence, options.collapse)
    indices = copras_indices(collective, weights, benefit_mask, cost_mask, options.score)
    order = sorted(range(len(indices.utility)), key=lambda i: (-indices.utility[i], i))
    ranking = tuple(problem.alternatives[i] for i in order)
    log.info(f'COPRAS ranking for {problem.name!r}: {" > ".join(ranking)}')
    provenance = {
        'options': options.as_dict(),
        'benefit': [c.name for c, b in zip(problem.criteria, benefit_mask) if b],
        'cost': [c.name for c, b in zip(problem.criteria, cost_mask) if b],
        'repairs': list(problem.repairs),
    }
    if md_ranking is not None:
        provenance['md_ranking'] = list(md_ranking)
        provenance['matches_md'] = list(ranking) == list(md_ranking)
        provenance['top_matches_md'] = ranking[0] == md_ranking[0]
        if not provenance['matches_md']:
            log.warning(f'COPRAS and MD rankings differ: {" > ".join(ranking)} vs {" > ".join(md_ranking)}')
    return pipeline.RankingReport('copras', problem.name, problem.alternatives,
        tuple(problem.criterion_names()), tuple(problem.dm_names()), (), weights,
        ranking, indices.utility, 'utility', copras=indices, provenance=provenance)

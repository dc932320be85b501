"""Maximizing-deviation group decision procedure

Runs the five steps of the method on a DecisionProblem:

  1. take every decision maker's IVFFN matrix,
  2. derive per-decision-maker criterion weights from column deviations,
  3. solve the group-consistency LP for the group weights,
  4. collapse the matrices (WA across decision makers) and aggregate each
     alternative's row (WG across criteria) into a preference value,
  5. rank the alternatives by normalized score.

Benefit/cost kinds are carried by the problem but not used here: the
method aggregates every criterion the same way.  COPRAS uses them.
"""

import logging
import time
from dataclasses import dataclass, field

from .base import BadLambda, DataError, EmptyProblem, ShapeMismatch
from .number import sort_key
from .deviation import DM_WEIGHT_MODELS, group_weights
from .aggregation import OPERATORS, collapse_dms, preference_values

log = logging.getLogger('pipeline')

CRITERION_KINDS = ('benefit', 'cost')
LAMBDA_TOLERANCE = 1e-6
REFERENCE_WEIGHT_TOLERANCE = 0.03
REFERENCE_SCORE_TOLERANCE = 0.05

@dataclass(frozen=True)
class Criterion:
    name: str
    kind: str = None

@dataclass(frozen=True)
class DecisionMaker:
    name: str
    influence: float

class DecisionProblem(object):
    """Alternatives, criteria, decision makers and their IVFFN matrices

    matrices[k] is an alternatives-by-criteria DecisionMatrix for
    decision maker k.  repairs lists label repairs made while parsing;
    reference optionally holds published results to compare against.
    """

    def __init__(self, name, alternatives, criteria, dms, matrices,
            scale_name = '', repairs = (), reference = None):
        self.name = name
        self.alternatives = tuple(alternatives)
        self.criteria = tuple(criteria)
        self.dms = tuple(dms)
        self.matrices = tuple(matrices)
        self.scale_name = scale_name
        self.repairs = tuple(repairs)
        self.reference = reference
        self.validate()

    def validate(self):
        if not self.alternatives or not self.criteria or not self.dms:
            raise EmptyProblem(f'problem {self.name!r} has no alternatives, criteria or decision makers')
        if len(set(self.alternatives)) != len(self.alternatives):
            raise DataError(f'duplicate alternative names in {self.alternatives}')
        if len(self.alternatives) < 2:
            raise DataError('a decision problem needs at least 2 alternatives')
        for criterion in self.criteria:
            if criterion.kind is not None and criterion.kind not in CRITERION_KINDS:
                raise DataError(f'criterion {criterion.name!r} has unknown kind {criterion.kind!r}')
        influence = self.influence
        if any(not 0 <= w <= 1 for w in influence):
            raise BadLambda(f'influence weights {influence} must lie in [0, 1]')
        if abs(sum(influence) - 1.0) > LAMBDA_TOLERANCE:
            raise BadLambda(f'influence weights {influence} sum to {sum(influence)}, not 1')
        if len(self.matrices) != len(self.dms):
            raise ShapeMismatch(f'{len(self.matrices)} matrices for {len(self.dms)} decision makers')
        shape = (len(self.alternatives), len(self.criteria))
        for matrix in self.matrices:
            if matrix.shape != shape:
                raise ShapeMismatch(f'matrix {matrix.get_id()!r} is {matrix.shape}, expected {shape}')

    @property
    def influence(self):
        return tuple(dm.influence for dm in self.dms)

    @property
    def shape(self):
        return (len(self.alternatives), len(self.criteria))

    def criterion_names(self):
        return [c.name for c in self.criteria]

    def dm_names(self):
        return [dm.name for dm in self.dms]

    def select_alternatives(self, indices):
        """Sub-problem keeping only the given alternatives, in order"""
        return DecisionProblem(self.name, [self.alternatives[i] for i in indices],
            self.criteria, self.dms, [m.select_rows(indices) for m in self.matrices],
            self.scale_name, self.repairs)

@dataclass
class PipelineOptions:
    """Model and operator choices for a run"""
    dm_weights: str = 'eq13'
    collapse: str = 'wa'
    prefer: str = 'wg'
    score: str = 'normalized'

    def __post_init__(self):
        if self.dm_weights not in DM_WEIGHT_MODELS:
            raise DataError(f'unknown per-DM weight model {self.dm_weights!r}')
        for stage in (self.collapse, self.prefer):
            if stage not in OPERATORS:
                raise DataError(f'unknown aggregation operator {stage!r}')
        if self.score not in ('normalized', 'raw'):
            raise DataError(f'unknown score mode {self.score!r}')

    @staticmethod
    def from_dict(values):
        """Pick option fields out of a larger mapping (e.g. vars(args))"""
        names = ('dm_weights', 'collapse', 'prefer', 'score')
        return PipelineOptions(**{k: values[k] for k in names if values.get(k) is not None})

    def as_dict(self):
        return {'dm_weights': self.dm_weights, 'collapse': self.collapse,
            'prefer': self.prefer, 'score': self.score}

@dataclass
class RankingReport:
    """Result of ranking a problem

    scores holds, in input order, the figure used to rank each alternative
    (normalized score for the MD method, utility degree for COPRAS).
    ranking lists alternative names best first.  timings are kept out of
    machine reports so that those stay reproducible.
    """
    method: str
    problem: str
    alternatives: tuple
    criteria: tuple
    dms: tuple
    dm_weights: tuple
    group_weights: object
    ranking: tuple
    scores: tuple
    score_label: str
    preferences: object = None
    copras: object = None
    provenance: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)

    def top(self):
        return self.ranking[0]

def rank_order(values):
    """Alternative indices ordered best first; equal values keep input order"""
    return sorted(range(len(values)), key=lambda i: sort_key(values[i]))

def derive_weights(problem, options = None):
    """Per-decision-maker weights and the group weight vector"""
    options = options or PipelineOptions()
    model = DM_WEIGHT_MODELS[options.dm_weights]
    perdm = []
    for matrix in problem.matrices:
        weights = model(matrix)
        log.debug(f'{matrix.get_id()} weights {weights.weights}')
        perdm.append(weights)
    return tuple(perdm), group_weights(perdm, problem.influence)

def rank_with_weights(collective, weights, options = None):
    """Preference values and best-first order for given group weights"""
    options = options or PipelineOptions()
    preferences = preference_values(collective, weights, options.prefer)
    return preferences, rank_order(preferences.values)

def _max_diff(computed, published):
    if len(computed) != len(published):
        return None
    return max(abs(a - b) for a, b in zip(computed, published))

def reference_check(problem, dm_weights, group, scores, ranking):
    """Compare a run against the published values carried by the problem"""
    reference = problem.reference
    check = {}
    within = True
    published = reference.get('dm_weights') or {}
    if published:
        check['dm_weights'] = {}
        for dm, weights in zip(problem.dms, dm_weights):
            if dm.name in published:
                diff = _max_diff(weights.weights, published[dm.name])
                check['dm_weights'][dm.name] = diff
                within = within and diff is not None and diff <= REFERENCE_WEIGHT_TOLERANCE
    if reference.get('group_weights'):
        diff = _max_diff(group.weights, reference['group_weights'])
        check['group_weights'] = diff
        within = within and diff is not None and diff <= REFERENCE_WEIGHT_TOLERANCE
    if reference.get('scores'):
        diff = _max_diff(scores, reference['scores'])
        check['scores'] = diff
        within = within and diff is not None and diff <= REFERENCE_SCORE_TOLERANCE
    if reference.get('ranking'):
        check['ranking_matches'] = list(ranking) == list(reference['ranking'])
        within = within and check['ranking_matches']
    check['within_tolerance'] = within
    if not within:
        log.warning(f'Results differ from the published reference: {check}')
    return check

def run(problem, options = None):
    """Execute the full procedure and return a RankingReport"""
    options = options or PipelineOptions()
    timings = {}
    started = time.perf_counter()
    perdm, group = derive_weights(problem, options)
    timings['weights'] = time.perf_counter() - started

    started = time.perf_counter()
    collective = collapse_dms(problem.matrices, problem.influence, options.collapse)
    preferences, order = rank_with_weights(collective, group, options)
    timings['aggregation'] = time.perf_counter() - started
    log.debug(f'Stage timings: {timings}')

    ranking = tuple(problem.alternatives[i] for i in order)
    scores = tuple(s.normalized for s in preferences.scores)
    log.info(f'Ranking for {problem.name!r}: {" > ".join(ranking)}')
    provenance = {
        'options': options.as_dict(),
        'group_objective': group.objective,
        'repairs': list(problem.repairs),
    }
    if problem.reference:
        provenance['reference_check'] = reference_check(problem, perdm, group, scores, ranking)
    return RankingReport('md', problem.name, problem.alternatives,
        tuple(problem.criterion_names()), tuple(problem.dm_names()), perdm, group,
        ranking, scores, 'normalized_score', preferences=preferences,
        provenance=provenance, timings=timings)

"""Rank-reversal and weight perturbation analysis

Two checks on how stable a ranking is:

  * leave_one_out removes alternatives and re-ranks the survivors.  In the
    default 'cumulative' mode the alternatives are dropped in input order
    (scenario k lacks the first k alternatives of the problem, whatever
    their rank); 'bottom' mode drops them cumulatively from the bottom of
    the base ranking, 'single' mode drops each alternative on its own and
    'top' mode repeatedly drops the current leader.  A rank reversal is any
    scenario whose ranking differs from the base ranking restricted to the
    survivors.
  * perturb_weights scales every group weight by an independent uniform
    factor in [1 - pct, 1 + pct], renormalizes and re-ranks, using a seeded
    generator so that runs are repeatable.

The COPRAS ranker keeps the group weights of the full problem fixed for
every scenario; the MD ranker re-derives them for each sub-problem.  When a
decision maker judged the alternatives alike on every criterion there is no
deviation to derive weights from; uniform weights are used instead (so
identical alternatives tie in input order) and the summary lists where that
happened.
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from .base import AllColumnsConstant, BadPercentage, DataError, TooFewAlternatives
from .deviation import WeightVector
from .aggregation import collapse_dms
from . import copras, pipeline

log = logging.getLogger('robustness')

DEFAULT_PCT = 0.10
DEFAULT_TRIALS = 200
DEFAULT_SEED = 0

RANKERS = ('md', 'copras')
LOO_MODES = ('cumulative', 'bottom', 'single', 'top')

FULL_PROBLEM = 'full problem'

@dataclass(frozen=True)
class Scenario:
    description: str
    removed: tuple
    ranking: tuple
    reversal: bool
    factors: tuple = ()

@dataclass
class RobustnessReport:
    """Scenario rankings and stability verdicts for one analysis"""
    analysis: str
    ranker: str
    base_ranking: tuple
    scenarios: list
    rank_reversal_found: bool
    summary: dict = field(default_factory=dict)

def _check_ranker(ranker):
    if ranker not in RANKERS:
        raise DataError(f'unknown ranker {ranker!r}')

def restricted(ranking, survivors):
    """The base ranking with only the survivors, order kept"""
    survivors = set(survivors)
    return tuple(name for name in ranking if name in survivors)

def group_weights_or_uniform(problem, options, fallbacks, label):
    """Derived group weights, or uniform weights when nothing deviates

    label is appended to fallbacks whenever the uniform vector is used.
    """
    try:
        return pipeline.derive_weights(problem, options)[1]
    except AllColumnsConstant as e:
        log.warning(f'{e}; using uniform weights for {label}')
        fallbacks.append(label)
        return WeightVector.normalized(np.ones(len(problem.criteria)))

def _rank(problem, ranker, options, weights, fallbacks, label):
    if ranker == 'copras':
        return copras.copras_rank(problem, weights, options).ranking
    group = group_weights_or_uniform(problem, options, fallbacks, label)
    collective = collapse_dms(problem.matrices, problem.influence, options.collapse)
    order = pipeline.rank_with_weights(collective, group, options)[1]
    return tuple(problem.alternatives[i] for i in order)

def _scenarios(problem, base, mode):
    m = len(problem.alternatives)
    if mode == 'cumulative':
        return [(tuple(range(k)), tuple(range(k, m))) for k in range(1, m)]
    if mode == 'bottom':
        worst_first = [problem.alternatives.index(name) for name in reversed(base)]
        return [(tuple(worst_first[:k]), tuple(sorted(worst_first[k:]))) for k in range(1, m)]
    return [((r,), tuple(i for i in range(m) if i != r)) for r in range(m)]

def reference_pattern_matches(scenarios, published):
    """Whether every published scenario was run and ranked the same way

    published is a list of {'removed': [...], 'ranking': [...]} entries.
    """
    rankings = {frozenset(s.removed): list(s.ranking) for s in scenarios}
    for entry in published:
        ranking = rankings.get(frozenset(entry['removed']))
        if ranking != list(entry['ranking']):
            return False
    return True

def leave_one_out(problem, ranker = 'copras', options = None, mode = 'cumulative', weights = None):
    """Remove alternatives and look for rank reversals among the survivors"""
    _check_ranker(ranker)
    if mode not in LOO_MODES:
        raise DataError(f'unknown leave-one-out mode {mode!r}')
    m = len(problem.alternatives)
    if m < 3:
        raise TooFewAlternatives(f'leave-one-out needs at least 3 alternatives, got {m}')
    options = options or pipeline.PipelineOptions()
    fallbacks = []
    if ranker == 'copras' and weights is None:
        weights = group_weights_or_uniform(problem, options, fallbacks, FULL_PROBLEM)
    base = _rank(problem, ranker, options, weights, fallbacks, FULL_PROBLEM)
    log.info(f'Leave-one-out ({mode}, {ranker}) on base ranking {" > ".join(base)}')

    scenarios = []

    def scenario(removed, survivors):
        names = tuple(problem.alternatives[i] for i in survivors)
        removed_names = tuple(problem.alternatives[i] for i in removed)
        description = f'without {", ".join(removed_names)}'
        if len(survivors) == 1:
            ranking = names
        else:
            ranking = _rank(problem.select_alternatives(survivors), ranker, options, weights,
                fallbacks, description)
        reversal = ranking != restricted(base, names)
        if reversal:
            log.warning(f'Rank reversal after removing {", ".join(removed_names)}: {" > ".join(ranking)}')
        scenarios.append(Scenario(description, removed_names, ranking, reversal))
        return ranking

    if mode == 'top':
        # each step drops the leader of the previous step's ranking
        removed, survivors, ranking = [], list(range(m)), base
        for _ in range(m - 1):
            top = problem.alternatives.index(ranking[0])
            removed.append(top)
            survivors.remove(top)
            ranking = scenario(tuple(removed), tuple(survivors))
    else:
        for removed, survivors in _scenarios(problem, base, mode):
            scenario(removed, survivors)

    found = any(s.reversal for s in scenarios)
    summary = {
        'mode': mode,
        'scenarios': len(scenarios),
        'reversals': sum(s.reversal for s in scenarios),
        'top_kept': sum(s.ranking[0] == restricted(base, s.ranking)[0] for s in scenarios),
        'uniform_weights': fallbacks,
    }
    published = (problem.reference or {}).get('leave_one_out')
    if published:
        summary['reference_matches'] = reference_pattern_matches(scenarios, published)
        if not summary['reference_matches']:
            log.warning('Leave-one-out rankings differ from the published pattern')
    return RobustnessReport('leave_one_out', ranker, base, scenarios, found, summary)

def displaced_positions(base, ranking):
    """Number of alternatives whose position differs between two rankings"""
    return sum(a != b for a, b in zip(base, ranking))

def perturb_weights(problem, pct = DEFAULT_PCT, trials = DEFAULT_TRIALS, seed = DEFAULT_SEED,
        ranker = 'md', options = None, weights = None):
    """Randomly scale the group weights and measure how often the ranking survives

    weights replaces the derived group weights as the unperturbed baseline.
    """
    _check_ranker(ranker)
    if not 0 < pct < 1:
        raise BadPercentage(f'perturbation percentage {pct} must lie in (0, 1)')
    if trials < 1:
        raise DataError(f'trial count {trials} must be positive')
    options = options or pipeline.PipelineOptions()
    fallbacks = []
    group = weights
    if group is None:
        group = group_weights_or_uniform(problem, options, fallbacks, FULL_PROBLEM)
    collective = collapse_dms(problem.matrices, problem.influence, options.collapse)

    def rank(w):
        if ranker == 'copras':
            return copras.copras_rank(problem, w, options).ranking
        order = pipeline.rank_with_weights(collective, w, options)[1]
        return tuple(problem.alternatives[i] for i in order)

    base = rank(group)
    rng = np.random.default_rng(seed)
    base_weights = np.array(group.weights)
    scenarios = []
    for trial in range(trials):
        factors = rng.uniform(1.0 - pct, 1.0 + pct, size=len(base_weights))
        ranking = rank(WeightVector.normalized(base_weights * factors))
        scenarios.append(Scenario(f'trial {trial}', (), ranking, ranking != base,
            tuple(float(f) for f in factors)))

    top = sum(s.ranking[0] == base[0] for s in scenarios) / trials
    order = sum(not s.reversal for s in scenarios) / trials
    displaced = float(np.mean([displaced_positions(base, s.ranking) for s in scenarios]))
    log.info(f'Perturbation +/-{pct:.0%} over {trials} trials: top kept {top:.1%}, order kept {order:.1%}')
    summary = {
        'pct': pct,
        'trials': trials,
        'seed': seed,
        'top_preserved': top,
        'order_preserved': order,
        'mean_displaced': displaced,
        'uniform_weights': fallbacks,
    }
    return RobustnessReport('perturbation', ranker, base, scenarios, order < 1.0, summary)

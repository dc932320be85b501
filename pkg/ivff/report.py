"""Report encoder/decoder

Machine reports are JSON documents with every float rounded to
REPORT_DECIMALS places, keys in a fixed order and no timings, so that the
same inputs always produce byte-identical output.  Human reports are plain
text tables rendered from the same report objects.
"""

import json
import logging

from .base import DataError

logger = logging.getLogger('report')

REPORT_DECIMALS = 6
REPORT_KINDS = ('ranking', 'weights', 'robustness')

def rounded(obj, decimals = REPORT_DECIMALS):
    """Copy of a JSON-able structure with every float rounded"""
    if isinstance(obj, float):
        return round(obj, decimals)
    if isinstance(obj, dict):
        return {k: rounded(v, decimals) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [rounded(v, decimals) for v in obj]
    return obj

def _ivffn(value):
    return {'membership': [value.zl, value.zu], 'nonmembership': [value.nl, value.nu]}

def _fmt(value, width = 8):
    return f'{value:>{width}.{REPORT_DECIMALS - 2}f}'

class ReportEncoder(object):
    """Build machine documents and human tables from report objects"""

    @staticmethod
    def encode_weights(criteria, dms, dm_weights, group):
        return {
            'criteria': list(criteria),
            'dm_weights': {dm: list(w.weights) for dm, w in zip(dms, dm_weights)},
            'group_weights': list(group.weights),
            'group_objective': group.objective,
        }

    @staticmethod
    def encode_ranking(report):
        """Machine document for a RankingReport"""
        logger.debug(f'Encoding {report.method} ranking of {report.problem!r}')
        doc = {
            'kind': 'ranking',
            'method': report.method,
            'problem': report.problem,
            'alternatives': list(report.alternatives),
            'dms': list(report.dms),
        }
        doc.update(ReportEncoder.encode_weights(report.criteria, report.dms,
            report.dm_weights, report.group_weights))
        if report.preferences is not None:
            doc['preferences'] = {}
            for name, value, triple in zip(report.alternatives, report.preferences.values,
                    report.preferences.scores):
                entry = _ivffn(value)
                entry.update({'score': triple.score, 'accuracy': triple.accuracy,
                    'normalized': triple.normalized})
                doc['preferences'][name] = entry
        if report.copras is not None:
            indices = report.copras
            doc['copras'] = {}
            for i, name in enumerate(report.alternatives):
                doc['copras'][name] = {
                    'benefit': _ivffn(indices.benefit[i]),
                    'cost': _ivffn(indices.cost[i]) if indices.cost else None,
                    'relative': indices.relative[i],
                    'utility': indices.utility[i],
                }
        doc['score_label'] = report.score_label
        doc['scores'] = dict(zip(report.alternatives, report.scores))
        doc['ranking'] = list(report.ranking)
        doc['provenance'] = report.provenance
        return doc

    @staticmethod
    def encode_weights_report(problem, dm_weights, group, options):
        doc = {'kind': 'weights', 'problem': problem.name, 'dms': problem.dm_names()}
        doc.update(ReportEncoder.encode_weights(problem.criterion_names(), problem.dm_names(),
            dm_weights, group))
        doc['provenance'] = {'options': options.as_dict(), 'repairs': list(problem.repairs)}
        return doc

    @staticmethod
    def encode_robustness(reports):
        """Machine document for one or more RobustnessReports"""
        analyses = []
        for report in reports:
            analyses.append({
                'analysis': report.analysis,
                'ranker': report.ranker,
                'base_ranking': list(report.base_ranking),
                'rank_reversal_found': report.rank_reversal_found,
                'summary': report.summary,
                'scenarios': [{
                    'description': s.description,
                    'removed': list(s.removed),
                    'ranking': list(s.ranking),
                    'reversal': s.reversal,
                    'factors': list(s.factors),
                } for s in report.scenarios],
            })
        return {'kind': 'robustness', 'analyses': analyses}

    @staticmethod
    def dumps(doc):
        """Serialize a machine document"""
        return json.dumps(rounded(doc), indent=2)

    @staticmethod
    def render_weights(criteria, dms, dm_weights, group):
        width = max([9] + [len(c) + 1 for c in criteria])
        lines = ['Criterion weights', ' ' * 10 + ''.join(f'{c:>{width}}' for c in criteria)]
        for dm, weights in zip(dms, dm_weights):
            lines.append(f'{dm:<10}' + ''.join(_fmt(w, width) for w in weights))
        lines.append(f'{"group":<10}' + ''.join(_fmt(w, width) for w in group))
        if group.objective is not None:
            lines.append(f'Group LP objective: {group.objective:.6f}')
        return lines

    @staticmethod
    def render_ranking(report):
        """Human-readable table for a RankingReport"""
        title = 'MD' if report.method == 'md' else 'COPRAS'
        lines = [f'{title} ranking for {report.problem or "problem"}', '']
        if report.dm_weights or report.group_weights is not None:
            lines += ReportEncoder.render_weights(report.criteria, report.dms,
                report.dm_weights, report.group_weights)
            lines.append('')
        scores = dict(zip(report.alternatives, report.scores))
        label = report.score_label.replace('_', ' ')
        lines.append(f'{"rank":<6}{"alternative":<14}{label:>18}')
        for rank, name in enumerate(report.ranking, 1):
            lines.append(f'{rank:<6}{name:<14}{_fmt(scores[name], 18)}')
        md_ranking = report.provenance.get('md_ranking')
        if md_ranking is not None:
            verdict = 'matches' if report.provenance['matches_md'] else 'differs'
            lines.append('')
            lines.append(f'MD ranking: {" > ".join(md_ranking)} ({verdict})')
        repairs = report.provenance.get('repairs')
        if repairs:
            lines.append('')
            lines.append('Label repairs: ' + '; '.join(repairs))
        check = report.provenance.get('reference_check')
        if check is not None:
            verdict = 'within' if check['within_tolerance'] else 'outside'
            lines.append(f'Published reference: {verdict} tolerance')
        if report.timings:
            lines.append('Timings: ' + ', '.join(f'{k} {v * 1000:.1f} ms'
                for k, v in report.timings.items()))
        return '\n'.join(lines)

    @staticmethod
    def render_robustness(reports):
        """Human-readable summary for RobustnessReports"""
        lines = []
        for report in reports:
            title = report.analysis.replace('_', '-')
            lines.append(f'{title} analysis ({report.ranker}); base ranking: '
                f'{" > ".join(report.base_ranking)}')
            if report.analysis == 'leave_one_out':
                for s in report.scenarios:
                    mark = ' REVERSAL' if s.reversal else ''
                    lines.append(f'  {s.description:<28}{" > ".join(s.ranking)}{mark}')
                if 'reference_matches' in report.summary:
                    verdict = 'matches' if report.summary['reference_matches'] else 'differs'
                    lines.append(f'  published pattern: {verdict}')
            else:
                summary = report.summary
                lines.append(f'  +/-{summary["pct"]:.0%} over {summary["trials"]} trials '
                    f'(seed {summary["seed"]})')
                lines.append(f'  top choice preserved: {summary["top_preserved"]:.1%}')
                lines.append(f'  full order preserved: {summary["order_preserved"]:.1%}')
                lines.append(f'  mean displaced positions: {summary["mean_displaced"]:.3f}')
            if report.summary.get('uniform_weights'):
                lines.append('  uniform weights: ' + '; '.join(report.summary['uniform_weights']))
            verdict = 'found' if report.rank_reversal_found else 'none'
            lines.append(f'  rank reversal: {verdict}')
            lines.append('')
        return '\n'.join(lines).rstrip()

class ReportDecoder(object):
    """Re-read machine reports"""

    @staticmethod
    def decode(text, kind = None):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as e:
            raise DataError(f'report is not valid JSON (line {e.lineno}): {e.msg}') from e
        if not isinstance(doc, dict) or doc.get('kind') not in REPORT_KINDS:
            raise DataError('not a report document')
        if kind is not None and doc['kind'] != kind:
            raise DataError(f'expected a {kind} report, got {doc["kind"]}')
        logger.debug(f'Decoded {doc["kind"]} report')
        return doc

    @staticmethod
    def ranking(text):
        """(alternative, score) pairs of a ranking report, best first"""
        doc = ReportDecoder.decode(text, 'ranking')
        return [(name, doc['scores'][name]) for name in doc['ranking']]

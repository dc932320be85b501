#!/usr/bin/env python3

"""IVFF maximizing-deviation decision tool"""

import argparse
import logging
import sys

from ivff.base import DataError, IvffError
from ivff.pipeline import PipelineOptions, derive_weights, run
from ivff.copras import copras_rank
from ivff.problem import parse_problem
from ivff.report import ReportEncoder
from ivff.robustness import (DEFAULT_PCT, DEFAULT_SEED, DEFAULT_TRIALS, LOO_MODES, RANKERS,
    leave_one_out, perturb_weights)
from case_study import CASE_STUDY_NAME, case_study_document

RET_SUCCESS = 0
RET_USAGE = 1
RET_DATA_ERROR = 2
RET_INTERNAL_ERROR = 3

logging.basicConfig(format='%(asctime)s [%(levelname)s] %(message)s')
log = logging.getLogger()

class UsageError(Exception):
    """Exception used to signal a command-line usage error"""
    pass

class ArgumentParser(argparse.ArgumentParser):
    """Parser that raises on usage errors instead of exiting with status 2"""

    def error(self, message):
        raise UsageError(message)

def load_problem(source, strict_labels = False):
    """Parse a problem file; the name 'case_study' selects the bundled case study"""
    strict = True if strict_labels else None
    if source == CASE_STUDY_NAME:
        return parse_problem(case_study_document(), strict)
    return parse_problem(source, strict)

def cmd_validate(problem, options, args):
    return None

def cmd_weights(problem, options, args):
    dm_weights, group = derive_weights(problem, options)
    if args.format == 'machine':
        return ReportEncoder.dumps(ReportEncoder.encode_weights_report(problem, dm_weights, group, options))
    return '\n'.join(ReportEncoder.render_weights(problem.criterion_names(), problem.dm_names(),
        dm_weights, group))

def _ranking_output(report, args):
    if args.format == 'machine':
        return ReportEncoder.dumps(ReportEncoder.encode_ranking(report))
    return ReportEncoder.render_ranking(report)

def cmd_rank(problem, options, args):
    return _ranking_output(run(problem, options), args)

def cmd_copras(problem, options, args):
    md = run(problem, options)
    report = copras_rank(problem, md.group_weights, options, md.ranking)
    report.dm_weights = md.dm_weights
    return _ranking_output(report, args)

def cmd_robustness(problem, options, args):
    reports = [
        leave_one_out(problem, args.ranker, options, args.loo_mode),
        perturb_weights(problem, args.pct, args.trials, args.seed, args.ranker, options),
    ]
    if args.format == 'machine':
        return ReportEncoder.dumps(ReportEncoder.encode_robustness(reports))
    return ReportEncoder.render_robustness(reports)

COMMANDS = {
    'validate': (cmd_validate, 'Parse and validate a problem file'),
    'weights': (cmd_weights, 'Print per-decision-maker and group criterion weights'),
    'rank': (cmd_rank, 'Rank alternatives with the maximizing-deviation method'),
    'copras': (cmd_copras, 'Rank alternatives with IVFF-COPRAS (needs benefit/cost kinds)'),
    'robustness': (cmd_robustness, 'Leave-one-out and weight perturbation analysis'),
}

def build_parser():
    parser = ArgumentParser(prog='ivff_md')
    parser.add_argument('-d', '--debug', action='store_true', help='Set debug logging')
    parser.add_argument('-v', '--verbose', action='store_true', help='Set info logging')
    subparsers = parser.add_subparsers(dest='command', required=True, parser_class=ArgumentParser)
    for name, (_, description) in COMMANDS.items():
        sub = subparsers.add_parser(name, help=description)
        sub.add_argument('file', help=f'Problem file, or {CASE_STUDY_NAME} for the bundled case study')
        sub.add_argument('--strict-labels', action='store_true', help='Reject unknown labels instead of repairing them')
        sub.add_argument('--format', choices=['human', 'machine'], default='human', help='Output format')
        sub.add_argument('--dm-weights', choices=['eq13', 'cubic', 'lp'], default='eq13', help='Per-decision-maker weight model')
        sub.add_argument('--collapse', choices=['wa', 'wg'], default='wa', help='Operator across decision makers')
        sub.add_argument('--prefer', choices=['wa', 'wg'], default='wg', help='Operator across criteria')
        sub.add_argument('--score', choices=['normalized', 'raw'], default='normalized', help='COPRAS relative degree score')
        sub.add_argument('--ranker', choices=list(RANKERS), default='copras', help='Ranker for robustness analysis')
        sub.add_argument('--loo-mode', choices=list(LOO_MODES), default='cumulative', help='Leave-one-out removal mode; cumulative removes in input order, bottom from the bottom of the base ranking')
        sub.add_argument('--pct', type=float, default=DEFAULT_PCT, help='Weight perturbation fraction')
        sub.add_argument('--trials', type=int, default=DEFAULT_TRIALS, help='Perturbation trials')
        sub.add_argument('--seed', type=int, default=DEFAULT_SEED, help='Perturbation random seed')
    return parser

def cli(argv = None):
    """Run the command line and return the exit status"""
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(f'usage error: {e}', file=sys.stderr)
        return RET_USAGE
    if args.debug:
        log.setLevel(logging.DEBUG)
    elif args.verbose:
        log.setLevel(logging.INFO)
    else:
        log.setLevel(logging.WARNING)
    log.debug(args)
    handler, _ = COMMANDS[args.command]
    try:
        options = PipelineOptions.from_dict(vars(args))
        problem = load_problem(args.file, args.strict_labels)
        output = handler(problem, options, args)
    except (DataError, OSError) as e:
        print(f'error: {type(e).__name__}: {e}', file=sys.stderr)
        return RET_DATA_ERROR
    except IvffError as e:
        print(f'internal error: {type(e).__name__}: {e}', file=sys.stderr)
        return RET_INTERNAL_ERROR
    except Exception as e:
        log.error(f'Exception during {args.command}: {e}')
        return RET_INTERNAL_ERROR
    if output:
        print(output)
    return RET_SUCCESS

def run_cli():
    exit(cli())

if __name__ == '__main__':
    run_cli()

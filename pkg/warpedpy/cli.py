# -*- coding: utf-8 -*-
# -----------------------------------------------------------------------------
# Copyright 2026 by WarpedPy Authors, see AUTHORS for more details.
#
# Distributed under the terms of the BSD 3-Clause license.
#
# The full license is in the file LICENCE, distributed with this software.
# -----------------------------------------------------------------------------
"""Command line interface.

Exit codes: 0 when every check passes, 1 when a check fails, 2 on usage or
configuration errors.

"""
import argparse
import logging
import sys

from .config import VerificationConfig
from .errors import ConfigurationError
from .report import to_json, to_text
from .runner import WorkerCrashedError, run_scenarios
from .scenarios import get_scenario, list_scenarios
from .version import __version__

logger = logging.getLogger(__name__)

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def build_parser():
    parser = argparse.ArgumentParser(
        prog='warpedpy-verify',
        description='Numerically verify the identities of warped products '
                    'and conformal warped product submersions.')
    parser.add_argument('--version', action='version', version=__version__)
    sub = parser.add_subparsers(dest='command')
    sub.required = True

    listing = sub.add_parser('list', help='list the built-in scenarios')
    listing.add_argument('pattern', nargs='?',
                         help='keep the scenarios whose id starts with it or '
                              'which run the check suite of that name')

    verify = sub.add_parser('verify', help='run the checks of scenarios')
    verify.add_argument('scenario', nargs='?',
                        help='id of the scenario to verify')
    verify.add_argument('--all', action='store_true',
                        help='verify every scenario of the catalog')
    verify.add_argument('--samples', type=int,
                        help='number of sampled points per scenario')
    verify.add_argument('--seed', type=int, help='sampling seed')
    verify.add_argument('--fd-step', type=float,
                        help='finite difference step')
    verify.add_argument('--scheme',
                        choices=('central2', 'central4', 'richardson'),
                        help='finite difference scheme')
    verify.add_argument('--tolerance-scale', type=float,
                        help='factor applied to every tolerance')
    verify.add_argument('--report', choices=('json', 'text'),
                        default='json', help='report format')
    verify.add_argument('--out', help='write the report to this file')
    verify.add_argument('--jobs', type=int, default=1,
                        help='number of worker processes')
    verify.add_argument('--config', help='JSON configuration file')
    verify.add_argument('--save-config',
                        help='save the effective configuration to this file')
    verify.add_argument('-v', '--verbose', action='count', default=0,
                        help='-v for progress, -vv for diagnostics')
    return parser


def main(argv=None):
    """Entry point, returns the exit code.

    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code

    if args.command == 'list':
        for scenario in list_scenarios(args.pattern):
            print(f'{scenario.id:<24} {scenario.description}')
        return EXIT_PASS

    _configure_logging(args.verbose)
    if args.all == bool(args.scenario):
        parser.print_usage(sys.stderr)
        print('warpedpy-verify verify: give either a scenario or --all',
              file=sys.stderr)
        return EXIT_USAGE

    try:
        config = VerificationConfig.load(
            args.config, samples=args.samples, seed=args.seed,
            fd_step=args.fd_step, scheme=args.scheme,
            tolerance_scale=args.tolerance_scale)
        if args.jobs < 1:
            raise ConfigurationError('--jobs must be positive')
        if args.save_config:
            config.save(args.save_config)
        ids = ([s.id for s in list_scenarios()] if args.all else
               [get_scenario(args.scenario).id])
        reports = run_scenarios(ids, config, args.jobs)
    except ConfigurationError as exc:
        print(f'warpedpy-verify: error: {exc}', file=sys.stderr)
        return EXIT_USAGE
    except WorkerCrashedError as exc:
        logger.error('Worker crashed:\n%s', exc)
        print('warpedpy-verify: error: a worker process crashed',
              file=sys.stderr)
        return EXIT_USAGE

    output = to_json(reports) if args.report == 'json' else to_text(reports)
    if args.out:
        with open(args.out, 'w') as f:
            f.write(output + '\n')
    else:
        sys.stdout.write(output + '\n')

    return EXIT_PASS if all(r.passed for r in reports) else EXIT_FAIL


# --- Private API -------------------------------------------------------------

def _configure_logging(verbosity):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity,
                                                      logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')

import argparse
import json
import logging
import sys
from dataclasses import replace
from typing import Optional, Sequence

from .config import ConfigError, ToolkitConfig, load_toolkit_config, log_level_from_env
from .control import (aut_process, bench_process, certify_process, gi_process, reduce_process, si_process,
                      validate_seq_process)
from .storage import dump_model
from .utils import get_engine_settings

logger = logging.getLogger(__name__)

EXIT_ISO = 0
EXIT_NONISO = 1
EXIT_ERROR = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='restricted-iso',
                                     description='String and graph isomorphism over restricted permutation groups')
    parser.add_argument('--log-level', default=None, help='DEBUG, INFO, WARNING (default from RESTRICTED_ISO_LOG_LEVEL)')
    parser.add_argument('--env-file', default=None, help='.env file with RESTRICTED_ISO_* overrides')
    parser.add_argument('--brute-cap', type=int, default=None)
    parser.add_argument('--d-cap', type=int, default=None)
    parser.add_argument('--c1', type=float, default=None)
    parser.add_argument('--c2', type=float, default=None)
    parser.add_argument('--seed', type=int, default=None)
    sub = parser.add_subparsers(dest='command', required=True)

    gi = sub.add_parser('gi', help='isomorphism of two graphs, hypergraphs or structures')
    gi.add_argument('first')
    gi.add_argument('second')
    gi.add_argument('--json', action='store_true')

    si = sub.add_parser('si', help='string isomorphism instance')
    si.add_argument('instance')
    si.add_argument('--json', action='store_true')

    aut = sub.add_parser('aut', help='automorphism group of a graph, hypergraph or structure')
    aut.add_argument('input')
    aut.add_argument('--json', action='store_true')

    validate = sub.add_parser('validate-seq', help='check the almost d-ary condition')
    validate.add_argument('group')
    validate.add_argument('sequence')
    validate.add_argument('--json', action='store_true')

    reduce = sub.add_parser('reduce', help='emit the augmented instance of a transitive string instance')
    reduce.add_argument('instance')
    reduce.add_argument('-d', type=int, default=None)

    certify = sub.add_parser('certify', help='local certificate of one test set')
    certify.add_argument('input')
    certify.add_argument('--json', action='store_true')

    bench = sub.add_parser('bench', help='CSV of sizes, times and recursion statistics')
    bench.add_argument('directory', nargs='?', default=None)
    bench.add_argument('--count', type=int, default=50)
    bench.add_argument('--out', default=None)
    return parser


def apply_overrides(config: ToolkitConfig, args: argparse.Namespace) -> ToolkitConfig:
    solver, reduction = config.solver, config.reduction
    if args.brute_cap is not None:
        if args.brute_cap < 1:
            raise ConfigError('--brute-cap must be positive')
        solver = replace(solver, brute_cap=args.brute_cap)
    if args.d_cap is not None:
        if args.d_cap < 1:
            raise ConfigError('--d-cap must be positive')
        solver = replace(solver, d_cap=args.d_cap)
    if args.seed is not None:
        solver = replace(solver, random_seed=args.seed)
    if args.c1 is not None:
        reduction = replace(reduction, c1=args.c1)
    if args.c2 is not None:
        reduction = replace(reduction, c2=args.c2)
    return replace(config, solver=solver, reduction=reduction)


def _report_error(result: dict) -> int:
    print(json.dumps(result['error_message'], ensure_ascii=False, indent=2), file=sys.stderr)
    return EXIT_ERROR


def _iso_output(result: dict, as_json: bool) -> int:
    if result['status'] == 'failure':
        return _report_error(result)
    print('ISO' if result['iso'] else 'NONISO')
    if as_json:
        print(dump_model(result['result']))
    return EXIT_ISO if result['iso'] else EXIT_NONISO


def run(args: argparse.Namespace, config: ToolkitConfig) -> int:
    command = args.command
    if command == 'gi':
        return _iso_output(gi_process(args.first, args.second, config), args.json)
    if command == 'si':
        return _iso_output(si_process(args.instance, config), args.json)
    if command == 'aut':
        return _iso_output(aut_process(args.input, config), args.json)
    if command == 'validate-seq':
        result = validate_seq_process(args.group, args.sequence)
        if result['status'] == 'failure':
            return _report_error(result)
        if args.json:
            print(json.dumps({k: result[k] for k in ('valid', 'd', 'violations')}, indent=2))
        else:
            print(f"{'VALID' if result['valid'] else 'INVALID'} d={result['d']}")
            for row in result['violations']:
                print(f"level {row['level']} block [{row['block']}]: {row['reason']}")
        return EXIT_ISO if result['valid'] else EXIT_NONISO
    if command == 'reduce':
        result = reduce_process(args.instance, args.d, config)
        if result['status'] == 'failure':
            return _report_error(result)
        print(json.dumps(result['augmented'], indent=2))
        return EXIT_ISO
    if command == 'certify':
        result = certify_process(args.input, config)
        if result['status'] == 'failure':
            return _report_error(result)
        print(result['certificate'].kind)
        if args.json:
            print(dump_model(result['certificate']))
        return EXIT_ISO
    if command == 'bench':
        seed = config.solver.random_seed
        result = bench_process(args.directory, seed, args.count, args.out, config)
        if result['status'] == 'failure':
            return _report_error(result)
        if result['csv'] is not None:
            sys.stdout.write(result['csv'])
        return EXIT_ISO
    raise ValueError(f'unknown command {command}')


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = (args.log_level or log_level_from_env()).upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), stream=sys.stderr,
                        format='%(asctime)s %(levelname)s %(name)s: %(message)s')
    try:
        config = apply_overrides(load_toolkit_config(args.env_file), args)
    except ConfigError as e:
        print(f'configuration error: {e}', file=sys.stderr)
        return EXIT_ERROR
    get_engine_settings().apply(config.solver)
    return run(args, config)


if __name__ == '__main__':
    sys.exit(main())

"""
exactcat: exact categories, injective resolutions and Schanuel certificates.
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.
---------------------------------------------------------------------------------
Modified from RT-DETR (https://github.com/lyuwenyu/RT-DETR)
Copyright (c) 2023 lyuwenyu. All Rights Reserved.
"""

import os
import sys
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import argparse

from engine.misc import dist_utils
from engine.misc.errors import ExactCatError
from engine.core import YAMLConfig, yaml_utils
from engine.solver import TASKS, exit_code


DEFAULT_CONFIG = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'configs', 'runtime.yml')


def main(args, ) -> int:
    """main
    """
    dist_utils.setup_print(args.verbose, args.print_method)

    try:
        update_dict = yaml_utils.parse_cli(args.update)
        update_dict.update({k: v for k, v in args.__dict__.items() \
            if k not in ['update', 'config', 'command', 'params'] and v is not None})
        params = getattr(args, 'params', None)
        if params is not None:
            update_dict['params'] = yaml_utils.parse_cli(params)

        cfg = YAMLConfig(args.config, **update_dict)
        cfg.task = args.command
        print('cfg: ', cfg.to_dict())

        solver = TASKS[args.command](cfg)
        return solver.run()

    except ExactCatError as e:
        print(f'error: {e}', file=sys.stderr, force=True)
        return exit_code(e)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-c', '--config', type=str, default=DEFAULT_CONFIG)
    common.add_argument('-u', '--update', nargs='+', help='update yaml config, e.g. budget=8')
    common.add_argument('--seed', type=int, help='seed of every sampled stream')
    common.add_argument('--out', type=str, help='output file, stdout when omitted')
    common.add_argument('--verbose', action='store_true', default=False)
    common.add_argument('--print-method', type=str, default='builtin', help='builtin or rich')

    model = argparse.ArgumentParser(add_help=False)
    model.add_argument('--model', dest='model_name', type=str, help='linrep, cyclicmod or splitex:<inner>')
    model.add_argument('--params', nargs='+', help='model parameters, e.g. p=2 k=2')

    parser = argparse.ArgumentParser(prog='exactcat')
    commands = parser.add_subparsers(dest='command', required=True)

    p = commands.add_parser('resolve', parents=[common], help='injective resolution ladder')
    p.add_argument('--object', type=str, required=True)
    p.add_argument('--depth', type=int)

    p = commands.add_parser('dim', parents=[common], help='injective dimension')
    p.add_argument('--object', type=str, required=True)
    p.add_argument('--budget', type=int)

    p = commands.add_parser('schanuel', parents=[common], help='Schanuel certificate of two presentations')
    p.add_argument('--pair1', type=str, required=True)
    p.add_argument('--pair2', type=str, required=True)

    p = commands.add_parser('check-cert', parents=[common], help='re-verify a certificate')
    p.add_argument('--cert', type=str, required=True)

    p = commands.add_parser('axioms', parents=[common, model], help='sampled check of the exact axioms')
    p.add_argument('--samples', type=int)
    p.add_argument('--mutate', dest='mutation', type=str, help='registered mutation id')

    p = commands.add_parser('global-dim', parents=[common, model], help='sampled global dimension')
    p.add_argument('--samples', type=int)
    p.add_argument('--budget', type=int)

    return parser


if __name__ == '__main__':
    sys.exit(main(build_parser().parse_args()))

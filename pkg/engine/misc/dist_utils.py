"""
Process setup: print routing and seed handling.
Copyright(c) 2023 lyuwenyu. All Rights Reserved.
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.
"""

import os
import numpy as np

from typing import List, Optional

from .errors import SchemaError


SEED_ENV = 'EXACTCAT_SEED'


def setup_print(is_main, method='builtin'):
    """Only forced prints (`print(..., force=True)`) get through unless is_main.
    """
    import builtins as __builtin__

    if method == 'builtin':
        builtin_print = getattr(__builtin__.print, '__wrapped_print__', __builtin__.print)

    elif method == 'rich':
        import rich
        builtin_print = rich.print

    else:
        raise AttributeError(f'unknown print method {method}')

    def print(*args, **kwargs):
        force = kwargs.pop('force', False)
        if is_main or force:
            builtin_print(*args, **kwargs)

    print.__wrapped_print__ = builtin_print
    __builtin__.print = print


def resolve_seed(seed: Optional[int]=None) -> int:
    """Explicit seed first, then the EXACTCAT_SEED environment variable.

    Sampling never falls back to wall-clock entropy.
    """
    if seed is not None:
        return int(seed)
    value = os.getenv(SEED_ENV)
    if value is None or value.strip() == '':
        raise SchemaError(f'a seed is required (--seed or {SEED_ENV})')
    try:
        return int(value)
    except ValueError:
        raise SchemaError(f'{SEED_ENV}={value!r} is not an integer')


def setup_seed(seed: int, streams: int=1) -> List[np.random.Generator]:
    """Independent generators spawned from one SeedSequence."""
    children = np.random.SeedSequence(int(seed)).spawn(streams)
    return [np.random.default_rng(s) for s in children]

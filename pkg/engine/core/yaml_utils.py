"""
YAML loading, `__include__` chaining and dotted command-line overrides.
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.
"""

import copy
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml

from .workspace import GLOBAL_CONFIG
from ..misc.errors import SchemaError

__all__ = [
    'load_config',
    'merge_config',
    'merge_dict',
    'parse_cli',
]


INCLUDE_KEY = '__include__'


def _read_yaml(path: Path) -> Dict[str, Any]:
    if path.suffix not in ('.yml', '.yaml'):
        raise SchemaError(f'only yaml configs are supported, got {path}')
    try:
        data = yaml.safe_load(path.read_text())
    except (OSError, yaml.YAMLError) as e:
        raise SchemaError(f'cannot read {path} ({e})')
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise SchemaError(f'{path} must hold a mapping, got {type(data).__name__}')
    return data


def load_config(file_path, cfg: Optional[Dict]=None, _seen: tuple=()) -> Dict[str, Any]:
    """Load a config; files named under `__include__` are merged first, in order,
    relative to the including file.
    """
    path = Path(file_path).expanduser().resolve()
    if path in _seen:
        raise SchemaError(f'include cycle through {path}')

    cfg = {} if cfg is None else cfg
    file_cfg = _read_yaml(path)

    includes = file_cfg.pop(INCLUDE_KEY, [])
    if isinstance(includes, str):
        includes = [includes]
    for name in includes:
        merge_dict(cfg, load_config(path.parent / Path(name).expanduser(), _seen=_seen + (path, )))

    return merge_dict(cfg, file_cfg)


def merge_dict(dct: Dict, another_dct: Dict, inplace: bool=True) -> Dict:
    """Recursively merge `another_dct` into `dct`; the latter wins on scalars."""
    if not inplace:
        dct = copy.deepcopy(dct)
    for k, v in another_dct.items():
        if isinstance(dct.get(k), dict) and isinstance(v, dict):
            merge_dict(dct[k], v)
        else:
            dct[k] = v
    return dct


def parse_cli(nargs: Optional[List[str]]) -> Dict[str, Any]:
    """`LinRep.n=2 budget=10` -> `{'LinRep': {'n': 2}, 'budget': 10}`; values are YAML scalars."""
    cfg: Dict[str, Any] = {}
    for s in nargs or []:
        key, sep, value = s.strip().partition('=')
        if not sep or not key:
            raise SchemaError(f'override {s!r} is not of the form key=value')
        try:
            parsed = yaml.safe_load(value)
        except yaml.YAMLError as e:
            raise SchemaError(f'override {s!r} has an unreadable value ({e})')
        for part in reversed(key.split('.')):
            parsed = {part: parsed}
        merge_dict(cfg, parsed)
    return cfg


def merge_config(cfg: Dict, another_cfg: Dict=GLOBAL_CONFIG, inplace: bool=False, overwrite: bool=False) -> Dict:
    """Fill `cfg` with the registered defaults in `another_cfg`.

        cfg = merge_config(load_config('configs/models/splitex_cyclicmod.yml'))
        model = create(cfg['model'], cfg)
    """
    def _merge(dct, another):
        for k, v in another.items():
            if k not in dct:
                dct[k] = v
            elif isinstance(dct[k], dict) and isinstance(v, dict):
                _merge(dct[k], v)
            elif overwrite:
                dct[k] = v

    if not inplace:
        cfg = copy.deepcopy(cfg)
    _merge(cfg, another_cfg)
    return cfg

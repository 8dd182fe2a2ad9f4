"""
Registry of models and mutations, and construction from config dicts.
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.
"""

import copy
import inspect
import importlib
from collections import defaultdict
from typing import Any, Dict, Optional

from ..misc.errors import SchemaError


GLOBAL_CONFIG = defaultdict(dict)


def register(dct: Dict[str, Any]=GLOBAL_CONFIG, name: Optional[str]=None, force: bool=False):
    """Record a class's constructor schema in `dct` under `name` (the class name by default).

    Re-registering a name fails unless `force` is set.
    """
    def decorator(cls: type) -> type:
        if not inspect.isclass(cls):
            raise ValueError(f'Do not support {type(cls)} register')
        register_name = cls.__name__ if name is None else name
        if not force:
            assert register_name not in dct, f'{register_name} has been already registered'
        dct[register_name] = extract_schema(cls)
        return cls

    return decorator


def extract_schema(module: type) -> Dict[str, Any]:
    """Constructor arguments of `module` with their defaults, plus bookkeeping keys."""
    argspec = inspect.getfullargspec(module.__init__)
    arg_names = [arg for arg in argspec.args if arg != 'self']
    num_defaults = len(argspec.defaults) if argspec.defaults is not None else 0
    num_requires = len(arg_names) - num_defaults

    schema = dict()
    schema['_name'] = module.__name__
    schema['_pymodule'] = importlib.import_module(module.__module__)
    schema['_inject'] = getattr(module, '__inject__', [])
    schema['_kwargs'] = {}
    for i, name in enumerate(arg_names):
        value = argspec.defaults[i - num_requires] if i >= num_requires else None
        schema[name] = value
        schema['_kwargs'][name] = value

    return schema


def lookup(name: str, global_cfg=GLOBAL_CONFIG) -> type:
    """The class registered under `name`."""
    if name not in global_cfg or not isinstance(global_cfg[name], dict) or '_name' not in global_cfg[name]:
        raise SchemaError(f'{name!r} is not registered')
    schema = global_cfg[name]
    return getattr(schema['_pymodule'], schema['_name'])


def create(type_or_name, global_cfg=GLOBAL_CONFIG, **kwargs):
    """Instantiate a registered class.

    `type_or_name` is a class, a registry key, or a type-style dict such as
    {'type': 'SplitEx', 'inner': {'type': 'LinRep', 'n': 3}}. Keyword arguments
    override the config; injected arguments are built recursively.
    """
    if isinstance(type_or_name, dict):
        cfg = copy.deepcopy(type_or_name)
        if 'type' not in cfg:
            raise SchemaError('missing `type` in config')
        name = str(cfg.pop('type'))
        cfg.update(kwargs)
        return create(name, global_cfg, **cfg)

    if not isinstance(type_or_name, (type, str)):
        raise SchemaError(f'cannot create from {type(type_or_name).__name__}')

    name = type_or_name if isinstance(type_or_name, str) else type_or_name.__name__
    if name not in global_cfg:
        raise SchemaError(f'{name!r} is not registered')

    entry = global_cfg[name]
    if not isinstance(entry, dict):
        raise SchemaError(f'{name!r} is a config value, not a registered class')
    if 'type' in entry:
        return create({**entry, **kwargs}, global_cfg)

    schema = entry
    unknown = set(kwargs) - set(schema['_kwargs'])
    if unknown:
        raise SchemaError(f'unknown arguments {sorted(unknown)} for {schema["_name"]}')

    # values merged into the schema from a yaml file override the defaults
    module_kwargs = {k: schema.get(k, v) for k, v in schema['_kwargs'].items()}
    module_kwargs.update(kwargs)

    # inject
    for k in schema['_inject']:
        _k = module_kwargs.get(k)
        if _k is None:
            continue
        # already built instances pass through
        if isinstance(_k, (str, dict)):
            module_kwargs[k] = create(_k, global_cfg)

    return lookup(name, global_cfg)(**module_kwargs)

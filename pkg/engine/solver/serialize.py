"""
File formats of the command line: object specs, pairs, resolutions, certificates.
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.

Every file is a JSON document tagged with `"schema": "exactcat/1"` that names
its model by a short name (`linrep`, `cyclicmod`, `splitex:<inner>`) and
decimal-string parameters. Integers are always decimal strings.
"""

import json

from typing import Any, Dict, Optional, Tuple

from ..core import create
from ..category import ObjectHandle, IsoCertificate
from ..exact import KernelCokernelPair
from ..models import ExactModel, object_to_json, object_from_json, blocks_to_json, \
    morphism_from_blocks, morphism_to_json, morphism_from_json
from ..schanuel import Resolution
from ..misc.errors import SchemaError


__all__ = [
    'SCHEMA', 'FAMILIES', 'model_from_spec', 'model_spec', 'dumps', 'read_json',
    'object_file', 'read_object_file', 'pair_file', 'read_pair_file',
    'resolution_file', 'certificate_file', 'read_certificate_file',
]


SCHEMA = 'exactcat/1'

# short name -> (registered class, accepted parameters)
FAMILIES = {
    'linrep': ('LinRep', ('p', 'n')),
    'cyclicmod': ('CyclicMod', ('p', 'k')),
}

MAX_MODULUS = 2 ** 20
MAX_VERTICES = 8


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def _model_cfg(name: str, params: Dict[str, int]) -> Dict[str, Any]:
    if name.startswith('splitex:'):
        return {'type': 'SplitEx', 'inner': _model_cfg(name[len('splitex:'):], params)}
    if name not in FAMILIES:
        raise SchemaError(f'unknown model {name!r}')

    type_name, accepted = FAMILIES[name]
    unknown = set(params) - set(accepted)
    if unknown:
        raise SchemaError(f'model {name} takes parameters {list(accepted)}, got {sorted(unknown)}')

    p = params.get('p', 2)
    if not _is_prime(p):
        raise SchemaError(f'p={p} is not a prime')
    if p ** params.get('k', 1) > MAX_MODULUS or params.get('k', 1) < 1:
        raise SchemaError(f'k={params.get("k")} out of range for p={p}')
    if not 1 <= params.get('n', 1) <= MAX_VERTICES:
        raise SchemaError(f'n={params.get("n")} out of range [1, {MAX_VERTICES}]')
    return {'type': type_name, **params}


def model_from_spec(name: str, params: Optional[Dict[str, Any]]=None) -> ExactModel:
    """Build `linrep`, `cyclicmod` or `splitex:<inner>` from decimal-string parameters."""
    if not isinstance(name, str):
        raise SchemaError('model name must be a string')
    try:
        params = {str(k): int(v) for k, v in (params or {}).items()}
    except (TypeError, ValueError, AttributeError):
        raise SchemaError(f'parameters {params!r} must be integers')
    return create(_model_cfg(name, params))


def model_spec(model: ExactModel) -> Dict[str, Any]:
    return {
        'model': model.name,
        'params': {k: str(v) for k, v in sorted(model.params().items())},
    }


def dumps(data: Dict[str, Any]) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + '\n'


def read_json(path: str) -> Dict[str, Any]:
    try:
        with open(path) as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError, UnicodeDecodeError) as e:
        raise SchemaError(f'cannot read {path} ({e})')
    if not isinstance(data, dict) or data.get('schema') != SCHEMA:
        raise SchemaError(f'{path} is not an {SCHEMA} document')
    return data


def _header(model: ExactModel) -> Dict[str, Any]:
    return {'schema': SCHEMA, **model_spec(model)}


def _model_of(data: Dict[str, Any]) -> ExactModel:
    if 'model' not in data:
        raise SchemaError('missing `model`')
    return model_from_spec(data['model'], data.get('params'))


def _field(data: Dict[str, Any], key: str):
    if key not in data:
        raise SchemaError(f'missing `{key}`')
    return data[key]


# objects

def object_file(model: ExactModel, X: ObjectHandle) -> Dict[str, Any]:
    return {**_header(model), 'payload': object_to_json(model, X)}


def read_object_file(path: str) -> Tuple[ExactModel, ObjectHandle]:
    data = read_json(path)
    model = _model_of(data)
    return model, object_from_json(model, _field(data, 'payload'))


# kernel-cokernel pairs

def pair_file(model: ExactModel, pair: KernelCokernelPair) -> Dict[str, Any]:
    return {**_header(model), 'mono': morphism_to_json(model, pair.mono), 'epi': morphism_to_json(model, pair.epi)}


def read_pair_file(path: str, model: Optional[ExactModel]=None) -> Tuple[ExactModel, KernelCokernelPair]:
    data = read_json(path)
    model = _model_of(data) if model is None else model
    if (data.get('model'), {k: str(v) for k, v in (data.get('params') or {}).items()}) != \
            (model.name, model_spec(model)['params']):
        raise SchemaError(f'{path} is not a pair of {model.name}')
    try:
        mono = morphism_from_json(model, _field(data, 'mono'))
        epi = morphism_from_json(model, _field(data, 'epi'))
    except (KeyError, TypeError) as e:
        raise SchemaError(f'malformed morphism in {path} ({e})')
    return model, KernelCokernelPair(mono=mono, epi=epi)


# resolutions

def resolution_file(model: ExactModel, res: Resolution, provenance: Dict[str, Any]) -> Dict[str, Any]:
    return {
        **_header(model),
        'depth': str(res.depth),
        'base': object_to_json(model, res.base),
        'injectives': [object_to_json(model, I) for I in res.injectives],
        'syzygies': [object_to_json(model, G) for G in res.syzygies],
        'monos': [blocks_to_json(f) for f in res.monos],
        'epis': [blocks_to_json(f) for f in res.epis],
        'provenance': provenance,
    }


# certificates

def certificate_file(model: ExactModel, cert: IsoCertificate, provenance: Dict[str, Any]) -> Dict[str, Any]:
    return {
        **_header(model),
        'domain': object_to_json(model, cert.domain),
        'codomain': object_to_json(model, cert.codomain),
        'forward': blocks_to_json(cert.forward),
        'backward': blocks_to_json(cert.backward),
        'provenance': provenance,
    }


def read_certificate_file(path: str, check: bool=False) -> Tuple[ExactModel, IsoCertificate]:
    """Load the raw matrices; with check=False entries are only reduced, not validated."""
    data = read_json(path)
    model = _model_of(data)
    try:
        domain = object_from_json(model, _field(data, 'domain'))
        codomain = object_from_json(model, _field(data, 'codomain'))
        forward = morphism_from_blocks(model, domain, codomain, _field(data, 'forward'), check=check)
        backward = morphism_from_blocks(model, codomain, domain, _field(data, 'backward'), check=check)
    except (KeyError, TypeError) as e:
        raise SchemaError(f'malformed certificate {path} ({e})')
    return model, IsoCertificate(forward=forward, backward=backward)

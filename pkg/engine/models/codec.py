"""
JSON forms of objects and morphisms. Integers are written as decimal strings.
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.
"""

import numpy as np

from typing import Any, Dict, List

from ..category import ObjectHandle, Morphism
from ..misc.errors import InvalidObject, InvalidMorphism
from ._model import ExactModel


__all__ = [
    'object_to_json', 'object_from_json', 'blocks_to_json', 'morphism_from_blocks',
    'morphism_to_json', 'morphism_from_json',
]


def object_to_json(model: ExactModel, X: ObjectHandle) -> Dict[str, Any]:
    model.check_object(X)
    return model.payload_to_json(X.payload)


def object_from_json(model: ExactModel, data: Dict[str, Any]) -> ObjectHandle:
    try:
        payload = model.payload_from_json(data)
    except (KeyError, TypeError, ValueError, AttributeError) as e:
        raise InvalidObject(f'unreadable payload ({e})')
    return model.obj(payload)


def blocks_to_json(f: Morphism) -> List[List[List[str]]]:
    return [[[str(int(x)) for x in row] for row in block.tolist()] for block in f.data]


def morphism_from_blocks(model: ExactModel, domain: ObjectHandle, codomain: ObjectHandle,
        data: List[List[List[Any]]], check: bool=True) -> Morphism:
    """With check=False only the block shapes are validated."""
    shapes = list(zip(model.block_dims(codomain), model.block_dims(domain)))
    if not isinstance(data, list) or len(data) != len(shapes):
        raise InvalidMorphism(f'expected {len(shapes)} blocks')

    blocks = []
    for block, (rows, cols) in zip(data, shapes):
        try:
            b = np.array([[int(x) for x in row] for row in block], dtype=np.int64)
        except (TypeError, ValueError) as e:
            raise InvalidMorphism(f'unreadable block ({e})')
        if b.size == 0 and rows * cols == 0:
            b = b.reshape(rows, cols)
        if b.shape != (rows, cols):
            raise InvalidMorphism(f'block of shape {b.shape}, expected {(rows, cols)}')
        blocks.append(b)

    if check:
        return model.morphism(domain, codomain, blocks)
    return model._make(domain, codomain, blocks)


def morphism_to_json(model: ExactModel, f: Morphism) -> Dict[str, Any]:
    return {
        'domain': object_to_json(model, f.domain),
        'codomain': object_to_json(model, f.codomain),
        'blocks': blocks_to_json(f),
    }


def morphism_from_json(model: ExactModel, data: Dict[str, Any], check: bool=True) -> Morphism:
    domain = object_from_json(model, data['domain'])
    codomain = object_from_json(model, data['codomain'])
    return morphism_from_blocks(model, domain, codomain, data['blocks'], check=check)

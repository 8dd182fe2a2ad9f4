"""
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.
"""

import json
import numpy as np

from typing import Any, Dict, Tuple

from ..category import AdditiveModel, ObjectHandle, Morphism


__all__ = ['ExactModel', 'AbelianModel', 'WrappedModel']


class ExactModel(AdditiveModel):
    """An additive model together with a chosen exact structure.

    kernel / cokernel are the underlying constructions of the model; the
    exact-structure layer decides whether they may be used.
    """

    def __repr__(self) -> str:
        return f'{self.__class__.__name__}({self.model_id})'

    @property
    def name(self) -> str:
        return self.family

    def params(self) -> Dict[str, int]:
        raise NotImplementedError('')

    # exact structure
    def is_admissible_mono(self, f: Morphism) -> bool:
        raise NotImplementedError('')

    def is_admissible_epi(self, f: Morphism) -> bool:
        raise NotImplementedError('')

    def is_monic(self, f: Morphism) -> bool:
        raise NotImplementedError('')

    def is_epic(self, f: Morphism) -> bool:
        raise NotImplementedError('')

    def kernel(self, f: Morphism) -> Morphism:
        raise NotImplementedError('')

    def cokernel(self, f: Morphism) -> Morphism:
        raise NotImplementedError('')

    # injectives
    def is_injective(self, X: ObjectHandle) -> bool:
        raise NotImplementedError('')

    def embed_into_injective(self, X: ObjectHandle) -> Morphism:
        raise NotImplementedError('')

    def random_embedding(self, X: ObjectHandle, rng: np.random.Generator) -> Morphism:
        raise NotImplementedError('')

    # sampling and bookkeeping
    def random_object(self, rng: np.random.Generator) -> ObjectHandle:
        raise NotImplementedError('')

    def length(self, X: ObjectHandle) -> int:
        raise NotImplementedError('')

    def payload_to_json(self, payload) -> Dict[str, Any]:
        raise NotImplementedError('')

    def payload_from_json(self, data: Dict[str, Any]):
        raise NotImplementedError('')

    def serialize(self, X: ObjectHandle) -> str:
        """Canonical text form of an object, used as a sort key."""
        return json.dumps(self.payload_to_json(X.payload), sort_keys=True)


class AbelianModel(ExactModel):
    """Abelian models carry the maximal exact structure: every monic map is admissible."""

    def is_monic(self, f: Morphism) -> bool:
        coker = self.cokernel(f).codomain
        return self.length(coker) == self.length(f.codomain) - self.length(f.domain)

    def is_epic(self, f: Morphism) -> bool:
        return self.is_zero_object(self.cokernel(f).codomain)

    def is_admissible_mono(self, f: Morphism) -> bool:
        return self.is_monic(f)

    def is_admissible_epi(self, f: Morphism) -> bool:
        return self.is_epic(f)

    def precompose_is_unique(self, A: Morphism, T: ObjectHandle) -> bool:
        return self.is_epic(A) or super().precompose_is_unique(A, T)

    def postcompose_is_unique(self, A: Morphism, S: ObjectHandle) -> bool:
        return self.is_monic(A) or super().postcompose_is_unique(A, S)


class WrappedModel(ExactModel):
    """Shares every object and morphism of `inner`; only the exact structure may differ."""

    def __init__(self, inner: ExactModel) -> None:
        super().__init__(inner.ring)
        self.inner = inner

    @property
    def model_id(self) -> str:
        return self.inner.model_id

    @property
    def family(self) -> str:
        return self.inner.family

    @property
    def name(self) -> str:
        return self.inner.name

    def params(self):
        return self.inner.params()

    def validate_payload(self, payload) -> None:
        self.inner.validate_payload(payload)

    def zero_payload(self):
        return self.inner.zero_payload()

    def block_dims(self, X: ObjectHandle) -> Tuple[int, ...]:
        return self.inner.block_dims(X)

    def row_moduli(self, X: ObjectHandle):
        return self.inner.row_moduli(X)

    def sum_layout(self, X: ObjectHandle, Y: ObjectHandle):
        return self.inner.sum_layout(X, Y)

    def invariants(self, X: ObjectHandle):
        return self.inner.invariants(X)

    def hom_scaling(self, S: ObjectHandle, T: ObjectHandle):
        return self.inner.hom_scaling(S, T)

    def hom_relations(self, S: ObjectHandle, T: ObjectHandle, layout):
        return self.inner.hom_relations(S, T, layout)

    def invert(self, f: Morphism):
        return self.inner.invert(f)

    def solve_precompose(self, A: Morphism, B: Morphism):
        return self.inner.solve_precompose(A, B)

    def solve_postcompose(self, A: Morphism, B: Morphism):
        return self.inner.solve_postcompose(A, B)

    def precompose_is_unique(self, A: Morphism, T: ObjectHandle) -> bool:
        return self.inner.precompose_is_unique(A, T)

    def postcompose_is_unique(self, A: Morphism, S: ObjectHandle) -> bool:
        return self.inner.postcompose_is_unique(A, S)

    def is_admissible_mono(self, f: Morphism) -> bool:
        return self.inner.is_admissible_mono(f)

    def is_admissible_epi(self, f: Morphism) -> bool:
        return self.inner.is_admissible_epi(f)

    def is_monic(self, f: Morphism) -> bool:
        return self.inner.is_monic(f)

    def is_epic(self, f: Morphism) -> bool:
        return self.inner.is_epic(f)

    def kernel(self, f: Morphism) -> Morphism:
        return self.inner.kernel(f)

    def cokernel(self, f: Morphism) -> Morphism:
        return self.inner.cokernel(f)

    def is_injective(self, X: ObjectHandle) -> bool:
        return self.inner.is_injective(X)

    def embed_into_injective(self, X: ObjectHandle) -> Morphism:
        return self.inner.embed_into_injective(X)

    def random_embedding(self, X: ObjectHandle, rng: np.random.Generator) -> Morphism:
        return self.inner.random_embedding(X, rng)

    def random_object(self, rng: np.random.Generator) -> ObjectHandle:
        return self.inner.random_object(rng)

    def length(self, X: ObjectHandle) -> int:
        return self.inner.length(X)

    def payload_to_json(self, payload):
        return self.inner.payload_to_json(payload)

    def payload_from_json(self, data):
        return self.inner.payload_from_json(data)

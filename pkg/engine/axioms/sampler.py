"""
Seeded generators of admissible monos, admissible epis and isomorphisms.
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.

Candidates come from graphs of random maps, injective embeddings, cokernels
and plain random morphisms; they are filtered through the structure's own
predicates, so a mutated structure is sampled on its own terms.
"""

import numpy as np

from typing import Optional

from ..category import ObjectHandle, Morphism
from ..models import ExactModel
from ..misc.errors import GeneratorExhausted


__all__ = ['Sampler', 'sample_admissible_mono', 'sample_admissible_epi', 'sample_iso']


class Sampler(object):
    def __init__(self, model: ExactModel, rng: np.random.Generator, max_attempts: int=64) -> None:
        self.model = model
        self.rng = rng
        self.max_attempts = max_attempts

    def object(self) -> ObjectHandle:
        return self.model.random_object(self.rng)

    def morphism(self, S: Optional[ObjectHandle]=None, T: Optional[ObjectHandle]=None) -> Morphism:
        S = self.object() if S is None else S
        T = self.object() if T is None else T
        return self.model.random_morphism(S, T, self.rng)

    def _mono_candidate(self, X: ObjectHandle, attempt: int) -> Morphism:
        model = self.model
        kind = attempt % 3
        if kind == 0:
            # graph of a random map, X -> X (+) Y
            Y = self.object()
            w = model.biproduct(X, Y)
            return model.pair_in(w, model.identity(X), self.morphism(X, Y))
        if kind == 1:
            return model.random_embedding(X, self.rng)
        return self.morphism(X, None)

    def _epi_candidate(self, X: ObjectHandle, attempt: int) -> Morphism:
        model = self.model
        kind = attempt % 3
        if kind == 0:
            return model.cokernel(self.morphism(None, X))
        if kind == 1:
            return self.morphism(X, self.object())
        return model.zero_morphism(X, model.zero_object)

    def admissible_mono(self, X: Optional[ObjectHandle]=None) -> Morphism:
        """An admissible mono out of X (a fresh object each attempt when X is None)."""
        start = int(self.rng.integers(0, 3))
        for attempt in range(self.max_attempts):
            source = self.object() if X is None else X
            f = self._mono_candidate(source, start + attempt)
            if self.model.is_admissible_mono(f):
                return f
        raise GeneratorExhausted('admissible mono', self.max_attempts)

    def admissible_epi(self, X: Optional[ObjectHandle]=None) -> Morphism:
        """An admissible epi out of X (a fresh object each attempt when X is None)."""
        start = int(self.rng.integers(0, 3))
        for attempt in range(self.max_attempts):
            source = self.object() if X is None else X
            f = self._epi_candidate(source, start + attempt)
            if self.model.is_admissible_epi(f):
                return f
        raise GeneratorExhausted('admissible epi', self.max_attempts)

    def iso(self, X: ObjectHandle) -> Morphism:
        """A random automorphism of X; -id when no random endomorphism is invertible."""
        model = self.model
        for _ in range(self.max_attempts):
            f = model.random_morphism(X, X, self.rng)
            if model.is_isomorphism(f) is not None:
                return f
        return model.negate(model.identity(X))


def sample_admissible_mono(model: ExactModel, rng: np.random.Generator,
        X: Optional[ObjectHandle]=None, max_attempts: int=64) -> Morphism:
    return Sampler(model, rng, max_attempts).admissible_mono(X)


def sample_admissible_epi(model: ExactModel, rng: np.random.Generator,
        X: Optional[ObjectHandle]=None, max_attempts: int=64) -> Morphism:
    return Sampler(model, rng, max_attempts).admissible_epi(X)


def sample_iso(model: ExactModel, rng: np.random.Generator, X: ObjectHandle, max_attempts: int=64) -> Morphism:
    return Sampler(model, rng, max_attempts).iso(X)

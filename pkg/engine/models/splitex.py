"""
The split exact structure on an additive model.
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.
"""

import numpy as np

from ..core import register
from ..category import ObjectHandle, Morphism
from ._model import ExactModel, WrappedModel


__all__ = ['SplitEx']


@register()
class SplitEx(WrappedModel):
    """Admissible monos / epis are the split ones; every object is injective.

    Objects and morphisms are those of `inner`, so handles keep the inner
    model id and can be passed between the two structures.
    """
    __inject__ = ['inner', ]

    def __init__(self, inner: ExactModel=None) -> None:
        assert inner is not None, 'SplitEx wraps another model'
        super().__init__(inner)

    @property
    def name(self) -> str:
        return f'splitex:{self.inner.name}'

    def left_inverse(self, f: Morphism):
        return self.solve_precompose(f, self.identity(f.domain))

    def right_inverse(self, f: Morphism):
        return self.solve_postcompose(f, self.identity(f.codomain))

    def is_admissible_mono(self, f: Morphism) -> bool:
        return self.left_inverse(f) is not None

    def is_admissible_epi(self, f: Morphism) -> bool:
        return self.right_inverse(f) is not None

    def is_injective(self, X: ObjectHandle) -> bool:
        self.check_object(X)
        return True

    def embed_into_injective(self, X: ObjectHandle) -> Morphism:
        return self.identity(X)

    def random_embedding(self, X: ObjectHandle, rng: np.random.Generator) -> Morphism:
        """Graph of a random map X -> Y, a split mono X -> X (+) Y."""
        Y = self.inner.random_object(rng)
        w = self.biproduct(X, Y)
        return self.pair_in(w, self.identity(X), self.random_morphism(X, Y, rng))

"""
Value types shared by every layer: objects, morphisms, biproduct witnesses
and isomorphism certificates. All of them are immutable.
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.
"""

import numpy as np

from dataclasses import dataclass
from typing import Any, Tuple


__all__ = ['ObjectHandle', 'Morphism', 'BiproductWitness', 'IsoCertificate']


@dataclass(frozen=True)
class ObjectHandle:
    """An object of a concrete model.

    payload is the model-owned hashable description (a dimension vector with
    structure maps, a list of cyclic exponents, ...).
    """
    model_id: str
    payload: Any

    def __repr__(self) -> str:
        return f'{self.model_id}{self.payload}'


def _freeze(block) -> np.ndarray:
    block = np.array(block, dtype=np.int64)
    block.setflags(write=False)
    return block


@dataclass(frozen=True, eq=False)
class Morphism:
    """An arrow domain -> codomain.

    data holds one integer block per model component (one per vertex for a
    quiver representation, a single block for a module over Z/p^k). Blocks
    act on column vectors: block shape is (codomain size, domain size).
    """
    domain: ObjectHandle
    codomain: ObjectHandle
    data: Tuple[np.ndarray, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, 'data', tuple(_freeze(b) for b in self.data))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Morphism):
            return NotImplemented
        return self.domain == other.domain and self.codomain == other.codomain \
            and len(self.data) == len(other.data) \
            and all(a.shape == b.shape and np.array_equal(a, b) for a, b in zip(self.data, other.data))

    def __hash__(self) -> int:
        return hash((self.domain, self.codomain, tuple(b.tobytes() for b in self.data)))

    def __repr__(self) -> str:
        blocks = [b.tolist() for b in self.data]
        return f'Morphism({self.domain!r} -> {self.codomain!r}, {blocks})'


@dataclass(frozen=True)
class BiproductWitness:
    """left >-mu-> middle ->>pi-> right with mu_tilde, pi_tilde as in the splitting identities.

        mu_tilde . mu = 1, pi . pi_tilde = 1, mu . mu_tilde + pi_tilde . pi = 1
    """
    left: ObjectHandle
    middle: ObjectHandle
    right: ObjectHandle
    mu: Morphism
    pi: Morphism
    mu_tilde: Morphism
    pi_tilde: Morphism

    def swapped(self) -> 'BiproductWitness':
        """The same middle object read as a sum right (+) left."""
        return BiproductWitness(left=self.right, middle=self.middle, right=self.left,
            mu=self.pi_tilde, pi=self.mu_tilde, mu_tilde=self.pi, pi_tilde=self.mu)


@dataclass(frozen=True)
class IsoCertificate:
    forward: Morphism
    backward: Morphism

    @property
    def domain(self) -> ObjectHandle:
        return self.forward.domain

    @property
    def codomain(self) -> ObjectHandle:
        return self.forward.codomain

    def inverse(self) -> 'IsoCertificate':
        return IsoCertificate(forward=self.backward, backward=self.forward)

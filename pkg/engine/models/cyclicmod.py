"""
Finite modules over the chain ring Z/p^k.
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.

An object is a direct sum of cyclic modules Z/p^e_1 (+) ... (+) Z/p^e_r,
stored as its exponent list sorted descending. A morphism is one r_N x r_M
integer matrix; column i is the image of the generator of Z/p^e_i, its entry
in row j is read modulo p^f_j and must be divisible by p^max(0, f_j - e_i).
"""

import numpy as np

from dataclasses import dataclass
from typing import List, Tuple

from ..core import register
from ..category import ChainRing, ObjectHandle, Morphism
from ..misc.errors import InvalidObject
from ._model import AbelianModel


__all__ = ['CyclicMod', 'Reduction']


@dataclass
class Reduction:
    """Diagonal form U @ A @ V = S of a presentation matrix over Z/p^k."""
    U: np.ndarray
    U_inv: np.ndarray
    V: np.ndarray
    V_inv: np.ndarray
    S: np.ndarray
    valuations: List[int]
    cokernel_exponents: Tuple[int, ...]
    kernel_exponents: Tuple[int, ...]


@register()
class CyclicMod(AbelianModel):
    family = 'cyclicmod'

    def __init__(self, p: int=2, k: int=2, max_summands: int=4) -> None:
        super().__init__(ChainRing(p, k))
        self.p = int(p)
        self.k = int(k)
        self.max_summands = max_summands

    @property
    def model_id(self) -> str:
        return f'cyclicmod(p={self.p},k={self.k})'

    def params(self):
        return {'p': self.p, 'k': self.k}

    def exponents(self, X: ObjectHandle) -> Tuple[int, ...]:
        self.check_object(X)
        return X.payload

    def validate_payload(self, payload) -> None:
        if not isinstance(payload, tuple):
            raise InvalidObject(f'exponents must be a tuple, got {type(payload).__name__}')
        if any(not isinstance(e, (int, np.integer)) or not 1 <= e <= self.k for e in payload):
            raise InvalidObject(f'exponents {payload} must lie in [1, {self.k}]')
        if list(payload) != sorted(payload, reverse=True):
            raise InvalidObject(f'exponents {payload} are not sorted descending')

    def cyclic(self, *exponents: int) -> ObjectHandle:
        return self.obj(tuple(sorted((int(e) for e in exponents), reverse=True)))

    def zero_payload(self):
        return ()

    def block_dims(self, X: ObjectHandle) -> Tuple[int, ...]:
        return (len(X.payload), )

    def row_moduli(self, X: ObjectHandle):
        return (np.array([self.p ** e for e in X.payload], dtype=np.int64), )

    def hom_scaling(self, S: ObjectHandle, T: ObjectHandle):
        e = np.array(S.payload, dtype=np.int64)
        f = np.array(T.payload, dtype=np.int64)
        return (self.p ** np.maximum(0, f[:, None] - e[None, :]), )

    def sum_layout(self, X: ObjectHandle, Y: ObjectHandle):
        tagged = [(e, 0, i) for i, e in enumerate(X.payload)] + [(e, 1, i) for i, e in enumerate(Y.payload)]
        order = sorted(range(len(tagged)), key=lambda t: -tagged[t][0])
        pos_X, pos_Y = [0] * len(X.payload), [0] * len(Y.payload)
        for slot, t in enumerate(order):
            _, side, i = tagged[t]
            (pos_X if side == 0 else pos_Y)[i] = slot
        payload = tuple(tagged[t][0] for t in order)
        return payload, (pos_X, ), (pos_Y, )

    def invariants(self, X: ObjectHandle):
        return tuple(X.payload)

    def length(self, X: ObjectHandle) -> int:
        return int(sum(X.payload))

    def _relations(self, X: ObjectHandle) -> np.ndarray:
        return np.diag([self.p ** e for e in X.payload]).astype(np.int64).reshape(len(X.payload), len(X.payload)) % self.ring.q

    def reduce(self, A) -> Reduction:
        """Diagonalize A : (Z/p^k)^n -> (Z/p^k)^m and read off kernel and cokernel."""
        A = self.ring.reduce(A)
        m, n = A.shape
        snf = self.ring.smith(A)
        cols = [snf.valuations[l] if l < m else self.k for l in range(n)]
        return Reduction(U=snf.U, U_inv=snf.U_inv, V=snf.V, V_inv=snf.V_inv, S=snf.S,
            valuations=snf.valuations,
            cokernel_exponents=tuple(sorted((v for v in snf.valuations if v > 0), reverse=True)),
            kernel_exponents=tuple(sorted((v for v in cols if v > 0), reverse=True)))

    def cokernel(self, f: Morphism) -> Morphism:
        N = f.codomain
        A = np.concatenate([f.data[0], self._relations(N)], axis=1)
        red = self.reduce(A)

        keep = sorted((l for l, v in enumerate(red.valuations) if v > 0), key=lambda l: -red.valuations[l])
        C = ObjectHandle(self.model_id, tuple(red.valuations[l] for l in keep))
        return self._make(N, C, [red.U[keep].reshape(len(keep), len(N.payload))])

    def kernel(self, f: Morphism) -> Morphism:
        M, N = f.domain, f.codomain
        r_M = len(M.payload)
        null = self.ring.nullspace(np.concatenate([f.data[0], self._relations(N)], axis=1))
        G = null[:r_M]

        rel = self.ring.nullspace(np.concatenate([G, self._relations(M)], axis=1))[:G.shape[1]]
        red = self.reduce(rel)

        keep = sorted((l for l, v in enumerate(red.valuations) if v > 0), key=lambda l: -red.valuations[l])
        K = ObjectHandle(self.model_id, tuple(red.valuations[l] for l in keep))
        inclusion = self.ring.matmul(G, red.U_inv)[:, keep].reshape(r_M, len(keep))
        return self._make(K, M, [inclusion])

    def is_injective(self, X: ObjectHandle) -> bool:
        self.check_object(X)
        return all(e == self.k for e in X.payload)

    def embed_into_injective(self, X: ObjectHandle) -> Morphism:
        self.check_object(X)
        free = ObjectHandle(self.model_id, (self.k, ) * len(X.payload))
        block = np.diag([self.p ** (self.k - e) for e in X.payload]).astype(np.int64)
        return self._make(X, free, [block.reshape(len(X.payload), len(X.payload))])

    def random_object(self, rng: np.random.Generator) -> ObjectHandle:
        r = int(rng.integers(0, self.max_summands + 1))
        return self.cyclic(*rng.integers(1, self.k + 1, size=r))

    def random_embedding(self, X: ObjectHandle, rng: np.random.Generator) -> Morphism:
        """The canonical embedding with a random map into one extra free summand."""
        emb = self.embed_into_injective(X)
        extra = ObjectHandle(self.model_id, (self.k, ) * int(rng.integers(0, 2)))
        w = self.biproduct(emb.codomain, extra)
        return self.pair_in(w, emb, self.random_morphism(X, extra, rng))

    def payload_to_json(self, payload):
        return {'exponents': [str(e) for e in payload]}

    def payload_from_json(self, data):
        return tuple(sorted((int(e) for e in data['exponents']), reverse=True))

"""
Representations of the linear quiver 1 -> 2 -> ... -> n over F_p.
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.
"""

import numpy as np

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ..core import register
from ..category import ChainRing, ObjectHandle, Morphism
from ..misc.errors import InvalidObject
from ._model import AbelianModel


__all__ = ['LinRep', 'IntervalDecomposition']


@dataclass(frozen=True)
class IntervalDecomposition:
    """Multiplicity of each interval module [a, b], 1 <= a <= b <= n."""
    n: int
    multiplicities: Dict[Tuple[int, int], int]

    def dims(self) -> Tuple[int, ...]:
        return tuple(sum(m for (a, b), m in self.multiplicities.items() if a <= v <= b)
            for v in range(1, self.n + 1))

    def intervals(self) -> List[Tuple[int, int]]:
        """Intervals with multiplicity, sorted."""
        out = []
        for ab in sorted(self.multiplicities):
            out += [ab] * self.multiplicities[ab]
        return out


def _freeze(block: np.ndarray):
    return tuple(tuple(int(x) for x in row) for row in block)


@register()
class LinRep(AbelianModel):
    """Objects are payloads (dims, maps) with maps[i] : V_i -> V_{i+1} of shape d_{i+1} x d_i."""

    family = 'linrep'

    def __init__(self, p: int=2, n: int=3, max_dim: int=4) -> None:
        super().__init__(ChainRing(p, 1))
        self.p = int(p)
        self.n = int(n)
        self.max_dim = max_dim

    @property
    def model_id(self) -> str:
        return f'linrep(p={self.p},n={self.n})'

    def params(self):
        return {'p': self.p, 'n': self.n}

    # ---------------------------------------------------------------- objects

    def rep(self, dims, maps) -> ObjectHandle:
        dims = tuple(int(d) for d in dims)
        if len(dims) != self.n:
            raise InvalidObject(f'expected {self.n} vertex dimensions, got {len(dims)}')
        if len(maps) != self.n - 1:
            raise InvalidObject(f'expected {self.n - 1} structure maps, got {len(maps)}')
        frozen = []
        for i, f in enumerate(maps):
            f = np.asarray(f, dtype=np.int64)
            if f.size != dims[i + 1] * dims[i]:
                raise InvalidObject(f'map {i + 1} has {f.size} entries, expected {dims[i + 1]}x{dims[i]}')
            frozen.append(_freeze(f.reshape(dims[i + 1], dims[i]) % self.p))
        return self.obj((dims, tuple(frozen)))

    def interval(self, a: int, b: int) -> ObjectHandle:
        assert 1 <= a <= b <= self.n, f'[{a}, {b}] is not an interval of A_{self.n}'
        dims = [1 if a <= v <= b else 0 for v in range(1, self.n + 1)]
        maps = [np.ones((dims[i + 1], dims[i]), dtype=np.int64) for i in range(self.n - 1)]
        return self.rep(dims, maps)

    def simple(self, i: int) -> ObjectHandle:
        return self.interval(i, i)

    def validate_payload(self, payload) -> None:
        try:
            dims, maps = payload
        except (TypeError, ValueError):
            raise InvalidObject('payload must be a (dims, maps) pair')
        if len(dims) != self.n or any(d < 0 for d in dims):
            raise InvalidObject(f'dims {dims} is not a dimension vector of length {self.n}')
        if len(maps) != self.n - 1:
            raise InvalidObject(f'expected {self.n - 1} structure maps')
        for i, f in enumerate(maps):
            rows = len(f)
            cols = len(f[0]) if rows else None
            if rows != dims[i + 1] or (rows and cols != dims[i]) or any(len(r) != cols for r in f):
                raise InvalidObject(f'map {i + 1} does not have shape {dims[i + 1]}x{dims[i]}')
            if any(not 0 <= x < self.p for r in f for x in r):
                raise InvalidObject(f'map {i + 1} has entries outside [0, {self.p})')

    def zero_payload(self):
        return ((0, ) * self.n, tuple(() for _ in range(self.n - 1)))

    def dims(self, X: ObjectHandle) -> Tuple[int, ...]:
        return X.payload[0]

    def maps(self, X: ObjectHandle) -> List[np.ndarray]:
        dims = X.payload[0]
        return [np.array(f, dtype=np.int64).reshape(dims[i + 1], dims[i]) for i, f in enumerate(X.payload[1])]

    def block_dims(self, X: ObjectHandle) -> Tuple[int, ...]:
        return X.payload[0]

    def row_moduli(self, X: ObjectHandle):
        return tuple(np.full(d, self.p, dtype=np.int64) for d in X.payload[0])

    def hom_relations(self, S: ObjectHandle, T: ObjectHandle, layout):
        """T.f_i X_i - X_{i+1} S.f_i = 0 for every arrow, in row-major coordinates."""
        out = []
        s, t = self.dims(S), self.dims(T)
        fS, fT = self.maps(S), self.maps(T)
        for i in range(self.n - 1):
            rows = t[i + 1] * s[i]
            if rows == 0:
                continue
            coeffs = np.zeros((rows, layout.size), dtype=np.int64)
            o, o1 = layout.offsets[i], layout.offsets[i + 1]
            coeffs[:, o:o + t[i] * s[i]] += np.kron(fT[i], np.eye(s[i], dtype=np.int64))
            coeffs[:, o1:o1 + t[i + 1] * s[i + 1]] -= np.kron(np.eye(t[i + 1], dtype=np.int64), fS[i].T)
            out.append((coeffs % self.p, np.full(rows, self.p, dtype=np.int64)))
        return out

    def sum_layout(self, X: ObjectHandle, Y: ObjectHandle):
        dx, dy = self.dims(X), self.dims(Y)
        fx, fy = self.maps(X), self.maps(Y)
        dims = tuple(a + b for a, b in zip(dx, dy))
        maps = []
        for i in range(self.n - 1):
            block = np.zeros((dims[i + 1], dims[i]), dtype=np.int64)
            block[:dx[i + 1], :dx[i]] = fx[i]
            block[dx[i + 1]:, dx[i]:] = fy[i]
            maps.append(_freeze(block))
        pos_X = tuple(list(range(a)) for a in dx)
        pos_Y = tuple(list(range(a, a + b)) for a, b in zip(dx, dy))
        return (dims, tuple(maps)), pos_X, pos_Y

    def invariants(self, X: ObjectHandle):
        return tuple(self.dims(X))

    def length(self, X: ObjectHandle) -> int:
        return int(sum(self.dims(X)))

    # ------------------------------------------------------- exact structure

    def is_monic(self, f: Morphism) -> bool:
        return all(self.ring.rank(b) == b.shape[1] for b in f.data)

    def is_epic(self, f: Morphism) -> bool:
        return all(self.ring.rank(b) == b.shape[0] for b in f.data)

    def kernel(self, f: Morphism) -> Morphism:
        M = f.domain
        fM = self.maps(M)
        G = [self.ring.nullspace(b) for b in f.data]
        induced = []
        for i in range(self.n - 1):
            h = self.ring.solve(G[i + 1], self.ring.matmul(fM[i], G[i]))
            assert h is not None, 'kernel is not a subrepresentation'
            induced.append(h.reshape(G[i + 1].shape[1], G[i].shape[1]))
        K = self.rep([g.shape[1] for g in G], induced)
        return self._make(K, M, G)

    def cokernel(self, f: Morphism) -> Morphism:
        N = f.codomain
        fN = self.maps(N)
        P = [self.ring.nullspace(b.T).T for b in f.data]
        induced = []
        for i in range(self.n - 1):
            g = self.ring.solve(P[i].T, self.ring.matmul(P[i + 1], fN[i]).T)
            assert g is not None, 'image is not a subrepresentation'
            induced.append(g.reshape(P[i].shape[0], P[i + 1].shape[0]).T)
        C = self.rep([q.shape[0] for q in P], induced)
        return self._make(N, C, [q.reshape(q.shape[0], d) for q, d in zip(P, self.dims(N))])

    def _pointwise(self, blocks: List[Optional[np.ndarray]], S: ObjectHandle, T: ObjectHandle) -> Optional[Morphism]:
        if any(b is None for b in blocks):
            return None
        t, s = self.dims(T), self.dims(S)
        return self._make(S, T, [b.reshape(t[i], s[i]) for i, b in enumerate(blocks)])

    def _lift_into_injective(self, A: Morphism, B: Morphism) -> Morphism:
        """X : cod(A) -> T with X . A = B, for A monic and T injective.

        T injective means its structure maps are onto, so X is built from
        vertex n down: at vertex i, X_i = s_i X_{i+1} F_i + N_i C_i where s_i
        is a right inverse of T_i and N_i spans its kernel. The correction
        C_i . A_i is prescribed and A_i is injective, so it always exists.
        """
        F, T = A.codomain, B.codomain
        f, t = self.dims(F), self.dims(T)
        fF, fT = self.maps(F), self.maps(T)
        ring = self.ring

        X = [None] * self.n
        for i in reversed(range(self.n)):
            if i == self.n - 1:
                base = ring.zeros(t[i], f[i])
                N = ring.identity(t[i])
            else:
                s = ring.solve(fT[i], ring.identity(t[i + 1]))
                base = ring.matmul(s, ring.matmul(X[i + 1], fF[i]))
                N = ring.nullspace(fT[i])
            # N has full column rank, so the coefficients of the defect are unique
            coeffs = ring.solve(N, (B.data[i] - ring.matmul(base, A.data[i])) % ring.q)
            assert coeffs is not None, f'defect at vertex {i + 1} leaves the kernel'
            Ct = ring.solve(A.data[i].T, coeffs.T)
            assert Ct is not None, f'mono is not injective at vertex {i + 1}'
            X[i] = (base + ring.matmul(N, Ct.T)) % ring.q
        return self._make(F, T, X)

    def solve_precompose(self, A: Morphism, B: Morphism) -> Optional[Morphism]:
        # an epic A determines X vertex by vertex, and the result commutes automatically
        if A.domain == B.domain and self.is_epic(A):
            blocks = [self.ring.solve(a.T, b.T) for a, b in zip(A.data, B.data)]
            return self._pointwise([x if x is None else x.T for x in blocks], A.codomain, B.codomain)
        if A.domain == B.domain and self.is_monic(A) and self.is_injective(B.codomain):
            return self._lift_into_injective(A, B)
        return super().solve_precompose(A, B)

    def solve_postcompose(self, A: Morphism, B: Morphism) -> Optional[Morphism]:
        if A.codomain == B.codomain and self.is_monic(A):
            blocks = [self.ring.solve(a, b) for a, b in zip(A.data, B.data)]
            return self._pointwise(blocks, B.domain, A.domain)
        return super().solve_postcompose(A, B)

    def invert(self, f: Morphism) -> Optional[Morphism]:
        if self.dims(f.domain) != self.dims(f.codomain) or not self.is_monic(f):
            return None
        return self.solve_postcompose(f, self.identity(f.codomain))

    # ------------------------------------------------------------- injectives

    def composite(self, X: ObjectHandle, a: int, b: int) -> np.ndarray:
        """The structure map V_a -> V_b, 1 <= a <= b <= n."""
        d = self.dims(X)
        out = self.ring.identity(d[a - 1])
        for f in self.maps(X)[a - 1:b - 1]:
            out = self.ring.matmul(f, out)
        return out

    def interval_decomposition(self, X: ObjectHandle) -> IntervalDecomposition:
        n = self.n

        def r(a: int, b: int) -> int:
            if a < 1 or b > n or a > b:
                return 0
            return self.ring.rank(self.composite(X, a, b))

        mult = {}
        for a in range(1, n + 1):
            for b in range(a, n + 1):
                m = r(a, b) - r(a - 1, b) - r(a, b + 1) + r(a - 1, b + 1)
                assert m >= 0, f'negative multiplicity for [{a}, {b}]'
                mult[(a, b)] = m
        return IntervalDecomposition(n=n, multiplicities=mult)

    def is_injective(self, X: ObjectHandle) -> bool:
        """No interval summand starts after vertex 1, i.e. every structure map is onto."""
        self.check_object(X)
        d = self.dims(X)
        return all(self.ring.rank(f) == d[i + 1] for i, f in enumerate(self.maps(X)))

    def injective_hull_dims(self, X: ObjectHandle) -> Tuple[int, ...]:
        d = self.dims(X)
        return tuple(sum(d[i:]) for i in range(self.n))

    def embed_into_injective(self, X: ObjectHandle) -> Morphism:
        """Evaluation embedding X -> (+)_j I(j)^{d_j} with I(j) the interval [1, j]."""
        self.check_object(X)
        d = self.dims(X)
        target = self.injective_hull_dims(X)
        # coordinates at vertex i list the copies of I(j) for j = i..n, in that order
        maps = []
        for i in range(self.n - 1):
            block = np.zeros((target[i + 1], target[i]), dtype=np.int64)
            block[:, d[i]:] = np.eye(target[i + 1], dtype=np.int64)
            maps.append(block)
        J = self.rep(target, maps)

        blocks = []
        for i in range(1, self.n + 1):
            parts = [self.composite(X, i, j) for j in range(i, self.n + 1)]
            blocks.append(np.concatenate(parts, axis=0).reshape(target[i - 1], d[i - 1]))
        return self._make(X, J, blocks)

    def injective(self, ends: List[int]) -> ObjectHandle:
        """(+) of I(j) for j in ends."""
        out = self.zero_object
        for j in ends:
            out = self.biproduct(out, self.interval(1, j)).middle
        return out

    def random_object(self, rng: np.random.Generator) -> ObjectHandle:
        dims = rng.integers(0, self.max_dim + 1, size=self.n)
        maps = [rng.integers(0, self.p, size=(dims[i + 1], dims[i])) for i in range(self.n - 1)]
        return self.rep(dims, maps)

    def random_embedding(self, X: ObjectHandle, rng: np.random.Generator) -> Morphism:
        """The evaluation embedding paired with a random map into a random injective."""
        emb = self.embed_into_injective(X)
        extra = self.injective([int(j) for j in rng.integers(1, self.n + 1, size=int(rng.integers(0, 3)))])
        w = self.biproduct(emb.codomain, extra)
        return self.pair_in(w, emb, self.random_morphism(X, extra, rng))

    def payload_to_json(self, payload):
        dims, maps = payload
        return {
            'dims': [str(d) for d in dims],
            'maps': [[[str(x) for x in row] for row in f] for f in maps],
        }

    def payload_from_json(self, data):
        dims = [int(d) for d in data['dims']]
        maps = [[[int(x) for x in row] for row in f] for f in data['maps']]
        if len(dims) != self.n or len(maps) != self.n - 1:
            raise InvalidObject(f'object does not live on A_{self.n}')
        for i, f in enumerate(maps):
            if len(f) != dims[i + 1] or any(len(row) != dims[i] for row in f):
                raise InvalidObject(f'map {i + 1} does not have shape {dims[i + 1]}x{dims[i]}')
            if any(not 0 <= x < self.p for row in f for x in row):
                raise InvalidObject(f'map {i + 1} has entries outside [0, {self.p})')
        return (tuple(dims), tuple(_freeze(np.array(f, dtype=np.int64).reshape(dims[i + 1], dims[i]))
            for i, f in enumerate(maps)))

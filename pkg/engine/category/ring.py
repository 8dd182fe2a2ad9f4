"""
Exact linear algebra over the chain ring Z/p^k.
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.

k = 1 is the prime field F_p. Every element of Z/p^k is a unit times a
power of p, so pivoting on an entry of minimal p-valuation always divides
the rest of its row and column. That single fact drives echelon forms,
linear solving, nullspaces and the Smith normal form below.
"""

import numpy as np

from dataclasses import dataclass
from typing import List, Optional, Tuple


__all__ = ['ChainRing', 'Echelon', 'Smith']


@dataclass
class Echelon:
    """Row-reduced copy of a system with its pivots.

    pivots[i] = (column, valuation) of the pivot sitting in row i; the pivot
    entry itself has been normalized to p^valuation.
    """
    matrix: np.ndarray
    rhs: Optional[np.ndarray]
    pivots: List[Tuple[int, int]]


@dataclass
class Smith:
    """U @ A @ V = S with S diagonal of prime powers, all four transforms invertible."""
    U: np.ndarray
    U_inv: np.ndarray
    V: np.ndarray
    V_inv: np.ndarray
    S: np.ndarray
    valuations: List[int]


class ChainRing(object):
    def __init__(self, p: int, k: int = 1) -> None:
        assert p >= 2 and k >= 1, f'invalid chain ring Z/{p}^{k}'
        self.p = int(p)
        self.k = int(k)
        self.q = self.p ** self.k

    def __repr__(self) -> str:
        return f'ChainRing(p={self.p}, k={self.k})'

    def power(self, e: int) -> int:
        return self.p ** e

    def reduce(self, a) -> np.ndarray:
        return np.asarray(a, dtype=np.int64) % self.q

    def zeros(self, m: int, n: int) -> np.ndarray:
        return np.zeros((m, n), dtype=np.int64)

    def identity(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=np.int64)

    def matmul(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        return (np.asarray(A, dtype=np.int64) @ np.asarray(B, dtype=np.int64)) % self.q

    def valuation(self, a: int) -> int:
        a = int(a) % self.q
        if a == 0:
            return self.k
        v = 0
        while a % self.p == 0:
            a //= self.p
            v += 1
        return v

    def valuations(self, A: np.ndarray) -> np.ndarray:
        A = np.asarray(A, dtype=np.int64) % self.q
        vals = np.zeros(A.shape, dtype=np.int64)
        for i in range(1, self.k):
            vals += (A % self.p ** i == 0)
        vals[A == 0] = self.k
        return vals

    def is_unit(self, a: int) -> bool:
        return int(a) % self.p != 0

    def unit_inverse(self, u: int) -> int:
        return pow(int(u) % self.q, -1, self.q)

    def _unit_part(self, a: int, v: int) -> int:
        # a = p^v * u with u prime to p
        return (int(a) // self.p ** v) % self.q

    def echelon(self, A, B=None) -> Echelon:
        """Full pivoting on the first minimal-valuation entry (column-major tie break).

        Over a field every nonzero entry is a unit, so pivots are taken column
        by column on the first nonzero entry instead.
        """
        A = self.reduce(A).copy()
        if B is not None:
            B = self.reduce(B).copy()
            if B.ndim == 1:
                B = B.reshape(-1, 1)
        if self.k == 1:
            return self._field_echelon(A, B)

        m, n = A.shape
        pivots = []
        free = np.ones(n, dtype=bool)
        row = 0
        while row < m and free.any():
            cols = np.flatnonzero(free)
            sub = A[row:][:, cols]
            if not sub.any():
                break

            vals = self.valuations(sub)
            best = int(vals.min())
            rr, cc = np.nonzero(vals == best)
            pick = np.lexsort((rr, cc))[0]
            i, j = row + int(rr[pick]), int(cols[cc[pick]])

            if i != row:
                A[[row, i]] = A[[i, row]]
                if B is not None:
                    B[[row, i]] = B[[i, row]]

            scale = self.unit_inverse(self._unit_part(A[row, j], best))
            A[row] = A[row] * scale % self.q
            if B is not None:
                B[row] = B[row] * scale % self.q

            factors = A[row + 1:, j] // self.p ** best
            if factors.any():
                A[row + 1:] = (A[row + 1:] - factors[:, None] * A[row]) % self.q
                if B is not None:
                    B[row + 1:] = (B[row + 1:] - factors[:, None] * B[row]) % self.q

            pivots.append((j, best))
            free[j] = False
            row += 1

        return Echelon(matrix=A, rhs=B, pivots=pivots)

    def _field_echelon(self, A: np.ndarray, B: Optional[np.ndarray]) -> Echelon:
        m, n = A.shape
        pivots = []
        row = 0
        for j in range(n):
            if row == m:
                break
            nz = np.flatnonzero(A[row:, j])
            if nz.size == 0:
                continue
            i = row + int(nz[0])
            if i != row:
                A[[row, i]] = A[[i, row]]
                if B is not None:
                    B[[row, i]] = B[[i, row]]

            scale = self.unit_inverse(A[row, j])
            A[row, j:] = A[row, j:] * scale % self.q
            if B is not None:
                B[row] = B[row] * scale % self.q

            # columns left of j are already zero below the current row
            below = row + 1 + np.flatnonzero(A[row + 1:, j])
            if below.size:
                factors = A[below, j]
                A[below, j:] = (A[below, j:] - factors[:, None] * A[row, j:]) % self.q
                if B is not None:
                    B[below] = (B[below] - factors[:, None] * B[row]) % self.q

            pivots.append((j, 0))
            row += 1

        return Echelon(matrix=A, rhs=B, pivots=pivots)

    def _back_substitute(self, ech: Echelon, X: np.ndarray, rhs: np.ndarray, seeded: np.ndarray) -> bool:
        """Fill the pivot variables of X in place, last pivot first.

        Entries flagged in `seeded` keep their value. Returns False when a
        pivot row is not divisible by its pivot, i.e. the system is unsolvable.
        """
        A = ech.matrix
        for idx in reversed(range(len(ech.pivots))):
            j, v = ech.pivots[idx]
            residual = (rhs[idx] - A[idx] @ X) % self.q
            keep = seeded[j]
            if v > 0 and (residual[~keep] % self.p ** v).any():
                return False
            X[j, ~keep] = (residual[~keep] // self.p ** v) % self.q
        return True

    def solve(self, A, B) -> Optional[np.ndarray]:
        """Canonical solution X of A @ X = B, or None.

        Non-pivot variables are set to zero, so a homogeneous system returns
        the zero solution.
        """
        A = self.reduce(A)
        B = self.reduce(B)
        vector = B.ndim == 1
        if vector:
            B = B.reshape(-1, 1)
        m, n = A.shape
        assert B.shape[0] == m, f'rhs has {B.shape[0]} rows, system has {m}'

        ech = self.echelon(A, B)
        rank = len(ech.pivots)
        if ech.rhs[rank:].any():
            return None

        X = np.zeros((n, B.shape[1]), dtype=np.int64)
        seeded = np.zeros(X.shape, dtype=bool)
        if not self._back_substitute(ech, X, ech.rhs, seeded):
            return None

        return X[:, 0] if vector else X

    def nullspace(self, A) -> np.ndarray:
        """Columns generating {x : A @ x = 0} as a Z/p^k-module.

        One generator per free column and one per pivot of positive valuation
        (the torsion direction p^(k-v) at that pivot).
        """
        A = self.reduce(A)
        m, n = A.shape
        ech = self.echelon(A)

        pivot_cols = {j for j, _ in ech.pivots}
        seeds = [(j, 1) for j in range(n) if j not in pivot_cols]
        seeds += [(j, self.p ** (self.k - v)) for j, v in ech.pivots if v > 0]

        X = np.zeros((n, len(seeds)), dtype=np.int64)
        seeded = np.zeros(X.shape, dtype=bool)
        for g, (j, value) in enumerate(seeds):
            X[j, g] = value
            seeded[j, g] = True

        rhs = np.zeros((len(ech.pivots), len(seeds)), dtype=np.int64)
        ok = self._back_substitute(ech, X, rhs, seeded)
        assert ok, 'homogeneous back substitution cannot fail'
        return X

    def rank(self, A) -> int:
        """Number of pivots; the rank when k = 1."""
        A = self.reduce(A)
        if A.size == 0:
            return 0
        return len(self.echelon(A).pivots)

    def smith(self, A) -> Smith:
        A = self.reduce(A).copy()
        m, n = A.shape
        U, U_inv = self.identity(m), self.identity(m)
        V, V_inv = self.identity(n), self.identity(n)

        for t in range(min(m, n)):
            sub = A[t:, t:]
            if not sub.any():
                break
            vals = self.valuations(sub)
            best = int(vals.min())
            rr, cc = np.nonzero(vals == best)
            i, j = t + int(rr[0]), t + int(cc[0])

            if i != t:
                A[[t, i]] = A[[i, t]]
                U[[t, i]] = U[[i, t]]
                U_inv[:, [t, i]] = U_inv[:, [i, t]]
            if j != t:
                A[:, [t, j]] = A[:, [j, t]]
                V[:, [t, j]] = V[:, [j, t]]
                V_inv[[t, j]] = V_inv[[j, t]]

            u = self._unit_part(A[t, t], best)
            ui = self.unit_inverse(u)
            A[t] = A[t] * ui % self.q
            U[t] = U[t] * ui % self.q
            U_inv[:, t] = U_inv[:, t] * u % self.q

            f = A[t + 1:, t] // self.p ** best
            if f.any():
                A[t + 1:] = (A[t + 1:] - f[:, None] * A[t]) % self.q
                U[t + 1:] = (U[t + 1:] - f[:, None] * U[t]) % self.q
                U_inv[:, t] = (U_inv[:, t] + U_inv[:, t + 1:] @ f) % self.q

            g = A[t, t + 1:] // self.p ** best
            if g.any():
                A[:, t + 1:] = (A[:, t + 1:] - np.outer(A[:, t], g)) % self.q
                V[:, t + 1:] = (V[:, t + 1:] - np.outer(V[:, t], g)) % self.q
                V_inv[t] = (V_inv[t] + g @ V_inv[t + 1:]) % self.q

        valuations = [self.valuation(A[l, l]) if l < n else self.k for l in range(m)]
        return Smith(U=U, U_inv=U_inv, V=V, V_inv=V_inv, S=A, valuations=valuations)

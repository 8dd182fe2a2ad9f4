"""
The model-agnostic additive category substrate.
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.

A model describes its objects by hashable payloads and its morphisms by
integer blocks over a chain ring Z/p^k. Everything generic lives here:
composition, the abelian group structure on hom-sets, biproducts, exact
solving of X . A = B and A . X = B, and isomorphism certificates.
"""

import numpy as np

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .ring import ChainRing
from .types import ObjectHandle, Morphism, BiproductWitness, IsoCertificate
from ..misc.errors import DomainMismatch, ShapeMismatch, ModelMismatch, InvalidMorphism


__all__ = ['AdditiveModel', 'HomLayout', 'verify_witness', 'verify_iso']


@dataclass(frozen=True)
class HomLayout:
    """Flattening of Hom(S, T) into one variable vector (row-major per block)."""
    shapes: Tuple[Tuple[int, int], ...]
    offsets: Tuple[int, ...]
    size: int

    def block(self, t: np.ndarray, b: int) -> np.ndarray:
        rows, cols = self.shapes[b]
        return t[self.offsets[b]:self.offsets[b] + rows * cols].reshape(rows, cols)


class AdditiveModel(object):
    """Base class of every concrete model.

    Subclasses provide the hooks `model_id`, `validate_payload`, `block_dims`,
    `row_moduli`, `sum_layout` and `invariants`; `hom_scaling` and
    `hom_relations` describe which block tuples are morphisms.
    """

    family = 'additive'

    def __init__(self, ring: ChainRing) -> None:
        self.ring = ring

    # ------------------------------------------------------------------ hooks

    @property
    def model_id(self) -> str:
        raise NotImplementedError('')

    def validate_payload(self, payload) -> None:
        raise NotImplementedError('')

    def block_dims(self, X: ObjectHandle) -> Tuple[int, ...]:
        raise NotImplementedError('')

    def row_moduli(self, X: ObjectHandle) -> Tuple[np.ndarray, ...]:
        raise NotImplementedError('')

    def sum_layout(self, X: ObjectHandle, Y: ObjectHandle):
        """(payload of X (+) Y, positions of X's coordinates, positions of Y's) per block."""
        raise NotImplementedError('')

    def invariants(self, X: ObjectHandle):
        raise NotImplementedError('')

    def zero_payload(self):
        raise NotImplementedError('')

    def hom_scaling(self, S: ObjectHandle, T: ObjectHandle) -> Tuple[np.ndarray, ...]:
        """Per block, X = scaling * t parametrizes the admissible entries."""
        return tuple(np.ones((t, s), dtype=np.int64) for t, s in zip(self.block_dims(T), self.block_dims(S)))

    def hom_relations(self, S: ObjectHandle, T: ObjectHandle, layout: HomLayout) -> List[Tuple[np.ndarray, np.ndarray]]:
        """Homogeneous equations (coefficients over the flattened entries, moduli) a morphism satisfies."""
        return []

    # --------------------------------------------------------------- objects

    def obj(self, payload) -> ObjectHandle:
        self.validate_payload(payload)
        return ObjectHandle(self.model_id, payload)

    @property
    def zero_object(self) -> ObjectHandle:
        return ObjectHandle(self.model_id, self.zero_payload())

    def check_object(self, X: ObjectHandle) -> None:
        if X.model_id != self.model_id:
            raise ModelMismatch(self.model_id, X.model_id)

    def is_zero_object(self, X: ObjectHandle) -> bool:
        return sum(self.block_dims(X)) == 0

    # ------------------------------------------------------------- morphisms

    def _canonical(self, blocks: Sequence[np.ndarray], codomain: ObjectHandle) -> Tuple[np.ndarray, ...]:
        return tuple(np.asarray(b, dtype=np.int64) % m[:, None]
            for b, m in zip(blocks, self.row_moduli(codomain)))

    def _make(self, domain: ObjectHandle, codomain: ObjectHandle, blocks) -> Morphism:
        return Morphism(domain, codomain, self._canonical(blocks, codomain))

    def layout(self, S: ObjectHandle, T: ObjectHandle) -> HomLayout:
        shapes = tuple(zip(self.block_dims(T), self.block_dims(S)))
        sizes = [r * c for r, c in shapes]
        offsets = tuple(int(o) for o in np.concatenate([[0], np.cumsum(sizes)[:-1]])) if sizes else ()
        return HomLayout(shapes=shapes, offsets=offsets, size=int(sum(sizes)))

    def morphism(self, domain: ObjectHandle, codomain: ObjectHandle, blocks) -> Morphism:
        """Validated constructor: shapes, entry constraints and structure relations."""
        self.check_object(domain)
        self.check_object(codomain)
        blocks = [np.asarray(b, dtype=np.int64).reshape(t, s)
            if np.asarray(b).size == t * s else np.asarray(b, dtype=np.int64)
            for b, t, s in zip(blocks, self.block_dims(codomain), self.block_dims(domain))]
        shapes = tuple(zip(self.block_dims(codomain), self.block_dims(domain)))
        if len(blocks) != len(shapes) or any(b.shape != s for b, s in zip(blocks, shapes)):
            raise ShapeMismatch(f'blocks {[b.shape for b in blocks]} vs expected {list(shapes)}')

        f = self._make(domain, codomain, blocks)
        reason = self.morphism_defect(f)
        if reason is not None:
            raise InvalidMorphism(reason)
        return f

    def morphism_defect(self, f: Morphism) -> Optional[str]:
        """None when f is a morphism of the model, else a reason."""
        for b, (block, scale) in enumerate(zip(f.data, self.hom_scaling(f.domain, f.codomain))):
            if (block % scale).any():
                return f'block {b} violates the divisibility constraint'

        layout = self.layout(f.domain, f.codomain)
        vec = np.concatenate([b.reshape(-1) for b in f.data]) if f.data else np.zeros(0, dtype=np.int64)
        for coeffs, moduli in self.hom_relations(f.domain, f.codomain, layout):
            if ((coeffs @ vec) % moduli).any():
                return 'structure maps do not commute'
        return None

    def compose(self, g: Morphism, f: Morphism) -> Morphism:
        """g . f, exact."""
        if f.codomain != g.domain:
            raise DomainMismatch(g.domain, f.codomain)
        return self._make(f.domain, g.codomain, [self.ring.matmul(G, F) for G, F in zip(g.data, f.data)])

    def compose_all(self, *fs: Morphism) -> Morphism:
        """compose_all(h, g, f) = h . g . f"""
        out = fs[-1]
        for g in reversed(fs[:-1]):
            out = self.compose(g, out)
        return out

    def identity(self, X: ObjectHandle) -> Morphism:
        self.check_object(X)
        return self._make(X, X, [self.ring.identity(d) for d in self.block_dims(X)])

    def zero_morphism(self, X: ObjectHandle, Y: ObjectHandle) -> Morphism:
        self.check_object(X)
        self.check_object(Y)
        return self._make(X, Y, [self.ring.zeros(t, s) for t, s in zip(self.block_dims(Y), self.block_dims(X))])

    def add(self, f: Morphism, g: Morphism) -> Morphism:
        if f.domain != g.domain or f.codomain != g.codomain:
            raise ShapeMismatch(f'cannot add {f.domain}->{f.codomain} and {g.domain}->{g.codomain}')
        return self._make(f.domain, f.codomain, [F + G for F, G in zip(f.data, g.data)])

    def sum(self, fs: Sequence[Morphism]) -> Morphism:
        out = fs[0]
        for g in fs[1:]:
            out = self.add(out, g)
        return out

    def negate(self, f: Morphism) -> Morphism:
        return self._make(f.domain, f.codomain, [-F for F in f.data])

    def subtract(self, f: Morphism, g: Morphism) -> Morphism:
        return self.add(f, self.negate(g))

    def scale(self, c: int, f: Morphism) -> Morphism:
        return self._make(f.domain, f.codomain, [int(c) * F for F in f.data])

    def equal(self, f: Morphism, g: Morphism) -> bool:
        if f.domain != g.domain or f.codomain != g.codomain:
            return False
        return all(np.array_equal(a, b) for a, b in
            zip(self._canonical(f.data, f.codomain), self._canonical(g.data, g.codomain)))

    def is_zero(self, f: Morphism) -> bool:
        return not any(b.any() for b in self._canonical(f.data, f.codomain))

    def is_identity(self, f: Morphism) -> bool:
        return f.domain == f.codomain and self.equal(f, self.identity(f.domain))

    # ------------------------------------------------------------ biproducts

    def _placement(self, src: ObjectHandle, tgt: ObjectHandle, positions) -> Morphism:
        blocks = []
        for s, t, pos in zip(self.block_dims(src), self.block_dims(tgt), positions):
            block = self.ring.zeros(t, s)
            block[list(pos), list(range(s))] = 1
            blocks.append(block)
        return self._make(src, tgt, blocks)

    def biproduct(self, E: ObjectHandle, G: ObjectHandle) -> BiproductWitness:
        self.check_object(E)
        self.check_object(G)
        payload, pos_E, pos_G = self.sum_layout(E, G)
        F = ObjectHandle(self.model_id, payload)

        mu = self._placement(E, F, pos_E)
        pi_tilde = self._placement(G, F, pos_G)
        mu_tilde = self._make(F, E, [b.T for b in mu.data])
        pi = self._make(F, G, [b.T for b in pi_tilde.data])
        return BiproductWitness(left=E, middle=F, right=G, mu=mu, pi=pi, mu_tilde=mu_tilde, pi_tilde=pi_tilde)

    def pair_in(self, w: BiproductWitness, f: Morphism, g: Morphism) -> Morphism:
        """(f, g)^T : X -> left (+) right."""
        return self.add(self.compose(w.mu, f), self.compose(w.pi_tilde, g))

    def pair_out(self, w: BiproductWitness, f: Morphism, g: Morphism) -> Morphism:
        """[f, g] : left (+) right -> Y."""
        return self.add(self.compose(f, w.mu_tilde), self.compose(g, w.pi))

    # --------------------------------------------------------------- solving

    def _rows_precompose(self, A: Morphism, B: Morphism, layout: HomLayout):
        rows = []
        for b, (Ab, Bb, mod) in enumerate(zip(A.data, B.data, self.row_moduli(B.codomain))):
            t, m = layout.shapes[b]
            l = Ab.shape[1]
            coeffs = np.zeros((t * l, layout.size), dtype=np.int64)
            coeffs[:, layout.offsets[b]:layout.offsets[b] + t * m] = np.kron(np.eye(t, dtype=np.int64), Ab.T)
            rows.append((coeffs, Bb.reshape(-1), np.repeat(mod, l)))
        return rows

    def _rows_postcompose(self, A: Morphism, B: Morphism, layout: HomLayout):
        rows = []
        for b, (Ab, Bb, mod) in enumerate(zip(A.data, B.data, self.row_moduli(B.codomain))):
            m, l = layout.shapes[b]
            n = Ab.shape[0]
            coeffs = np.zeros((n * l, layout.size), dtype=np.int64)
            coeffs[:, layout.offsets[b]:layout.offsets[b] + m * l] = np.kron(Ab, np.eye(l, dtype=np.int64))
            rows.append((coeffs, Bb.reshape(-1), np.repeat(mod, l)))
        return rows

    def _system(self, S: ObjectHandle, T: ObjectHandle, layout: HomLayout, rows):
        """Stack equations `coeffs . X = rhs (mod moduli)` as one system in t over Z/p^k."""
        q = self.ring.q
        scaling = np.concatenate([s.reshape(-1) for s in self.hom_scaling(S, T)]) \
            if layout.size else np.zeros(0, dtype=np.int64)
        rows = list(rows) + [(c, np.zeros(c.shape[0], dtype=np.int64), m)
            for c, m in self.hom_relations(S, T, layout)]
        if not rows:
            return np.zeros((0, layout.size), dtype=np.int64), np.zeros(0, dtype=np.int64), scaling

        C = np.concatenate([c for c, _, _ in rows], axis=0)
        rhs = np.concatenate([r for _, r, _ in rows])
        lift = np.concatenate([q // m for _, _, m in rows])
        C = (C % q) * scaling[None, :] % q * lift[:, None] % q
        rhs = (rhs % q) * lift % q
        return C, rhs, scaling

    def _from_vector(self, S: ObjectHandle, T: ObjectHandle, layout: HomLayout, scaling: np.ndarray, t: np.ndarray) -> Morphism:
        x = t * scaling % self.ring.q
        return self._make(S, T, [layout.block(x, b) for b in range(len(layout.shapes))])

    def _solve(self, S: ObjectHandle, T: ObjectHandle, rows_fn, A: Morphism, B: Morphism) -> Optional[Morphism]:
        layout = self.layout(S, T)
        C, rhs, scaling = self._system(S, T, layout, rows_fn(A, B, layout))
        t = self.ring.solve(C, rhs)
        if t is None:
            return None
        return self._from_vector(S, T, layout, scaling, t)

    def _ambiguity(self, S: ObjectHandle, T: ObjectHandle, rows_fn, A: Morphism, B: Morphism) -> List[Morphism]:
        layout = self.layout(S, T)
        C, _, scaling = self._system(S, T, layout, rows_fn(A, B, layout))
        gens = self.ring.nullspace(C)
        out = [self._from_vector(S, T, layout, scaling, gens[:, g]) for g in range(gens.shape[1])]
        return [f for f in out if not self.is_zero(f)]

    def solve_precompose(self, A: Morphism, B: Morphism) -> Optional[Morphism]:
        """Some X : cod(A) -> cod(B) with X . A = B, or None."""
        if A.domain != B.domain:
            raise DomainMismatch(A.domain, B.domain)
        return self._solve(A.codomain, B.codomain, self._rows_precompose, A, B)

    def solve_postcompose(self, A: Morphism, B: Morphism) -> Optional[Morphism]:
        """Some X : dom(B) -> dom(A) with A . X = B, or None."""
        if A.codomain != B.codomain:
            raise DomainMismatch(A.codomain, B.codomain)
        return self._solve(B.domain, A.domain, self._rows_postcompose, A, B)

    def precompose_is_unique(self, A: Morphism, T: ObjectHandle) -> bool:
        """True iff X . A = 0 forces X = 0 for X : cod(A) -> T."""
        zero = self.zero_morphism(A.domain, T)
        return not self._ambiguity(A.codomain, T, self._rows_precompose, A, zero)

    def postcompose_is_unique(self, A: Morphism, S: ObjectHandle) -> bool:
        """True iff A . X = 0 forces X = 0 for X : S -> dom(A)."""
        zero = self.zero_morphism(S, A.codomain)
        return not self._ambiguity(S, A.domain, self._rows_postcompose, A, zero)

    def hom_basis(self, S: ObjectHandle, T: ObjectHandle) -> List[Morphism]:
        """A generating set of Hom(S, T)."""
        layout = self.layout(S, T)
        C, _, scaling = self._system(S, T, layout, [])
        gens = self.ring.nullspace(C)
        out = [self._from_vector(S, T, layout, scaling, gens[:, g]) for g in range(gens.shape[1])]
        return [f for f in out if not self.is_zero(f)]

    def random_morphism(self, S: ObjectHandle, T: ObjectHandle, rng: np.random.Generator) -> Morphism:
        out = self.zero_morphism(S, T)
        for f in self.hom_basis(S, T):
            out = self.add(out, self.scale(int(rng.integers(0, self.ring.q)), f))
        return out

    # ---------------------------------------------------------- isomorphisms

    def invert(self, f: Morphism) -> Optional[Morphism]:
        if self.invariants(f.domain) != self.invariants(f.codomain):
            return None
        g = self.solve_postcompose(f, self.identity(f.codomain))
        if g is None or not self.is_identity(self.compose(g, f)):
            return None
        return g

    def is_isomorphism(self, f: Morphism) -> Optional[IsoCertificate]:
        g = self.invert(f)
        if g is None:
            return None
        return IsoCertificate(forward=f, backward=g)


def verify_iso(model: AdditiveModel, cert: IsoCertificate) -> bool:
    """Recompute both composites; trusts nothing but composition."""
    f, g = cert.forward, cert.backward
    if f.domain != g.codomain or f.codomain != g.domain:
        return False
    return model.is_identity(model.compose(g, f)) and model.is_identity(model.compose(f, g))


def verify_witness(model: AdditiveModel, w: BiproductWitness) -> bool:
    E, F, G = w.left, w.middle, w.right
    shapes_ok = (w.mu.domain, w.mu.codomain, w.pi.domain, w.pi.codomain) == (E, F, F, G) \
        and (w.mu_tilde.domain, w.mu_tilde.codomain, w.pi_tilde.domain, w.pi_tilde.codomain) == (F, E, G, F)
    if not shapes_ok:
        return False
    return model.is_identity(model.compose(w.mu_tilde, w.mu)) \
        and model.is_identity(model.compose(w.pi, w.pi_tilde)) \
        and model.is_identity(model.add(model.compose(w.mu, w.mu_tilde), model.compose(w.pi_tilde, w.pi))) \
        and model.is_zero(model.compose(w.pi, w.mu)) \
        and model.is_zero(model.compose(w.mu_tilde, w.pi_tilde))

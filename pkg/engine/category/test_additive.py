import numpy as np
import pytest

from hypothesis import given, settings, strategies as st

from . import verify_iso, verify_witness
from ..misc.errors import DomainMismatch, InvalidMorphism, ShapeMismatch
from ..models import LinRep, CyclicMod


def test_sum_wraps_modulo_codomain(z9):
    X = z9.cyclic(2)
    f = z9.morphism(X, X, [[[4]]])
    g = z9.morphism(X, X, [[[5]]])
    assert z9.is_zero(z9.add(f, g))


def test_entries_are_read_modulo_codomain(z4):
    X = z4.cyclic(2)
    assert z4.equal(z4.morphism(X, X, [[[1]]]), z4.morphism(X, X, [[[5]]]))


def test_isomorphism_detection(z4):
    X = z4.cyclic(2)
    assert z4.is_isomorphism(z4.morphism(X, X, [[[2]]])) is None
    assert z4.is_isomorphism(z4.zero_morphism(X, X)) is None

    cert = z4.is_isomorphism(z4.morphism(X, X, [[[3]]]))
    assert cert is not None and verify_iso(z4, cert)


def test_divisibility_constraint(z4):
    # Z/2 -> Z/4 must land in 2Z/4
    with pytest.raises(InvalidMorphism):
        z4.morphism(z4.cyclic(1), z4.cyclic(2), [[[1]]])
    assert not z4.is_zero(z4.morphism(z4.cyclic(1), z4.cyclic(2), [[[2]]]))


def test_linrep_identity_blocks(linrep):
    X = linrep.interval(1, 2)
    one = linrep.identity(X)
    assert [b.tolist() for b in one.data] == [[[1]], [[1]], []]
    assert linrep.is_identity(one)


def test_linrep_commutativity_is_enforced(linrep_a2):
    S = linrep_a2.interval(1, 2)
    T = linrep_a2.rep((1, 1), [[[0]]])
    with pytest.raises(InvalidMorphism):
        linrep_a2.morphism(S, T, [[[1]], [[1]]])


def test_linrep_biproduct(linrep_a2):
    w = linrep_a2.biproduct(linrep_a2.simple(1), linrep_a2.simple(2))
    assert linrep_a2.dims(w.middle) == (1, 1)
    assert not linrep_a2.maps(w.middle)[0].any()
    assert verify_witness(linrep_a2, w)


def test_cyclicmod_biproduct_sorts_exponents(z4):
    w = z4.biproduct(z4.cyclic(1), z4.cyclic(2))
    assert z4.exponents(w.middle) == (2, 1)
    assert verify_witness(z4, w)
    assert verify_witness(z4, w.swapped())


def test_biproduct_with_zero(z4):
    X = z4.cyclic(2, 1)
    w = z4.biproduct(X, z4.zero_object)
    assert w.middle == X
    assert z4.is_identity(w.mu)


def test_pair_in_and_out(z4, rng):
    X, E, G = z4.cyclic(2), z4.cyclic(1), z4.cyclic(2, 2)
    w = z4.biproduct(E, G)
    f, g = z4.random_morphism(X, E, rng), z4.random_morphism(X, G, rng)
    h = z4.pair_in(w, f, g)
    assert z4.equal(z4.compose(w.mu_tilde, h), f)
    assert z4.equal(z4.compose(w.pi, h), g)

    back = z4.pair_out(w, z4.random_morphism(E, X, rng), z4.random_morphism(G, X, rng))
    assert back.domain == w.middle and back.codomain == X


def test_domain_mismatch(z4):
    f = z4.identity(z4.cyclic(1))
    g = z4.identity(z4.cyclic(2))
    with pytest.raises(DomainMismatch):
        z4.compose(g, f)


def test_shape_mismatch(z4):
    X, Y = z4.cyclic(1), z4.cyclic(2, 1)
    with pytest.raises(ShapeMismatch):
        z4.add(z4.identity(X), z4.identity(Y))
    with pytest.raises(ShapeMismatch):
        z4.morphism(X, Y, [[[1, 0, 0]]])


def test_solve_precompose_and_postcompose(z4, rng):
    X, Y = z4.cyclic(2, 1), z4.cyclic(2)
    A = z4.embed_into_injective(X)
    B = z4.random_morphism(X, Y, rng)
    # cod(A) is injective, so B extends along A
    C = z4.solve_precompose(A, B)
    assert C is not None and z4.equal(z4.compose(C, A), B)

    P = z4.biproduct(z4.cyclic(2), z4.cyclic(1)).pi
    Q = z4.identity(P.codomain)
    R = z4.solve_postcompose(P, Q)
    assert R is not None and z4.equal(z4.compose(P, R), Q)


def test_unsolvable_precompose(z4):
    # the zero map cannot be extended to the identity of Z/2
    X = z4.cyclic(1)
    assert z4.solve_precompose(z4.zero_morphism(X, X), z4.identity(X)) is None


def test_hom_basis_of_cyclic_modules(z4):
    basis = z4.hom_basis(z4.cyclic(1), z4.cyclic(2))
    assert len(basis) == 1
    assert basis[0].data[0].tolist() == [[2]]


MODELS = [LinRep(p=2, n=3, max_dim=2), LinRep(p=3, n=2, max_dim=2),
    CyclicMod(p=2, k=2, max_summands=3), CyclicMod(p=3, k=2, max_summands=2)]


@settings(deadline=None, max_examples=30)
@given(st.sampled_from(MODELS), st.integers(0, 2 ** 32 - 1))
def test_composition_is_associative(model, seed):
    rng = np.random.default_rng(seed)
    W, X, Y, Z = (model.random_object(rng) for _ in range(4))
    f = model.random_morphism(W, X, rng)
    g = model.random_morphism(X, Y, rng)
    h = model.random_morphism(Y, Z, rng)
    assert model.equal(model.compose(h, model.compose(g, f)), model.compose(model.compose(h, g), f))
    assert model.equal(model.compose(model.identity(X), f), f)
    assert model.equal(model.compose(f, model.identity(W)), f)


@settings(deadline=None, max_examples=30)
@given(st.sampled_from(MODELS), st.integers(0, 2 ** 32 - 1))
def test_composition_is_bilinear(model, seed):
    rng = np.random.default_rng(seed)
    X, Y, Z = (model.random_object(rng) for _ in range(3))
    f1, f2 = model.random_morphism(X, Y, rng), model.random_morphism(X, Y, rng)
    g = model.random_morphism(Y, Z, rng)
    assert model.equal(model.compose(g, model.add(f1, f2)),
        model.add(model.compose(g, f1), model.compose(g, f2)))
    assert model.is_zero(model.add(f1, model.negate(f1)))
    assert model.morphism_defect(f1) is None

import numpy as np
import pytest

from hypothesis import given, settings, strategies as st

from . import pushout, pullback, pushout_mediator, pullback_mediator, verify_pair
from ..misc.errors import DomainMismatch, NotAdmissible
from ..models import LinRep, CyclicMod


def test_pushout_of_doubling_along_itself(z4):
    mu = z4.embed_into_injective(z4.cyclic(1))
    sq = pushout(z4, mu, mu)
    assert z4.exponents(sq.corner) == (2, 1)
    assert z4.equal(z4.compose(sq.h, sq.mu), z4.compose(sq.h_prime, sq.mu_prime))
    assert z4.is_admissible_mono(sq.h_prime)
    assert verify_pair(z4, sq.presentation)


def test_pushout_along_zero_map(z4):
    mu = z4.embed_into_injective(z4.cyclic(1))
    sq = pushout(z4, mu, z4.zero_morphism(mu.domain, z4.zero_object))
    # pushing out along E -> 0 is the cokernel of mu
    assert z4.exponents(sq.corner) == (1, )


def test_pushout_rejects_bad_input(z4, split_z4):
    mu = z4.embed_into_injective(z4.cyclic(1))
    with pytest.raises(NotAdmissible):
        pushout(split_z4, mu, mu)
    with pytest.raises(DomainMismatch):
        pushout(z4, mu, z4.identity(z4.cyclic(2)))


def test_pushout_mediator(z4, rng):
    mu = z4.embed_into_injective(z4.cyclic(1))
    f = z4.morphism(mu.domain, z4.cyclic(1), [[[1]]])
    sq = pushout(z4, mu, f)
    X = z4.cyclic(2, 2)
    b = z4.random_morphism(sq.mu_prime.codomain, X, rng)
    # a . mu = b . f has a solution because X is injective
    a = z4.solve_precompose(mu, z4.compose(b, f))
    m = pushout_mediator(z4, sq, a, b)
    assert m.unique
    assert z4.equal(z4.compose(m.morphism, sq.h), a)
    assert z4.equal(z4.compose(m.morphism, sq.h_prime), b)


def test_pullback_of_projection(linrep):
    w = linrep.biproduct(linrep.simple(1), linrep.interval(1, 2))
    f = linrep.identity(w.right)
    sq = pullback(linrep, w.pi, f)
    assert linrep.dims(sq.corner) == linrep.dims(w.middle)
    assert linrep.equal(linrep.compose(sq.pi, sq.pr), linrep.compose(sq.f, sq.pr_prime))
    assert linrep.is_admissible_epi(sq.pr_prime)


def test_pullback_along_zero_object(z4):
    pi = z4.cokernel(z4.embed_into_injective(z4.cyclic(1)))
    sq = pullback(z4, pi, z4.zero_morphism(z4.zero_object, pi.codomain))
    # pulling back along 0 -> G is the kernel of pi
    assert z4.exponents(sq.corner) == (1, )


def test_pullback_mediator(z4, rng):
    pi = z4.cokernel(z4.embed_into_injective(z4.cyclic(1)))
    f = z4.identity(pi.codomain)
    sq = pullback(z4, pi, f)
    X = z4.cyclic(2)
    a = z4.random_morphism(X, pi.domain, rng)
    b = z4.compose(pi, a)
    m = pullback_mediator(z4, sq, a, b)
    assert m.unique
    assert z4.equal(z4.compose(sq.pr, m.morphism), a)
    assert z4.equal(z4.compose(sq.pr_prime, m.morphism), b)


def test_pullback_rejects_non_admissible_epi(z4):
    X = z4.cyclic(2)
    with pytest.raises(NotAdmissible):
        pullback(z4, z4.morphism(X, X, [[[2]]]), z4.identity(X))


MODELS = [LinRep(p=2, n=3, max_dim=2), CyclicMod(p=2, k=2, max_summands=3), CyclicMod(p=3, k=2, max_summands=2)]


@settings(deadline=None, max_examples=30)
@given(st.sampled_from(MODELS), st.integers(0, 2 ** 32 - 1))
def test_pushout_legs_are_admissible(model, seed):
    rng = np.random.default_rng(seed)
    E = model.random_object(rng)
    mu = model.random_embedding(E, rng)
    f = model.random_morphism(E, model.random_object(rng), rng)
    sq = pushout(model, mu, f)
    assert model.is_admissible_mono(sq.h_prime)
    assert model.equal(model.compose(sq.h, mu), model.compose(sq.h_prime, f))
    # both squares share the cokernel: C / I' = I / E
    assert model.length(sq.corner) - model.length(f.codomain) == model.length(mu.codomain) - model.length(E)


@settings(deadline=None, max_examples=30)
@given(st.sampled_from(MODELS), st.integers(0, 2 ** 32 - 1))
def test_pullback_legs_are_admissible(model, seed):
    rng = np.random.default_rng(seed)
    pi = model.cokernel(model.random_embedding(model.random_object(rng), rng))
    f = model.random_morphism(model.random_object(rng), pi.codomain, rng)
    sq = pullback(model, pi, f)
    assert model.is_admissible_epi(sq.pr_prime)
    assert model.equal(model.compose(pi, sq.pr), model.compose(f, sq.pr_prime))


@pytest.mark.parametrize('model', MODELS, ids=['linrep', 'z4', 'z9'])
def test_pushout_is_universal_on_random_cones(model):
    for seed in range(10):
        rng = np.random.default_rng(seed)
        E = model.random_object(rng)
        mu = model.random_embedding(E, rng)
        f = model.random_morphism(E, model.random_object(rng), rng)
        sq = pushout(model, mu, f)

        # cones into an injective: pick b freely, then a extends b . f along mu
        X = model.embed_into_injective(model.random_object(rng)).codomain
        b = model.random_morphism(f.codomain, X, rng)
        a = model.solve_precompose(mu, model.compose(b, f))
        assert a is not None

        m = pushout_mediator(model, sq, a, b)
        assert m.unique
        assert model.equal(model.compose(m.morphism, sq.h), a)
        assert model.equal(model.compose(m.morphism, sq.h_prime), b)

import numpy as np
import pytest

from hypothesis import given, settings, strategies as st

from . import LinRep
from ..category import AdditiveModel
from ..exact import retract_witness, is_injective_by_lifting
from ..misc.errors import InvalidObject


def test_interval_decomposition_of_zero_map(linrep_a2):
    X = linrep_a2.rep((1, 1), [[[0]]])
    assert linrep_a2.interval_decomposition(X).intervals() == [(1, 1), (2, 2)]


def test_interval_decomposition_of_full_rank_map(linrep_a2):
    X = linrep_a2.rep((2, 1), [[[1, 2]]])
    dec = linrep_a2.interval_decomposition(X)
    assert dec.intervals() == [(1, 1), (1, 2)]
    assert dec.dims() == (2, 1)


@pytest.mark.parametrize('a, b, injective', [
    (1, 1, True), (1, 2, True), (1, 3, True),
    (2, 2, False), (2, 3, False), (3, 3, False),
])
def test_injective_intervals(linrep, a, b, injective):
    assert linrep.is_injective(linrep.interval(a, b)) is injective


def test_injective_sum(linrep):
    assert linrep.is_injective(linrep.injective([1, 3, 3]))
    assert linrep.dims(linrep.injective([1, 3, 3])) == (3, 2, 2)


def test_embedding_into_injective(linrep):
    X = linrep.interval(2, 3)
    emb = linrep.embed_into_injective(X)
    assert linrep.dims(emb.codomain) == linrep.injective_hull_dims(X) == (2, 2, 1)
    assert linrep.is_injective(emb.codomain)
    assert linrep.is_admissible_mono(emb)
    assert linrep.is_zero_object(linrep.kernel(emb).domain)


def test_cokernel_of_embedding(linrep):
    # [2, 2] >-> [1, 2] ->> [1, 1]
    emb = linrep.embed_into_injective(linrep.simple(2))
    coker = linrep.cokernel(emb)
    assert linrep.dims(coker.codomain) == (1, 0, 0)
    assert linrep.is_zero(linrep.compose(coker, emb))
    assert linrep.is_admissible_epi(coker)


def test_composite_structure_map(linrep):
    X = linrep.interval(1, 3)
    assert linrep.composite(X, 1, 3).tolist() == [[1]]
    assert linrep.composite(X, 2, 2).tolist() == [[1]]


def test_rejects_malformed_objects(linrep):
    with pytest.raises(InvalidObject):
        linrep.rep((1, 1), [])
    with pytest.raises(InvalidObject):
        linrep.rep((1, 1, 1), [[[1]], [[1, 1]]])
    with pytest.raises(InvalidObject):
        linrep.obj(((1, -1, 0), ((), ())))


MODELS = [LinRep(p=2, n=3, max_dim=2), LinRep(p=3, n=2, max_dim=3), LinRep(p=2, n=4, max_dim=1)]


@settings(deadline=None, max_examples=40)
@given(st.sampled_from(MODELS), st.integers(0, 2 ** 32 - 1))
def test_interval_multiplicities_recover_dimensions(model, seed):
    X = model.random_object(np.random.default_rng(seed))
    assert model.interval_decomposition(X).dims() == model.dims(X)


@settings(deadline=None, max_examples=40)
@given(st.sampled_from(MODELS), st.integers(0, 2 ** 32 - 1))
def test_injectivity_agrees_with_lifting(model, seed):
    rng = np.random.default_rng(seed)
    X = model.random_object(rng)
    assert (retract_witness(model, X) is not None) == model.is_injective(X)

    if model.is_injective(X):
        E = model.random_object(rng)
        mu = model.random_embedding(E, rng)
        f = model.random_morphism(E, X, rng)
        g = is_injective_by_lifting(model, X, mu, f)
        assert g is not None and model.equal(model.compose(g, mu), f)


@settings(deadline=None, max_examples=40)
@given(st.sampled_from(MODELS), st.integers(0, 2 ** 32 - 1))
def test_injectivity_matches_interval_starts(model, seed):
    X = model.random_object(np.random.default_rng(seed))
    starts = [a for (a, _), m in model.interval_decomposition(X).multiplicities.items() if m]
    assert model.is_injective(X) == all(a == 1 for a in starts)


@settings(deadline=None, max_examples=30)
@given(st.sampled_from(MODELS), st.integers(0, 2 ** 32 - 1))
def test_vertexwise_lift_solves_the_hom_system(model, seed):
    rng = np.random.default_rng(seed)
    E = model.random_object(rng)
    mu = model.random_embedding(E, rng)
    I = model.injective([int(j) for j in rng.integers(1, model.n + 1, size=3)])
    f = model.random_morphism(E, I, rng)

    g = model.solve_precompose(mu, f)
    assert model.morphism_defect(g) is None
    assert model.equal(model.compose(g, mu), f)
    assert AdditiveModel.solve_precompose(model, mu, f) is not None


def test_lift_along_a_wide_presentation(linrep):
    X = linrep.rep((4, 4, 4), [np.eye(4, dtype=np.int64), np.zeros((4, 4), dtype=np.int64)])
    emb = linrep.embed_into_injective(X)
    wide = linrep.biproduct(emb.codomain, emb.codomain)
    mu = linrep.pair_in(wide, emb, emb)
    # (12, 8, 4) (+) (12, 8, 4): the full Hom system would have hundreds of unknowns
    g = linrep.solve_precompose(mu, emb)
    assert linrep.equal(linrep.compose(g, mu), emb)

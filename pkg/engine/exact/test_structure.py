import numpy as np
import pytest

from hypothesis import given, settings, strategies as st

from . import (
    KernelCokernelPair,
    cokernel,
    kernel,
    pair_from_mono,
    pair_from_epi,
    pair_defects,
    verify_pair,
    factor_through_cokernel,
    factor_through_kernel,
    admissible_factorization,
    image,
)
from ..misc.errors import NotAdmissible, NotAnnihilating, NotAdmissibleMorphism, NoSolution
from ..models import LinRep, CyclicMod


def test_cokernel_of_doubling(z4):
    mu = z4.embed_into_injective(z4.cyclic(1))
    c = cokernel(z4, mu)
    assert z4.exponents(c.codomain) == (1, )
    assert verify_pair(z4, pair_from_mono(z4, mu))


def test_cokernel_requires_admissible_mono(z4, split_z4):
    mu = z4.embed_into_injective(z4.cyclic(1))
    with pytest.raises(NotAdmissible):
        cokernel(split_z4, mu)
    with pytest.raises(NotAdmissible):
        cokernel(z4, z4.zero_morphism(z4.cyclic(1), z4.cyclic(1)))


def test_kernel_of_projection(linrep):
    w = linrep.biproduct(linrep.simple(1), linrep.interval(1, 2))
    k = kernel(linrep, w.pi)
    assert linrep.dims(k.domain) == (1, 0, 0)
    assert verify_pair(linrep, pair_from_epi(linrep, w.pi))


def test_kernel_requires_admissible_epi(linrep):
    f = linrep.zero_morphism(linrep.simple(1), linrep.simple(1))
    with pytest.raises(NotAdmissible):
        kernel(linrep, f)


def test_pair_defects(z4):
    mu = z4.embed_into_injective(z4.cyclic(1))
    c = z4.cokernel(mu)
    assert pair_defects(z4, KernelCokernelPair(mono=mu, epi=c)) == []

    # the zero map is not a cokernel
    X = c.codomain
    bad = KernelCokernelPair(mono=mu, epi=z4.compose(z4.zero_morphism(X, X), c))
    assert pair_defects(z4, bad)
    assert pair_defects(z4, KernelCokernelPair(mono=mu, epi=z4.identity(z4.cyclic(1))))[0] \
        == 'mono and epi are not composable'


def test_factor_through_cokernel(z4, rng):
    pair = pair_from_mono(z4, z4.embed_into_injective(z4.cyclic(1)))
    Y = z4.cyclic(2, 1)
    psi = z4.random_morphism(pair.right, Y, rng)
    q = z4.compose(psi, pair.epi)
    got = factor_through_cokernel(z4, q, pair)
    assert z4.equal(got, psi)

    with pytest.raises(NotAnnihilating):
        factor_through_cokernel(z4, z4.identity(pair.middle), pair)


def test_factor_through_cokernel_requires_uniqueness(z4):
    pair = pair_from_mono(z4, z4.embed_into_injective(z4.cyclic(1)))
    zero = z4.zero_morphism(pair.middle, pair.right)
    # every psi : G -> G satisfies psi . 0 = 0
    with pytest.raises(NoSolution):
        factor_through_cokernel(z4, zero, KernelCokernelPair(mono=pair.mono, epi=zero))


def test_factor_through_kernel_requires_uniqueness(z4):
    pair = pair_from_mono(z4, z4.embed_into_injective(z4.cyclic(1)))
    zero = z4.zero_morphism(pair.left, pair.middle)
    with pytest.raises(NoSolution):
        factor_through_kernel(z4, zero, KernelCokernelPair(mono=zero, epi=pair.epi))


def test_factor_through_kernel(linrep, rng):
    pair = pair_from_mono(linrep, linrep.embed_into_injective(linrep.simple(2)))
    B = linrep.interval(2, 3)
    g = linrep.random_morphism(B, pair.left, rng)
    q = linrep.compose(pair.mono, g)
    assert linrep.equal(factor_through_kernel(linrep, q, pair), g)

    with pytest.raises(NotAnnihilating):
        factor_through_kernel(linrep, linrep.identity(pair.middle), pair)


def test_image_of_rank_one_map(linrep_a2):
    X = linrep_a2.rep((1, 1), [[[1]]])
    Y = linrep_a2.rep((1, 1), [[[0]]])
    # kills vertex 2, keeps vertex 1
    f = linrep_a2.morphism(X, Y, [[[1]], [[0]]])
    fact = admissible_factorization(linrep_a2, f)
    assert linrep_a2.dims(fact.image) == (1, 0)
    assert linrep_a2.equal(linrep_a2.compose(fact.mono_part, fact.epi_part), f)
    assert image(linrep_a2, f) == fact.image


def test_non_admissible_factorization(z4, split_z4):
    # Z/4 --2--> Z/4 factors through Z/2 by non-split maps
    X = z4.cyclic(2)
    f = z4.morphism(X, X, [[[2]]])
    assert z4.exponents(admissible_factorization(z4, f).image) == (1, )
    with pytest.raises(NotAdmissibleMorphism):
        admissible_factorization(split_z4, f)


MODELS = [LinRep(p=2, n=3, max_dim=2), CyclicMod(p=2, k=2, max_summands=3), CyclicMod(p=3, k=2, max_summands=2)]


@settings(deadline=None, max_examples=30)
@given(st.sampled_from(MODELS), st.integers(0, 2 ** 32 - 1))
def test_embeddings_give_kernel_cokernel_pairs(model, seed):
    rng = np.random.default_rng(seed)
    mu = model.random_embedding(model.random_object(rng), rng)
    pair = pair_from_mono(model, mu)
    assert verify_pair(model, pair)
    assert verify_pair(model, pair_from_epi(model, pair.epi))

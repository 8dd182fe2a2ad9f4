import numpy as np
import pytest

from . import Sampler, sample_admissible_mono, sample_admissible_epi, sample_iso, mutate_structure
from ..misc.errors import GeneratorExhausted


@pytest.mark.parametrize('fixture', ['linrep', 'z4', 'split_z4'])
def test_samples_are_admissible(request, fixture):
    model = request.getfixturevalue(fixture)
    rng = np.random.default_rng(11)
    for _ in range(5):
        assert model.is_admissible_mono(sample_admissible_mono(model, rng))
        assert model.is_admissible_epi(sample_admissible_epi(model, rng))


def test_samples_out_of_a_given_object(z9):
    rng = np.random.default_rng(2)
    X = z9.cyclic(2, 1)
    assert sample_admissible_mono(z9, rng, X).domain == X
    assert sample_admissible_epi(z9, rng, X).domain == X


def test_sampled_isomorphisms(linrep, z9):
    rng = np.random.default_rng(5)
    for model, X in ((linrep, linrep.interval(1, 3)), (z9, z9.cyclic(2, 1))):
        assert model.is_isomorphism(sample_iso(model, rng, X)) is not None


def test_mutated_sampler_respects_mutation(z4):
    model = mutate_structure(z4, 'break-pushout-admissibility')
    rng = np.random.default_rng(0)
    for _ in range(5):
        mu = sample_admissible_mono(model, rng)
        assert not (z4.is_zero_object(mu.domain) and not z4.is_zero_object(mu.codomain))


def test_exhausted_attempts(z4):
    with pytest.raises(GeneratorExhausted):
        Sampler(z4, np.random.default_rng(0), max_attempts=0).admissible_mono()


def test_sampler_is_seeded(linrep):
    a = Sampler(linrep, np.random.default_rng(3)).admissible_mono()
    b = Sampler(linrep, np.random.default_rng(3)).admissible_mono()
    assert a == b

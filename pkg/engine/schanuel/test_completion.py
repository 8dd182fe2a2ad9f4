import pytest

from . import pushout_completion, schanuel_isomorphism, schanuel_with_base_iso, verify_certificate
from ..category import IsoCertificate
from ..exact import pair_from_mono, verify_pair
from ..misc.errors import BaseMismatch, BadBaseIso, NotInjectiveMiddle


def _presentations(model, E):
    """E >-> I ->> F and E >-> I (+) I ->> F'."""
    emb = model.embed_into_injective(E)
    w = model.biproduct(emb.codomain, emb.codomain)
    wide = model.pair_in(w, emb, model.zero_morphism(E, emb.codomain))
    return pair_from_mono(model, emb), pair_from_mono(model, wide)


def test_pushout_completion(z4):
    pair1, pair2 = _presentations(z4, z4.cyclic(1))
    comp = pushout_completion(z4, pair1, pair2)
    assert verify_pair(z4, comp.pair) and verify_pair(z4, comp.pair_prime)
    assert z4.equal(z4.compose(comp.p, comp.square.h), pair1.epi)
    assert z4.is_zero(z4.compose(comp.p_prime, comp.square.h))


def test_schanuel_isomorphism(z4):
    pair1, pair2 = _presentations(z4, z4.cyclic(1))
    cert = schanuel_isomorphism(z4, pair1, pair2)
    assert verify_certificate(z4, cert)
    # I (+) F' = Z/4 (+) (Z/4 (+) Z/2), I' (+) F = (Z/4 (+) Z/4) (+) Z/2
    assert z4.exponents(cert.domain) == z4.exponents(cert.codomain) == (2, 2, 1)


def test_schanuel_isomorphism_on_linrep(linrep, rng):
    E = linrep.interval(2, 3)
    pair1 = pair_from_mono(linrep, linrep.embed_into_injective(E))
    pair2 = pair_from_mono(linrep, linrep.random_embedding(E, rng))
    cert = schanuel_isomorphism(linrep, pair1, pair2)
    assert verify_certificate(linrep, cert)


def test_schanuel_rejects_different_bases(z4):
    pair1, _ = _presentations(z4, z4.cyclic(1))
    pair2, _ = _presentations(z4, z4.cyclic(1, 1))
    with pytest.raises(BaseMismatch):
        schanuel_isomorphism(z4, pair1, pair2)


def test_schanuel_rejects_non_injective_middle(z4):
    E = z4.cyclic(1)
    pair1, _ = _presentations(z4, E)
    trivial = pair_from_mono(z4, z4.identity(E))
    with pytest.raises(NotInjectiveMiddle):
        schanuel_isomorphism(z4, pair1, trivial)


def test_schanuel_with_base_iso(z9):
    E = z9.cyclic(1)
    pair = pair_from_mono(z9, z9.embed_into_injective(E))
    two = z9.morphism(E, E, [[[2]]])
    cert = schanuel_with_base_iso(z9, pair, pair, IsoCertificate(forward=two, backward=two))
    assert verify_certificate(z9, cert)

    one = z9.identity(E)
    with pytest.raises(BadBaseIso):
        schanuel_with_base_iso(z9, pair, pair, IsoCertificate(forward=one, backward=two))


def test_completion_over_the_zero_object(z4):
    I, I_prime = z4.cyclic(2), z4.cyclic(2, 2)
    pair1 = pair_from_mono(z4, z4.zero_morphism(z4.zero_object, I))
    pair2 = pair_from_mono(z4, z4.zero_morphism(z4.zero_object, I_prime))

    comp = pushout_completion(z4, pair1, pair2)
    assert verify_pair(z4, comp.pair) and verify_pair(z4, comp.pair_prime)
    assert z4.exponents(comp.square.corner) == (2, 2, 2)

    cert = schanuel_isomorphism(z4, pair1, pair2)
    assert verify_certificate(z4, cert)

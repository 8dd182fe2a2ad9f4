"""
Schanuel isomorphisms through the pushout corner.
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.

Given E >-> I ->> F and E >-> I' ->> F' with I, I' injective, the pushout C
of the two monos splits both ways, C = I (+) F' and C = I' (+) F, and the
certificate I (+) F' -> C -> I' (+) F is assembled from those splittings.
"""

from ..category import IsoCertificate, verify_iso
from ..exact import KernelCokernelPair, pushout, factor_through_cokernel, split_from_section, \
    left_inverse_if_injective, pair_defects
from ..misc.errors import BaseMismatch, NotInjectiveMiddle, BadBaseIso, VerificationFailed
from .types import PushoutCompletion


__all__ = ['pushout_completion', 'schanuel_isomorphism', 'schanuel_with_base_iso', 'verify_certificate']


def verify_certificate(model, cert: IsoCertificate) -> bool:
    return verify_iso(model, cert)


def pushout_completion(model, pair1: KernelCokernelPair, pair2: KernelCokernelPair, check: bool=True) -> PushoutCompletion:
    if pair1.left != pair2.left:
        raise BaseMismatch(pair1.left, pair2.left)

    square = pushout(model, pair1.mono, pair2.mono)
    w = square.witness
    F, F_prime = pair1.right, pair2.right
    I, I_prime = pair1.middle, pair2.middle

    p = factor_through_cokernel(model,
        model.pair_out(w, pair1.epi, model.zero_morphism(I_prime, F)), square.presentation)
    p_prime = factor_through_cokernel(model,
        model.pair_out(w, model.zero_morphism(I, F_prime), pair2.epi), square.presentation)
    out = PushoutCompletion(square=square, p=p, p_prime=p_prime)

    if check:
        h, h_prime = square.h, square.h_prime
        if not (model.equal(model.compose(p, h), pair1.epi) and model.is_zero(model.compose(p, h_prime))
                and model.equal(model.compose(p_prime, h_prime), pair2.epi)
                and model.is_zero(model.compose(p_prime, h))):
            raise VerificationFailed('pushout completion identities')
        for name, pair in (('(h, p\')', out.pair), ('(h\', p)', out.pair_prime)):
            defects = pair_defects(model, pair)
            if defects:
                raise VerificationFailed(f'{name}: {"; ".join(defects)}')
    return out


def schanuel_isomorphism(model, pair1: KernelCokernelPair, pair2: KernelCokernelPair, check: bool=True) -> IsoCertificate:
    """I (+) F' -> I' (+) F"""
    if pair1.left != pair2.left:
        raise BaseMismatch(pair1.left, pair2.left)
    for middle in (pair1.middle, pair2.middle):
        if not model.is_injective(middle):
            raise NotInjectiveMiddle(middle)

    comp = pushout_completion(model, pair1, pair2, check=check)
    h, h_prime = comp.square.h, comp.square.h_prime

    s = left_inverse_if_injective(model, h)
    s_prime = left_inverse_if_injective(model, h_prime)
    if s is None or s_prime is None:
        raise VerificationFailed('pushout legs have no left inverse')

    # C = I (+) F' and C = I' (+) F
    split = split_from_section(model, comp.pair, s)
    split_prime = split_from_section(model, comp.pair_prime, s_prime)

    left = model.biproduct(pair1.middle, pair2.right)
    right = model.biproduct(pair2.middle, pair1.right)

    into_corner = model.pair_out(left, h, split.pi_tilde)
    out_of_corner = model.pair_in(right, s_prime, comp.p)
    back_into_corner = model.pair_out(right, h_prime, split_prime.pi_tilde)
    back_out_of_corner = model.pair_in(left, s, comp.p_prime)

    cert = IsoCertificate(
        forward=model.compose(out_of_corner, into_corner),
        backward=model.compose(back_out_of_corner, back_into_corner),
    )
    if not verify_certificate(model, cert):
        raise VerificationFailed('schanuel certificate')
    return cert


def schanuel_with_base_iso(model, pair1: KernelCokernelPair, pair2: KernelCokernelPair,
        base: IsoCertificate, check: bool=True) -> IsoCertificate:
    """Same certificate when the two kernels are only isomorphic, base : E -> E'."""
    if not verify_iso(model, base):
        raise BadBaseIso()
    if base.domain != pair1.left or base.codomain != pair2.left:
        raise BaseMismatch(pair1.left, pair2.left)

    moved = KernelCokernelPair(mono=model.compose(pair2.mono, base.forward), epi=pair2.epi)
    return schanuel_isomorphism(model, pair1, moved, check=check)

"""
Split pairs, direct sums of pairs and lifting into injectives.
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.
"""

from typing import Optional

from ..category import ObjectHandle, Morphism, BiproductWitness, verify_witness
from ..misc.errors import DomainMismatch, NotAdmissible, NotASection, NotInjectiveTarget, NoSolution, \
    BadComponentLift, VerificationFailed
from .types import KernelCokernelPair
from .structure import factor_through_cokernel


__all__ = [
    'split_from_section', 'sum_with_object', 'lift', 'left_inverse_if_injective',
    'injective_of_summands', 'is_injective_by_lifting', 'retract_witness',
]


def split_from_section(model, pair: KernelCokernelPair, mu_tilde: Morphism) -> BiproductWitness:
    """Complete a pair whose mono has the left inverse mu_tilde to a biproduct witness."""
    mu = pair.mono
    if mu_tilde.domain != pair.middle or mu_tilde.codomain != pair.left \
            or not model.is_identity(model.compose(mu_tilde, mu)):
        raise NotASection()

    F = pair.middle
    pi_tilde = factor_through_cokernel(model, model.subtract(model.identity(F), model.compose(mu, mu_tilde)), pair)
    w = BiproductWitness(left=pair.left, middle=F, right=pair.right,
        mu=mu, pi=pair.epi, mu_tilde=mu_tilde, pi_tilde=pi_tilde)
    if not verify_witness(model, w):
        raise VerificationFailed('split witness')
    return w


def sum_with_object(model, pair: KernelCokernelPair, A: ObjectHandle) -> KernelCokernelPair:
    """E (+) A >-> F (+) A ->> G from E >-> F ->> G.

    The mono is tau~ . mu . iota~ + theta . rho where (iota, rho) split E (+) A
    and F (+) A is read as A >-theta-> F (+) A ->>tau-> F.
    """
    wE = model.biproduct(pair.left, A)
    wF = model.biproduct(pair.middle, A).swapped()

    phi = model.add(
        model.compose_all(wF.pi_tilde, pair.mono, wE.mu_tilde),
        model.compose(wF.mu, wE.pi),
    )
    return KernelCokernelPair(mono=phi, epi=model.compose(pair.epi, wF.pi))


def lift(model, f: Morphism, mu: Morphism) -> Morphism:
    """Some g : F -> I with g . mu = f, for f : E -> I into an injective I."""
    if not model.is_admissible_mono(mu):
        raise NotAdmissible('mono')
    if not model.is_injective(f.codomain):
        raise NotInjectiveTarget(f.codomain)

    g = model.solve_precompose(mu, f)
    if g is None:
        raise NoSolution('lift into injective')
    return g


def left_inverse_if_injective(model, mu: Morphism) -> Optional[Morphism]:
    if not model.is_admissible_mono(mu):
        raise NotAdmissible('mono')
    if not model.is_injective(mu.domain):
        return None
    return lift(model, model.identity(mu.domain), mu)


def injective_of_summands(model, witness: BiproductWitness, test_mono: Morphism,
        g_E: Morphism, g_G: Morphism) -> Morphism:
    """Left inverse g = mu . g_E + pi~ . g_G of test_mono : F -> B from lifts on each summand."""
    if not model.equal(model.compose(g_E, test_mono), witness.mu_tilde):
        raise BadComponentLift('g_E')
    if not model.equal(model.compose(g_G, test_mono), witness.pi):
        raise BadComponentLift('g_G')

    g = model.add(model.compose(witness.mu, g_E), model.compose(witness.pi_tilde, g_G))
    if not model.is_identity(model.compose(g, test_mono)):
        raise VerificationFailed('summand left inverse')
    return g


def is_injective_by_lifting(model, I: ObjectHandle, mu: Morphism, f: Morphism) -> Optional[Morphism]:
    """One instance of the lifting property of I: an extension of f : E -> I along mu, or None."""
    if f.codomain != I:
        raise DomainMismatch(I, f.codomain)
    if not model.is_admissible_mono(mu):
        raise NotAdmissible('mono')
    return model.solve_precompose(mu, f)


def retract_witness(model, E: ObjectHandle) -> Optional[Morphism]:
    """A left inverse of the injective embedding of E; exists iff E is injective."""
    emb = model.embed_into_injective(E)
    return model.solve_precompose(emb, model.identity(E))

"""
Pushouts of admissible monos and pullbacks of admissible epis.
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.
"""

from ..category import Morphism
from ..misc.errors import DomainMismatch, NotAdmissible
from .types import KernelCokernelPair, PushoutSquare, PullbackSquare, Mediator
from .structure import factor_through_cokernel, factor_through_kernel


__all__ = ['pushout', 'pullback', 'pushout_mediator', 'pullback_mediator']


def pushout(model, mu: Morphism, f: Morphism) -> PushoutSquare:
    """Pushout of the admissible mono mu : E -> I along f : E -> I'."""
    if not model.is_admissible_mono(mu):
        raise NotAdmissible('mono')
    if mu.domain != f.domain:
        raise DomainMismatch(mu.domain, f.domain)

    w = model.biproduct(mu.codomain, f.codomain)
    d = model.subtract(model.compose(w.mu, mu), model.compose(w.pi_tilde, f))
    c = model.cokernel(d)
    return PushoutSquare(
        mu=mu,
        mu_prime=f,
        h=model.compose(c, w.mu),
        h_prime=model.compose(c, w.pi_tilde),
        corner=c.codomain,
        witness=w,
        presentation=KernelCokernelPair(mono=d, epi=c),
    )


def pushout_mediator(model, square: PushoutSquare, a: Morphism, b: Morphism) -> Mediator:
    """m : C -> X with m . h = a and m . h_prime = b, for a cone a . mu = b . mu_prime."""
    m = factor_through_cokernel(model, model.pair_out(square.witness, a, b), square.presentation)
    unique = model.precompose_is_unique(square.presentation.epi, m.codomain)
    return Mediator(morphism=m, unique=unique)


def pullback(model, pi: Morphism, f: Morphism) -> PullbackSquare:
    """Pullback of the admissible epi pi : F -> G along f : F' -> G."""
    if not model.is_admissible_epi(pi):
        raise NotAdmissible('epi')
    if pi.codomain != f.codomain:
        raise DomainMismatch(pi.codomain, f.codomain)

    w = model.biproduct(pi.domain, f.domain)
    d = model.subtract(model.compose(pi, w.mu_tilde), model.compose(f, w.pi))
    k = model.kernel(d)
    return PullbackSquare(
        pi=pi,
        f=f,
        pr=model.compose(w.mu_tilde, k),
        pr_prime=model.compose(w.pi, k),
        corner=k.domain,
        witness=w,
        presentation=KernelCokernelPair(mono=k, epi=d),
    )


def pullback_mediator(model, square: PullbackSquare, a: Morphism, b: Morphism) -> Mediator:
    """m : X -> P with pr . m = a and pr_prime . m = b, for a cone pi . a = f . b."""
    m = factor_through_kernel(model, model.pair_in(square.witness, a, b), square.presentation)
    unique = model.postcompose_is_unique(square.presentation.mono, m.domain)
    return Mediator(morphism=m, unique=unique)

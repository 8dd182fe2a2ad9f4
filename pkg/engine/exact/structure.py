"""
Admissibility, kernels and cokernels, factorization through a kernel-cokernel pair.
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.
"""

from typing import List

from ..category import Morphism, ObjectHandle
from ..misc.errors import DomainMismatch, NotAdmissible, NotAnnihilating, NoSolution, NotAdmissibleMorphism
from .types import KernelCokernelPair, AdmissibleFactorization


__all__ = [
    'is_admissible_mono', 'is_admissible_epi', 'kernel', 'cokernel',
    'pair_from_mono', 'pair_from_epi', 'pair_defects', 'verify_pair',
    'factor_through_cokernel', 'factor_through_kernel', 'admissible_factorization', 'image',
]


def is_admissible_mono(model, f: Morphism) -> bool:
    return model.is_admissible_mono(f)


def is_admissible_epi(model, f: Morphism) -> bool:
    return model.is_admissible_epi(f)


def cokernel(model, mu: Morphism) -> Morphism:
    if not model.is_admissible_mono(mu):
        raise NotAdmissible('mono')
    return model.cokernel(mu)


def kernel(model, pi: Morphism) -> Morphism:
    if not model.is_admissible_epi(pi):
        raise NotAdmissible('epi')
    return model.kernel(pi)


def pair_from_mono(model, mu: Morphism) -> KernelCokernelPair:
    return KernelCokernelPair(mono=mu, epi=cokernel(model, mu))


def pair_from_epi(model, pi: Morphism) -> KernelCokernelPair:
    return KernelCokernelPair(mono=kernel(model, pi), epi=pi)


def pair_defects(model, pair: KernelCokernelPair) -> List[str]:
    """Every violated kernel-cokernel pair invariant, empty when the pair is valid.

    mono and epi are compared with the model's own kernel and cokernel up to
    a (necessarily unique) isomorphism.
    """
    mu, pi = pair.mono, pair.epi
    if mu.codomain != pi.domain:
        return ['mono and epi are not composable']

    out = []
    if not model.is_zero(model.compose(pi, mu)):
        out.append('epi . mono != 0')
    if not model.is_admissible_mono(mu):
        out.append('mono is not admissible')
    if not model.is_admissible_epi(pi):
        out.append('epi is not admissible')
    if out:
        return out

    k = model.kernel(pi)
    a = model.solve_postcompose(k, mu)
    if a is None or model.is_isomorphism(a) is None:
        out.append('mono is not a kernel of epi')

    c = model.cokernel(mu)
    b = model.solve_precompose(c, pi)
    if b is None or model.is_isomorphism(b) is None:
        out.append('epi is not a cokernel of mono')
    return out


def verify_pair(model, pair: KernelCokernelPair) -> bool:
    return not pair_defects(model, pair)


def factor_through_cokernel(model, q: Morphism, pair: KernelCokernelPair) -> Morphism:
    """The unique psi : G -> Y with psi . epi = q, for q : F -> Y killing the mono."""
    if q.domain != pair.middle:
        raise DomainMismatch(q.domain, pair.middle)
    if not model.is_zero(model.compose(q, pair.mono)):
        raise NotAnnihilating()

    psi = model.solve_precompose(pair.epi, q)
    if psi is None:
        raise NoSolution('factor through cokernel')
    if not model.precompose_is_unique(pair.epi, q.codomain):
        raise NoSolution('unique factor through cokernel')
    return psi


def factor_through_kernel(model, q: Morphism, pair: KernelCokernelPair) -> Morphism:
    """The unique g : B -> E with mono . g = q, for q : B -> F killed by the epi."""
    if q.codomain != pair.middle:
        raise DomainMismatch(pair.middle, q.codomain)
    if not model.is_zero(model.compose(pair.epi, q)):
        raise NotAnnihilating()

    g = model.solve_postcompose(pair.mono, q)
    if g is None:
        raise NoSolution('factor through kernel')
    if not model.postcompose_is_unique(pair.mono, q.domain):
        raise NoSolution('unique factor through kernel')
    return g


def admissible_factorization(model, f: Morphism) -> AdmissibleFactorization:
    """f = mono_part . epi_part through the image kernel(cokernel(f))."""
    mono = model.kernel(model.cokernel(f))
    epi = model.solve_postcompose(mono, f)
    if epi is None:
        raise NoSolution('image factorization')
    if not (model.is_admissible_epi(epi) and model.is_admissible_mono(mono)):
        raise NotAdmissibleMorphism()
    return AdmissibleFactorization(epi_part=epi, mono_part=mono)


def image(model, f: Morphism) -> ObjectHandle:
    return admissible_factorization(model, f).image

"""
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.
"""

from dataclasses import dataclass
from typing import NamedTuple

from ..category import ObjectHandle, Morphism, BiproductWitness


__all__ = ['KernelCokernelPair', 'PushoutSquare', 'PullbackSquare', 'AdmissibleFactorization', 'Mediator']


@dataclass(frozen=True)
class KernelCokernelPair:
    """E >-mono-> F ->>epi-> G"""
    mono: Morphism
    epi: Morphism

    @property
    def left(self) -> ObjectHandle:
        return self.mono.domain

    @property
    def middle(self) -> ObjectHandle:
        return self.mono.codomain

    @property
    def right(self) -> ObjectHandle:
        return self.epi.codomain


@dataclass(frozen=True)
class PushoutSquare:
    """
        E --mu_prime--> I'
        |mu             |h_prime
        v               v
        I -----h------> C

    C is presented as the cokernel of (mu, -mu_prime) : E -> I (+) I'.
    """
    mu: Morphism
    mu_prime: Morphism
    h: Morphism
    h_prime: Morphism
    corner: ObjectHandle
    witness: BiproductWitness
    presentation: KernelCokernelPair


@dataclass(frozen=True)
class PullbackSquare:
    """
        P --pr_prime--> F'
        |pr             |f
        v               v
        F -----pi-----> G

    P is presented as the kernel of [pi, -f] : F (+) F' -> G.
    """
    pi: Morphism
    f: Morphism
    pr: Morphism
    pr_prime: Morphism
    corner: ObjectHandle
    witness: BiproductWitness
    presentation: KernelCokernelPair


@dataclass(frozen=True)
class AdmissibleFactorization:
    epi_part: Morphism
    mono_part: Morphism

    @property
    def image(self) -> ObjectHandle:
        return self.epi_part.codomain


class Mediator(NamedTuple):
    morphism: Morphism
    unique: bool

"""
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple, Union

from ..category import ObjectHandle, Morphism, IsoCertificate
from ..exact import KernelCokernelPair, PushoutSquare


__all__ = ['PushoutCompletion', 'Resolution', 'ExceedsBudget', 'DimensionResult', 'GlobalDimensionReport']


@dataclass(frozen=True)
class PushoutCompletion:
    """Pushout square of two presentations E >-> I ->> F and E >-> I' ->> F'.

        p . h = pi,   p . h' = 0,   p' . h' = pi',   p' . h = 0
    """
    square: PushoutSquare
    p: Morphism
    p_prime: Morphism

    @property
    def corner(self) -> ObjectHandle:
        return self.square.corner

    @property
    def pair(self) -> KernelCokernelPair:
        """I >-h-> C ->>p'-> F'"""
        return KernelCokernelPair(mono=self.square.h, epi=self.p_prime)

    @property
    def pair_prime(self) -> KernelCokernelPair:
        """I' >-h'-> C ->>p-> F"""
        return KernelCokernelPair(mono=self.square.h_prime, epi=self.p)


@dataclass(frozen=True)
class Resolution:
    """E = G^0 >-> I^0 ->> G^1 >-> I^1 ->> G^2 ...

    depth d holds I^0..I^{d-1} and G^0..G^d.
    """
    base: ObjectHandle
    injectives: Tuple[ObjectHandle, ...]
    syzygies: Tuple[ObjectHandle, ...]
    monos: Tuple[Morphism, ...]
    epis: Tuple[Morphism, ...]
    base_iso: IsoCertificate

    @property
    def depth(self) -> int:
        return len(self.injectives)

    def pair(self, n: int) -> KernelCokernelPair:
        return KernelCokernelPair(mono=self.monos[n], epi=self.epis[n])


@dataclass(frozen=True)
class ExceedsBudget:
    budget: int


@dataclass(frozen=True)
class DimensionResult:
    value: Union[int, ExceedsBudget]

    @property
    def finite(self) -> bool:
        return not isinstance(self.value, ExceedsBudget)

    def __str__(self) -> str:
        if self.finite:
            return str(self.value)
        return f'exceeds {self.value.budget}'


@dataclass
class GlobalDimensionReport:
    value: Optional[int]
    witness: Optional[str]
    exceeds: bool
    dimensions: List[Tuple[str, str]] = field(default_factory=list)
    sample_size: int = 0
    budget: int = 16
    seed: Optional[int] = None

    def __str__(self) -> str:
        if self.exceeds:
            return f'exceeds {self.budget}'
        return str(self.value)

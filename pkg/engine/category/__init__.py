"""
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.
"""

from .ring import ChainRing, Echelon, Smith
from .types import ObjectHandle, Morphism, BiproductWitness, IsoCertificate
from .additive import AdditiveModel, HomLayout, verify_witness, verify_iso
from .sums import (
    Leaf,
    DirectSum,
    direct_sum,
    tree_sum,
    flat_tree,
    swap,
    rearrange,
    compose_certificates,
)

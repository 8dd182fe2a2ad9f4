"""
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.
"""

from ._model import ExactModel, AbelianModel, WrappedModel
from .linrep import LinRep, IntervalDecomposition
from .cyclicmod import CyclicMod, Reduction
from .splitex import SplitEx
from .codec import object_to_json, object_from_json, blocks_to_json, morphism_from_blocks, \
    morphism_to_json, morphism_from_json

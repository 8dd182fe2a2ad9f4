"""
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.
"""

from .types import KernelCokernelPair, PushoutSquare, PullbackSquare, AdmissibleFactorization, Mediator
from .structure import *
from .squares import *
from .splitting import *

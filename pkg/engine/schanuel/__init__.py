"""
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.
"""

from .types import PushoutCompletion, Resolution, ExceedsBudget, DimensionResult, GlobalDimensionReport
from .completion import *
from .resolution import *

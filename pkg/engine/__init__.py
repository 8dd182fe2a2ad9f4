"""
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.
"""

__version__ = '1.0.0'

# for register purpose
from . import category
from . import models
from . import exact
from . import schanuel
from . import axioms
from . import solver

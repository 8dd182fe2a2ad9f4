"""
Copyright(c) 2023 lyuwenyu. All Rights Reserved.
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.
"""

from .logger import *
from .errors import *
from .dist_utils import setup_seed, setup_print, resolve_seed, SEED_ENV

"""
Copyright(c) 2023 lyuwenyu. All Rights Reserved.
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.
"""

from .workspace import GLOBAL_CONFIG, register, create, lookup
from .yaml_utils import *
from ._config import BaseConfig
from .yaml_config import YAMLConfig

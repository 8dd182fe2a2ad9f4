"""
Copyright(c) 2023 lyuwenyu. All Rights Reserved.
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.
"""

import copy

from typing import Any, Dict, Optional

from ._config import BaseConfig
from .workspace import create
from .yaml_utils import load_config, merge_config, merge_dict
from ..misc.errors import SchemaError


class YAMLConfig(BaseConfig):
    """Runtime options from a YAML file plus keyword overrides.

    Top-level keys matching a BaseConfig field set that field; everything
    else (model sections such as `LinRep: {n: 3}`) only feeds `create`.
    """

    def __init__(self, cfg_path: Optional[str]=None, **kwargs) -> None:
        super().__init__()

        cfg = load_config(cfg_path) if cfg_path else {}
        self.yaml_cfg: Dict[str, Any] = copy.deepcopy(merge_dict(cfg, kwargs))

        fields = [k for k in self.to_dict() if k in self.yaml_cfg]
        for k in fields:
            setattr(self, k, self.yaml_cfg[k])

    @property
    def global_cfg(self) -> Dict[str, Any]:
        return merge_config(self.yaml_cfg, inplace=False, overwrite=False)

    @property
    def model(self):
        if self._model is None:
            name = self.yaml_cfg.get('model')
            if name is None:
                raise SchemaError('no model configured')
            self._model = create(name, self.global_cfg)
        return self._model

    @model.setter
    def model(self, m):
        BaseConfig.model.fset(self, m)

"""
Copyright(c) 2023 lyuwenyu. All Rights Reserved.
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.
"""

from typing import Any, Dict, Optional


__all__ = ['BaseConfig', ]


class BaseConfig(object):

    def __init__(self) -> None:
        super().__init__()

        self.task: str = None

        # instance
        self._model = None

        # resolution / dimension
        self.budget: int = 16
        self.depth: int = 3

        # sampling
        self.samples: int = 100
        self.seed: Optional[int] = None
        self.mutation: str = 'none'
        self.max_attempts: int = 64

        # runtime
        self.print_freq: int = 50
        self.print_method: str = 'builtin'
        self.verbose: bool = False

    @property
    def model(self):
        return self._model

    @model.setter
    def model(self, m):
        from ..models import ExactModel
        assert isinstance(m, ExactModel), f'{type(m)} != ExactModel, please check your model class'
        self._model = m

    def to_dict(self) -> Dict[str, Any]:
        return {k: v for k, v in self.__dict__.items() if not k.startswith('_')}

    def __repr__(self, ):
        s = ''
        for k, v in self.to_dict().items():
            s += f'{k}: {v}\n'
        return s

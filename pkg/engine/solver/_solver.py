"""
Copyright(c) 2023 lyuwenyu. All Rights Reserved.
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.
"""

from pathlib import Path
from typing import Any, Dict, Optional

from ..core import BaseConfig
from ..models import ExactModel
from ..misc.errors import ExactCatError, CategoryError, ExactStructureError, SchanuelError, \
    NotInjectiveMiddle, BaseMismatch, VerificationFailed, SchemaError, UnknownMutation
from .serialize import model_from_spec, dumps


# most specific first
EXIT_CODES = (
    (NotInjectiveMiddle, 4),
    (BaseMismatch, 5),
    (VerificationFailed, 6),
    (SchemaError, 2),
    (UnknownMutation, 2),
    (CategoryError, 3),
    (ExactStructureError, 3),
    (SchanuelError, 3),
)


def exit_code(e: ExactCatError) -> int:
    for cls, code in EXIT_CODES:
        if isinstance(e, cls):
            return code
    return 1


class BaseSolver(object):
    """One command of the command line; `run` returns the exit code."""

    task: str = None

    def __init__(self, cfg: BaseConfig) -> None:
        self.cfg = cfg

    def option(self, key: str, required: bool=True) -> Any:
        value = self.cfg.yaml_cfg.get(key)
        if value is None and required:
            raise SchemaError(f'{self.task} needs --{key.replace("_", "-")}')
        return value

    def build_model(self) -> ExactModel:
        """--model / --params when given, else the `model` entry of the config."""
        name = self.cfg.yaml_cfg.get('model_name')
        if name is not None:
            return model_from_spec(name, self.cfg.yaml_cfg.get('params'))
        return self.cfg.model

    def provenance(self, seed: Optional[int]=None) -> Dict[str, Any]:
        from .. import __version__
        return {
            'command': self.task,
            'seed': None if seed is None else str(seed),
            'version': __version__,
        }

    def emit(self, data: Dict[str, Any], out: Optional[str]=None) -> None:
        text = dumps(data)
        if out is None:
            print(text, end='', force=True)
            return
        path = Path(out)
        if path.parent and not path.parent.exists():
            path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
        print(f'wrote {path}')

    def run(self) -> int:
        raise NotImplementedError('')

"""
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.
"""

from ..schanuel import resolution, injective_dimension
from ..misc.errors import SchemaError
from ._solver import BaseSolver
from .serialize import read_object_file, resolution_file


class ResolveSolver(BaseSolver):
    """Writes the injective resolution ladder of an object file."""

    task = 'resolve'

    def run(self) -> int:
        model, E = read_object_file(self.option('object'))
        depth = int(self.cfg.depth)
        if depth < 0:
            raise SchemaError(f'depth must be non-negative, got {depth}')

        res = resolution(model, E, depth)
        self.emit(resolution_file(model, res, self.provenance()), self.option('out', required=False))
        return 0


class DimSolver(BaseSolver):
    task = 'dim'

    def run(self) -> int:
        model, E = read_object_file(self.option('object'))
        budget = int(self.cfg.budget)
        if budget < 1:
            raise SchemaError(f'budget must be at least 1, got {budget}')

        print(str(injective_dimension(model, E, budget)), force=True)
        return 0

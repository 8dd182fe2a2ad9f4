"""
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.
"""

import json

from ..axioms import check_exact_axioms, mutate_structure
from ..schanuel import global_dimension_sample
from ..misc import resolve_seed
from ..misc.errors import SchemaError
from ._solver import BaseSolver
from .serialize import SCHEMA, model_spec


class AxiomSolver(BaseSolver):
    task = 'axioms'

    def run(self) -> int:
        model = self.build_model()
        mutation = self.cfg.mutation or 'none'
        model = mutate_structure(model, mutation)
        seed = resolve_seed(self.cfg.seed)
        samples = int(self.cfg.samples)
        if samples < 1:
            raise SchemaError(f'samples must be positive, got {samples}')

        report = check_exact_axioms(model, samples, seed,
            max_attempts=self.cfg.max_attempts, print_freq=self.cfg.print_freq)

        out = {'schema': SCHEMA, **model_spec(model), 'report': report.to_dict(),
            'provenance': self.provenance(seed)}
        if mutation != 'none':
            out['mutation'] = mutation
        self.emit(out, self.option('out', required=False))

        for result in report.failures:
            print(f'axiom {result.axiom} failed: {result.counterexample["reason"]}')
        return 0 if report.passed else 1


class GlobalDimSolver(BaseSolver):
    """Largest injective dimension over a seeded sample of objects."""

    task = 'global-dim'

    def run(self) -> int:
        model = self.build_model()
        seed = resolve_seed(self.cfg.seed)
        samples, budget = int(self.cfg.samples), int(self.cfg.budget)
        if samples < 1 or budget < 1:
            raise SchemaError(f'samples and budget must be positive, got {samples}, {budget}')

        report = global_dimension_sample(model, samples, budget, seed, print_freq=self.cfg.print_freq)
        out = {
            'schema': SCHEMA,
            **model_spec(model),
            'value': str(report),
            'exceeds': report.exceeds,
            'witness': None if report.witness is None else json.loads(report.witness),
            'dimensions': [{'object': json.loads(key), 'dimension': dim} for key, dim in report.dimensions],
            'samples': str(report.sample_size),
            'budget': str(report.budget),
            'provenance': self.provenance(seed),
        }
        self.emit(out, self.option('out', required=False))
        return 0

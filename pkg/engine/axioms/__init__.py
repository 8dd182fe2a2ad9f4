"""
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.
"""

from .sampler import Sampler, sample_admissible_mono, sample_admissible_epi, sample_iso
from .mutations import MUTATIONS, Mutation, MutatedModel, mutate_structure
from .check import AXIOMS, AxiomResult, AxiomReport, check_exact_axioms, replay_counterexample

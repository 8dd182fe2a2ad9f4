"""
Copyright(c) 2023 lyuwenyu. All Rights Reserved.
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.
"""

from ._solver import BaseSolver, exit_code, EXIT_CODES
from .object_solver import ResolveSolver, DimSolver
from .schanuel_solver import SchanuelSolver, CheckCertSolver
from .axiom_solver import AxiomSolver, GlobalDimSolver
from .serialize import *



from typing import Dict, Type

TASKS: Dict[str, Type[BaseSolver]] = {
    'resolve': ResolveSolver,
    'dim': DimSolver,
    'schanuel': SchanuelSolver,
    'check-cert': CheckCertSolver,
    'axioms': AxiomSolver,
    'global-dim': GlobalDimSolver,
}

"""
Exception hierarchy of the exact-category kernel.
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.
"""


class ExactCatError(Exception):
    pass


# category-core

class CategoryError(ExactCatError):
    pass


class DomainMismatch(CategoryError):
    def __init__(self, left, right) -> None:
        super().__init__()
        self.left = left
        self.right = right

    def __str__(self) -> str:
        return f"Cannot compose: codomain {self.right} does not match domain {self.left}"


class ShapeMismatch(CategoryError):
    def __init__(self, what: str) -> None:
        super().__init__()
        self.what = what

    def __str__(self) -> str:
        return f"Shape mismatch: {self.what}"


class ModelMismatch(CategoryError):
    def __init__(self, expected: str, got: str) -> None:
        super().__init__()
        self.expected = expected
        self.got = got

    def __str__(self) -> str:
        return f"Object of model {self.got} used in model {self.expected}"


class InvalidObject(CategoryError):
    def __init__(self, reason: str) -> None:
        super().__init__()
        self.reason = reason

    def __str__(self) -> str:
        return f"Invalid object: {self.reason}"


class InvalidMorphism(CategoryError):
    def __init__(self, reason: str) -> None:
        super().__init__()
        self.reason = reason

    def __str__(self) -> str:
        return f"Invalid morphism: {self.reason}"


# exact-structure

class ExactStructureError(ExactCatError):
    pass


class NotAdmissible(ExactStructureError):
    def __init__(self, kind: str) -> None:
        super().__init__()
        self.kind = kind

    def __str__(self) -> str:
        return f"Morphism is not an admissible {self.kind}"


class NotAnnihilating(ExactStructureError):
    def __str__(self) -> str:
        return "Morphism does not annihilate the given kernel-cokernel pair"


class NoSolution(ExactStructureError):
    def __init__(self, what: str) -> None:
        super().__init__()
        self.what = what

    def __str__(self) -> str:
        return f"Linear system has no solution ({self.what})"


class NotASection(ExactStructureError):
    def __str__(self) -> str:
        return "Given morphism is not a left inverse of the mono"


class NotInjectiveTarget(ExactStructureError):
    def __init__(self, obj) -> None:
        super().__init__()
        self.obj = obj

    def __str__(self) -> str:
        return f"Target {self.obj} is not injective"


class BadComponentLift(ExactStructureError):
    def __init__(self, component: str) -> None:
        super().__init__()
        self.component = component

    def __str__(self) -> str:
        return f"Component lift {self.component} does not restrict correctly"


class NotAdmissibleMorphism(ExactStructureError):
    def __str__(self) -> str:
        return "Morphism has no admissible epi-mono factorization"


# schanuel

class SchanuelError(ExactCatError):
    pass


class BaseMismatch(SchanuelError):
    def __init__(self, left, right) -> None:
        super().__init__()
        self.left = left
        self.right = right

    def __str__(self) -> str:
        return f"Kernel-cokernel pairs have different bases {self.left} and {self.right}"


class NotInjectiveMiddle(SchanuelError):
    def __init__(self, obj) -> None:
        super().__init__()
        self.obj = obj

    def __str__(self) -> str:
        return f"Middle object {self.obj} is not injective"


class BadBaseIso(SchanuelError):
    def __str__(self) -> str:
        return "Base isomorphism certificate fails verification"


class DepthTooShallow(SchanuelError):
    def __init__(self, depth: int, needed: int) -> None:
        super().__init__()
        self.depth = depth
        self.needed = needed

    def __str__(self) -> str:
        return f"Resolution depth {self.depth} is below the required {self.needed}"


class VerificationFailed(SchanuelError):
    def __init__(self, what: str) -> None:
        super().__init__()
        self.what = what

    def __str__(self) -> str:
        return f"Verification failed: {self.what}"


# axioms-check

class AxiomError(ExactCatError):
    pass


class GeneratorExhausted(AxiomError):
    def __init__(self, what: str, attempts: int) -> None:
        super().__init__()
        self.what = what
        self.attempts = attempts

    def __str__(self) -> str:
        return f"Could not sample {self.what} after {self.attempts} attempts"


class UnknownMutation(AxiomError):
    def __init__(self, name: str) -> None:
        super().__init__()
        self.name = name

    def __str__(self) -> str:
        return f"Unknown mutation {self.name}"


# cli

class SchemaError(ExactCatError):
    def __init__(self, reason: str) -> None:
        super().__init__()
        self.reason = reason

    def __str__(self) -> str:
        return f"Schema error: {self.reason}"

"""
Deliberately broken exact structures, used as negative controls for the axiom suite.
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.
"""

from ..core import register
from ..category import Morphism
from ..models import ExactModel, WrappedModel
from ..misc.errors import UnknownMutation


__all__ = ['MUTATIONS', 'Mutation', 'MutatedModel', 'mutate_structure']


MUTATIONS = dict()


class Mutation(object):
    """Replaces the admissibility predicates of a base structure."""

    def is_admissible_mono(self, base: ExactModel, f: Morphism) -> bool:
        return base.is_admissible_mono(f)

    def is_admissible_epi(self, base: ExactModel, f: Morphism) -> bool:
        return base.is_admissible_epi(f)


@register(dct=MUTATIONS, name='none')
class Unchanged(Mutation):
    pass


@register(dct=MUTATIONS, name='drop-composition-closure')
class DropCompositionClosure(Mutation):
    """Only monos whose cokernel has length 0 or odd length stay admissible.

    Two monos with cokernels of length one compose to a mono whose cokernel
    has length two.
    """

    def is_admissible_mono(self, base, f):
        if not base.is_admissible_mono(f):
            return False
        extra = base.length(f.codomain) - base.length(f.domain)
        return extra == 0 or extra % 2 == 1


@register(dct=MUTATIONS, name='admit-nonkernel-mono')
class AdmitNonkernelMono(Mutation):
    """Every monic map is admissible while P shrinks to the split epis."""

    def is_admissible_mono(self, base, f):
        return base.is_monic(f)

    def is_admissible_epi(self, base, f):
        return base.solve_postcompose(f, base.identity(f.codomain)) is not None


@register(dct=MUTATIONS, name='break-pushout-admissibility')
class BreakPushoutAdmissibility(Mutation):
    """Rejects 0 >-> X for X nonzero, which is the pushout of any admissible mono along X -> 0."""

    def is_admissible_mono(self, base, f):
        if base.is_zero_object(f.domain) and not base.is_zero_object(f.codomain):
            return False
        return base.is_admissible_mono(f)


@register()
class MutatedModel(WrappedModel):
    """`base` with its admissibility predicates replaced by a registered mutation.

    The name is the base name, so the `none` mutation is indistinguishable
    from the unmutated structure.
    """
    __inject__ = ['base', ]

    def __init__(self, base: ExactModel=None, mutation: str='none') -> None:
        assert base is not None, 'MutatedModel wraps another model'
        if mutation not in MUTATIONS:
            raise UnknownMutation(mutation)
        super().__init__(base)
        self.base = base
        self.mutation = mutation
        schema = MUTATIONS[mutation]
        self._rule: Mutation = getattr(schema['_pymodule'], schema['_name'])()

    def is_admissible_mono(self, f: Morphism) -> bool:
        return self._rule.is_admissible_mono(self.base, f)

    def is_admissible_epi(self, f: Morphism) -> bool:
        return self._rule.is_admissible_epi(self.base, f)


def mutate_structure(model: ExactModel, mutation_id: str) -> MutatedModel:
    return MutatedModel(base=model, mutation=mutation_id)

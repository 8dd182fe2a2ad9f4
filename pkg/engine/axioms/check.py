"""
Sample-based check of the exact-structure axioms.
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.

Every axiom is split into a `draw` step, which samples the morphisms of one
instance, and a `judge` step, which only looks at those morphisms. A failing
instance is stored with its serialized morphisms, so `replay_counterexample`
re-runs the judge without the generator.
"""

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

from ..category import Morphism
from ..exact import pair_from_mono, pair_from_epi, pair_defects, pushout, pullback
from ..models import ExactModel, morphism_to_json, morphism_from_json
from ..misc import MetricLogger, setup_seed
from ..misc.errors import ExactCatError, SchemaError
from .sampler import Sampler


__all__ = ['AXIOMS', 'AxiomResult', 'AxiomReport', 'check_exact_axioms', 'replay_counterexample']


Instance = Dict[str, Morphism]


@dataclass(frozen=True)
class Axiom:
    name: str
    draw: Callable[[Sampler], Instance]
    judge: Callable[[ExactModel, Instance], Optional[str]]


def _draw_identities(s: Sampler) -> Instance:
    return {'identity': s.model.identity(s.object())}


def _judge_identities(model, m: Instance) -> Optional[str]:
    if not model.is_admissible_mono(m['identity']):
        return 'identity is not an admissible mono'
    if not model.is_admissible_epi(m['identity']):
        return 'identity is not an admissible epi'
    return None


def _draw_composition(s: Sampler) -> Instance:
    m1 = s.admissible_mono()
    e1 = s.admissible_epi()
    return {'mono1': m1, 'mono2': s.admissible_mono(m1.codomain),
            'epi1': e1, 'epi2': s.admissible_epi(e1.codomain)}


def _judge_composition(model, m: Instance) -> Optional[str]:
    for name in ('mono1', 'mono2'):
        if not model.is_admissible_mono(m[name]):
            return f'{name} is not an admissible mono'
    for name in ('epi1', 'epi2'):
        if not model.is_admissible_epi(m[name]):
            return f'{name} is not an admissible epi'
    if not model.is_admissible_mono(model.compose(m['mono2'], m['mono1'])):
        return 'composite of admissible monos is not admissible'
    if not model.is_admissible_epi(model.compose(m['epi2'], m['epi1'])):
        return 'composite of admissible epis is not admissible'
    return None


def _draw_kernel_cokernel(s: Sampler) -> Instance:
    return {'mono': s.admissible_mono(), 'epi': s.admissible_epi()}


def _judge_kernel_cokernel(model, m: Instance) -> Optional[str]:
    defects = pair_defects(model, pair_from_mono(model, m['mono']))
    if defects:
        return f'(mono, cokernel(mono)): {"; ".join(defects)}'
    defects = pair_defects(model, pair_from_epi(model, m['epi']))
    if defects:
        return f'(kernel(epi), epi): {"; ".join(defects)}'
    return None


def _draw_pushout_pullback(s: Sampler) -> Instance:
    mu = s.admissible_mono()
    pi = s.admissible_epi()
    return {'mono': mu, 'along': s.morphism(mu.domain, None),
            'epi': pi, 'from': s.morphism(None, pi.codomain)}


def _judge_pushout_pullback(model, m: Instance) -> Optional[str]:
    mu, pi = m['mono'], m['epi']
    zero = model.zero_object
    for f in (m['along'], model.zero_morphism(mu.domain, zero)):
        if not model.is_admissible_mono(pushout(model, mu, f).h_prime):
            return f'pushout of mono along a map to {f.codomain} is not an admissible mono'
    for f in (m['from'], model.zero_morphism(zero, pi.codomain)):
        if not model.is_admissible_epi(pullback(model, pi, f).pr_prime):
            return f'pullback of epi along a map from {f.domain} is not an admissible epi'
    return None


def _draw_isomorphisms(s: Sampler) -> Instance:
    mu = s.admissible_mono()
    pi = s.admissible_epi()
    return {'mono': mu, 'mono_pre': s.iso(mu.domain), 'mono_post': s.iso(mu.codomain),
            'epi': pi, 'epi_pre': s.iso(pi.domain), 'epi_post': s.iso(pi.codomain)}


def _judge_isomorphisms(model, m: Instance) -> Optional[str]:
    for name in ('mono_pre', 'mono_post', 'epi_pre', 'epi_post'):
        if model.is_isomorphism(m[name]) is None:
            return f'{name} is not an isomorphism'
    if model.is_admissible_mono(m['mono']) != \
            model.is_admissible_mono(model.compose_all(m['mono_post'], m['mono'], m['mono_pre'])):
        return 'admissibility of a mono changes under isomorphisms'
    if model.is_admissible_epi(m['epi']) != \
            model.is_admissible_epi(model.compose_all(m['epi_post'], m['epi'], m['epi_pre'])):
        return 'admissibility of an epi changes under isomorphisms'
    return None


AXIOMS = (
    Axiom('identities', _draw_identities, _judge_identities),
    Axiom('composition', _draw_composition, _judge_composition),
    Axiom('kernel-cokernel', _draw_kernel_cokernel, _judge_kernel_cokernel),
    Axiom('pushout-pullback', _draw_pushout_pullback, _judge_pushout_pullback),
    Axiom('isomorphisms', _draw_isomorphisms, _judge_isomorphisms),
)


def _judge(axiom: Axiom, model, instance: Instance) -> Optional[str]:
    try:
        return axiom.judge(model, instance)
    except ExactCatError as e:
        return f'{e.__class__.__name__}: {e}'


@dataclass
class AxiomResult:
    axiom: str
    passed: bool
    checked: int
    counterexample: Optional[Dict[str, Any]] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'axiom': self.axiom,
            'passed': self.passed,
            'checked': str(self.checked),
            'counterexample': self.counterexample,
        }


@dataclass
class AxiomReport:
    model: str
    seed: int
    samples: int
    results: List[AxiomResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> List[AxiomResult]:
        return [r for r in self.results if not r.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'model': self.model,
            'seed': str(self.seed),
            'samples': str(self.samples),
            'passed': self.passed,
            'axioms': [r.to_dict() for r in self.results],
        }


def check_exact_axioms(model: ExactModel, samples: int, seed: int, max_attempts: int=64,
        print_freq: int=50) -> AxiomReport:
    """Check every axiom on its share of `samples` instances.

    Each axiom draws from its own stream spawned from `seed`; the first
    failing instance of an axiom is kept as its counterexample.
    """
    assert samples >= 1, f'samples must be positive, got {samples}'
    per_axiom = -(-samples // len(AXIOMS))
    rngs = setup_seed(seed, len(AXIOMS))

    metric_logger = MetricLogger(delimiter='  ')
    report = AxiomReport(model=model.name, seed=seed, samples=samples)
    for axiom, rng in zip(AXIOMS, rngs):
        sampler = Sampler(model, rng, max_attempts)
        result = AxiomResult(axiom=axiom.name, passed=True, checked=0)
        for i in metric_logger.log_every(range(per_axiom), print_freq, header=f'{axiom.name}:'):
            instance = axiom.draw(sampler)
            reason = _judge(axiom, model, instance)
            result.checked += 1
            metric_logger.update(checked=result.checked, failures=reason is not None)
            if reason is not None:
                result.passed = False
                result.counterexample = {
                    'instance': str(i),
                    'reason': reason,
                    'morphisms': {k: morphism_to_json(model, f) for k, f in sorted(instance.items())},
                }
                break
        report.results.append(result)

    return report


def replay_counterexample(model: ExactModel, axiom_name: str, counterexample: Dict[str, Any]) -> Optional[str]:
    """Judge a stored instance again; the failure reason, or None if it now passes."""
    axioms = {a.name: a for a in AXIOMS}
    if axiom_name not in axioms:
        raise SchemaError(f'unknown axiom {axiom_name!r}')
    instance = {k: morphism_from_json(model, v) for k, v in counterexample['morphisms'].items()}
    return _judge(axioms[axiom_name], model, instance)

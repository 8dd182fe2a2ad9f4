"""
Injective resolutions, their Schanuel comparison and injective dimension.
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.
"""

import numpy as np

from typing import Callable, List, Optional, Tuple

from ..category import ObjectHandle, Morphism, IsoCertificate, Leaf, tree_sum, flat_tree, \
    swap, rearrange, compose_certificates, verify_iso
from ..exact import cokernel, sum_with_object
from ..misc import MetricLogger
from ..misc.errors import BaseMismatch, DepthTooShallow, VerificationFailed
from .types import Resolution, ExceedsBudget, DimensionResult, GlobalDimensionReport
from .completion import schanuel_with_base_iso


__all__ = [
    'resolution', 'resolution_schanuel', 'injective_dimension', 'global_dimension_sample',
    'finite_coresolution', 'syzygy_is_injective',
]


Embedding = Callable[[ObjectHandle], Morphism]


def resolution(model, E: ObjectHandle, depth: int, embed: Optional[Embedding]=None) -> Resolution:
    """The ladder G^n >-> I^n ->> G^{n+1}, n < depth, starting from G^0 = E.

    embed defaults to the model's injective embedding; once a syzygy vanishes
    every later term is the zero object.
    """
    model.check_object(E)
    embed = model.embed_into_injective if embed is None else embed

    injectives, syzygies, monos, epis = [], [E], [], []
    for _ in range(depth):
        G = syzygies[-1]
        if model.is_zero_object(G):
            mono = epi = model.identity(G)
        else:
            mono = embed(G)
            epi = cokernel(model, mono)
        assert model.is_injective(mono.codomain), f'{mono.codomain} is not injective'
        monos.append(mono)
        epis.append(epi)
        injectives.append(mono.codomain)
        syzygies.append(epi.codomain)

    one = model.identity(E)
    return Resolution(base=E, injectives=tuple(injectives), syzygies=tuple(syzygies),
        monos=tuple(monos), epis=tuple(epis), base_iso=IsoCertificate(forward=one, backward=one))


def _flatten(model, tree, cert_side: ObjectHandle) -> Tuple[IsoCertificate, Tuple[Leaf, ...]]:
    """Rearrangement of a nested sum into injectives by step, then the syzygy."""
    summed = tree_sum(model, tree)
    assert summed.obj == cert_side, 'sum tree does not match the certificate'
    *injectives, syzygy = summed.leaves
    ordered = sorted(injectives, key=lambda leaf: leaf.label[1]) + [syzygy]
    return rearrange(model, tree, flat_tree(ordered)), tuple(ordered)


def resolution_schanuel(model, res1: Resolution, res2: Resolution, n: int) -> Tuple[IsoCertificate, IsoCertificate]:
    """For resolutions I^*, G^* and J^*, H^* of the same object:

        even: I^0 (+) J^1 (+) ... (+) J^{2n-1} (+) G^{2n}  ->  J^0 (+) I^1 (+) ... (+) I^{2n-1} (+) H^{2n}
        odd:  I^0 (+) J^1 (+) ... (+) I^{2n} (+) H^{2n+1}  ->  J^0 (+) I^1 (+) ... (+) J^{2n} (+) G^{2n+1}

    Built step by step: each step sums the previous presentations with the
    injectives collected so far and compares them over the previous certificate.
    """
    assert n >= 1, 'n must be at least 1'
    needed = 2 * n + 1
    for res in (res1, res2):
        if res.depth < needed:
            raise DepthTooShallow(res.depth, needed)
    if res1.base != res2.base:
        raise BaseMismatch(res1.base, res2.base)

    sides = (res1, res2)
    letters = (('I', 'G'), ('J', 'H'))

    def injective_leaf(side: int, i: int) -> Leaf:
        return Leaf((letters[side][0], i), sides[side].injectives[i])

    def syzygy_leaf(side: int, i: int) -> Leaf:
        return Leaf((letters[side][1], i), sides[side].syzygies[i])

    base = compose_certificates(model, res2.base_iso, res1.base_iso.inverse())
    cert = schanuel_with_base_iso(model, res1.pair(0), res2.pair(0), base)

    # cert : inj_L (+) syz_L -> inj_R (+) syz_R
    inj_L, syz_L = injective_leaf(0, 0), (1, 1)
    inj_R, syz_R = injective_leaf(1, 0), (0, 1)
    steps = {1: (cert, inj_L, syz_L, inj_R, syz_R)}

    for m in range(1, needed):
        (side_a, a), (side_b, b) = syz_L, syz_R
        res_a, res_b = sides[side_a], sides[side_b]
        obj_L, obj_R = tree_sum(model, inj_L).obj, tree_sum(model, inj_R).obj
        pair_a = sum_with_object(model, res_a.pair(a), obj_L)
        pair_b = sum_with_object(model, res_b.pair(b), obj_R)

        moved = compose_certificates(model, cert, swap(model, res_a.syzygies[a], obj_L))
        moved = compose_certificates(model, swap(model, obj_R, res_b.syzygies[b]), moved)
        cert = schanuel_with_base_iso(model, pair_a, pair_b, moved)

        inj_L, inj_R = (injective_leaf(side_a, a), inj_L), (injective_leaf(side_b, b), inj_R)
        syz_L, syz_R = (side_b, b + 1), (side_a, a + 1)
        steps[m + 1] = (cert, inj_L, syz_L, inj_R, syz_R)

    out = []
    for m in (2 * n, 2 * n + 1):
        cert, inj_L, syz_L, inj_R, syz_R = steps[m]
        left, _ = _flatten(model, (inj_L, syzygy_leaf(*syz_L)), cert.domain)
        right, _ = _flatten(model, (inj_R, syzygy_leaf(*syz_R)), cert.codomain)
        flat = compose_certificates(model, right, compose_certificates(model, cert, left.inverse()))
        if not verify_iso(model, flat):
            raise VerificationFailed(f'resolution certificate at step {m}')
        out.append(flat)
    return out[0], out[1]


def injective_dimension(model, E: ObjectHandle, budget: int=16, embed: Optional[Embedding]=None) -> DimensionResult:
    """Least n <= budget with G^n injective along one resolution of E."""
    assert budget >= 1, f'budget must be positive, got {budget}'
    model.check_object(E)
    embed = model.embed_into_injective if embed is None else embed

    G = E
    for n in range(budget + 1):
        if model.is_injective(G):
            return DimensionResult(value=n)
        if n < budget:
            G = cokernel(model, embed(G)).codomain
    return DimensionResult(value=ExceedsBudget(budget))


def syzygy_is_injective(model, res: Resolution, n: int) -> bool:
    return model.is_injective(res.syzygies[n])


def finite_coresolution(model, E: ObjectHandle, budget: int=16) -> Optional[List[Morphism]]:
    """E >-> I^0 -> I^1 -> ... -> I^{n-1} -> G^n with G^n injective, or None past the budget.

    The first entry is the embedding of E, every following entry a map of the
    exact sequence.
    """
    dim = injective_dimension(model, E, budget)
    if not dim.finite:
        return None

    n = dim.value
    if n == 0:
        return [model.identity(E)]
    res = resolution(model, E, n)
    maps = [res.monos[0]]
    for i in range(1, n):
        maps.append(model.compose(res.monos[i], res.epis[i - 1]))
    maps.append(res.epis[n - 1])
    return maps


def global_dimension_sample(model, sample_size: int, budget: int=16, seed: int=0,
        print_freq: int=10) -> GlobalDimensionReport:
    """Largest injective dimension over a seeded sample of objects."""
    rng = np.random.default_rng(seed)
    objects = [model.random_object(rng) for _ in range(sample_size)]

    metric_logger = MetricLogger(delimiter='  ')
    results = []
    for X in metric_logger.log_every(objects, print_freq, header='global-dim:'):
        dim = injective_dimension(model, X, budget)
        results.append((model.serialize(X), dim))
        metric_logger.update(checked=len(results), exceeds=int(not dim.finite))

    results.sort(key=lambda r: r[0])
    exceeding = [key for key, dim in results if not dim.finite]
    finite = [(dim.value, key) for key, dim in results if dim.finite]

    value, witness = None, None
    if finite:
        value = max(v for v, _ in finite)
        witness = next(key for v, key in finite if v == value)
    if exceeding:
        witness = exceeding[0]

    return GlobalDimensionReport(value=value, witness=witness, exceeds=bool(exceeding),
        dimensions=[(key, str(dim)) for key, dim in results],
        sample_size=sample_size, budget=budget, seed=seed)

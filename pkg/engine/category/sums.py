"""
Iterated direct sums and the canonical isomorphisms between them.
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.
"""

from dataclasses import dataclass
from typing import Any, Dict, Sequence, Tuple, Union

from .additive import AdditiveModel, verify_iso
from .types import ObjectHandle, Morphism, IsoCertificate
from ..misc.errors import ShapeMismatch, VerificationFailed


__all__ = ['Leaf', 'DirectSum', 'direct_sum', 'tree_sum', 'flat_tree',
    'swap', 'rearrange', 'compose_certificates']


@dataclass(frozen=True)
class Leaf:
    label: Any
    obj: ObjectHandle


Tree = Union[Leaf, Tuple['Tree', 'Tree']]


@dataclass(frozen=True)
class DirectSum:
    """obj = leaves[0] (+) leaves[1] (+) ... with one injection and projection per leaf."""
    obj: ObjectHandle
    leaves: Tuple[Leaf, ...]
    injections: Tuple[Morphism, ...]
    projections: Tuple[Morphism, ...]


def tree_sum(model: AdditiveModel, tree: Tree) -> DirectSum:
    if isinstance(tree, Leaf):
        one = model.identity(tree.obj)
        return DirectSum(tree.obj, (tree, ), (one, ), (one, ))

    left, right = tree_sum(model, tree[0]), tree_sum(model, tree[1])
    w = model.biproduct(left.obj, right.obj)
    injections = [model.compose(w.mu, i) for i in left.injections] \
        + [model.compose(w.pi_tilde, i) for i in right.injections]
    projections = [model.compose(p, w.mu_tilde) for p in left.projections] \
        + [model.compose(p, w.pi) for p in right.projections]
    return DirectSum(w.middle, left.leaves + right.leaves, tuple(injections), tuple(projections))


def flat_tree(leaves: Sequence[Leaf]) -> Tree:
    """((l0 (+) l1) (+) l2) ... ; the left-to-right sum."""
    tree = leaves[0]
    for leaf in leaves[1:]:
        tree = (tree, leaf)
    return tree


def direct_sum(model: AdditiveModel, objects: Sequence[ObjectHandle]) -> DirectSum:
    if len(objects) == 0:
        zero = model.zero_object
        return DirectSum(zero, (), (), ())
    return tree_sum(model, flat_tree([Leaf(i, X) for i, X in enumerate(objects)]))


def swap(model: AdditiveModel, X: ObjectHandle, Y: ObjectHandle) -> IsoCertificate:
    """The canonical isomorphism X (+) Y -> Y (+) X."""
    w1, w2 = model.biproduct(X, Y), model.biproduct(Y, X)
    forward = model.add(model.compose(w2.mu, w1.pi), model.compose(w2.pi_tilde, w1.mu_tilde))
    backward = model.add(model.compose(w1.mu, w2.pi), model.compose(w1.pi_tilde, w2.mu_tilde))
    return IsoCertificate(forward=forward, backward=backward)


def rearrange(model: AdditiveModel, source: Tree, target: Tree) -> IsoCertificate:
    """Isomorphism between two iterated sums over the same labelled leaves."""
    src, tgt = tree_sum(model, source), tree_sum(model, target)
    position: Dict[Any, int] = {leaf.label: i for i, leaf in enumerate(tgt.leaves)}
    if sorted(map(repr, position)) != sorted(repr(leaf.label) for leaf in src.leaves):
        raise ShapeMismatch('rearranged sums must have the same leaves')

    forward = model.zero_morphism(src.obj, tgt.obj)
    backward = model.zero_morphism(tgt.obj, src.obj)
    for i, leaf in enumerate(src.leaves):
        j = position[leaf.label]
        if tgt.leaves[j].obj != leaf.obj:
            raise ShapeMismatch(f'leaf {leaf.label} changes its object')
        forward = model.add(forward, model.compose(tgt.injections[j], src.projections[i]))
        backward = model.add(backward, model.compose(src.injections[i], tgt.projections[j]))
    return IsoCertificate(forward=forward, backward=backward)


def compose_certificates(model: AdditiveModel, second: IsoCertificate, first: IsoCertificate,
        check: bool=False) -> IsoCertificate:
    """second . first"""
    cert = IsoCertificate(forward=model.compose(second.forward, first.forward),
        backward=model.compose(first.backward, second.backward))
    if check and not verify_iso(model, cert):
        raise VerificationFailed('composite certificate')
    return cert

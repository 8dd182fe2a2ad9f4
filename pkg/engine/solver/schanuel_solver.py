"""
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.
"""

from ..category import verify_iso
from ..exact import pair_defects
from ..schanuel import schanuel_isomorphism
from ..misc.errors import ExactCatError, NotAdmissible, SchemaError, VerificationFailed
from ._solver import BaseSolver
from .serialize import read_pair_file, certificate_file, read_certificate_file


class SchanuelSolver(BaseSolver):
    """Certificate I (+) F' -> I' (+) F for two injective presentations of one object."""

    task = 'schanuel'

    def run(self) -> int:
        model, pair1 = read_pair_file(self.option('pair1'))
        _, pair2 = read_pair_file(self.option('pair2'), model)
        for name, pair in (('pair1', pair1), ('pair2', pair2)):
            defects = pair_defects(model, pair)
            if defects:
                print(f'{name}: {"; ".join(defects)}', force=True)
                raise NotAdmissible('kernel-cokernel pair')

        cert = schanuel_isomorphism(model, pair1, pair2)
        if not verify_iso(model, cert):
            raise VerificationFailed('schanuel certificate')

        self.emit(certificate_file(model, cert, self.provenance()), self.option('out', required=False))
        return 0


class CheckCertSolver(BaseSolver):
    """Recomputes both composites of a certificate from its raw blocks.

    Exit 2 when the file cannot be read as a certificate, 1 when any
    composite is not an identity or a block is not a morphism.
    """

    task = 'check-cert'

    def run(self) -> int:
        try:
            model, cert = read_certificate_file(self.option('cert'))
        except SchemaError:
            raise
        except ExactCatError as e:
            print(f'failed: {e}', force=True)
            return 1

        for name, f in (('forward', cert.forward), ('backward', cert.backward)):
            reason = model.morphism_defect(f)
            if reason is not None:
                print(f'failed: {name} is not a morphism ({reason})', force=True)
                return 1

        if not verify_iso(model, cert):
            print('failed: composites are not identities', force=True)
            return 1

        print('ok', force=True)
        return 0

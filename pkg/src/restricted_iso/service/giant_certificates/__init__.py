from .giant_rep import GiantRep, affected_points
from .symmetry import (symmetry_defect, relative_symmetry_defect, largest_alternating_support,
                       orbital_configuration, transitivity_degree)
from .local_certificates import (CertKind, CertOutcome, local_certificates, compare_local_certificates,
                                 check_test_set_size, hom_on_test_set, window_isomorphisms)
from .aggregation import AggregateKind, AggregateOutcome, SideOutcome, aggregate_certificates
from .progress import SymmetryReduction, find_structure, find_symmetry


class GiantCertificateService:
    @staticmethod
    def local_certificates(*args, **kwargs) -> CertOutcome:
        '''Decide fullness of one test set.
        params:
            solver: LuksSolver
            x: string
            rep: GiantRep
            test_set: subset of [k]
            d: int
        return: CertOutcome
        '''
        return local_certificates(*args, **kwargs)

    @staticmethod
    def aggregate_certificates(*args, **kwargs) -> AggregateOutcome:
        return aggregate_certificates(*args, **kwargs)

    @staticmethod
    def symmetry_defect(*args, **kwargs) -> int:
        return symmetry_defect(*args, **kwargs)


__all__ = [
    'GiantCertificateService', 'GiantRep', 'affected_points', 'symmetry_defect', 'relative_symmetry_defect',
    'largest_alternating_support', 'orbital_configuration', 'transitivity_degree', 'CertKind', 'CertOutcome',
    'local_certificates', 'compare_local_certificates', 'check_test_set_size', 'hom_on_test_set',
    'window_isomorphisms', 'AggregateKind', 'AggregateOutcome', 'SideOutcome', 'aggregate_certificates',
    'SymmetryReduction', 'find_structure', 'find_symmetry',
]

from .instance import StringInstance, restrict_instance
from .union import coset_union
from .recursion import certificate_recursion, default_test_size, primitive_top, reconstruct_symmetry
from .solver import (LuksSolver, get_solver, string_iso_main, iso_window_shift, orbit_by_orbit,
                     standard_luks_reduction, base_case)


class LuksSolverService:
    @staticmethod
    def string_iso_main(*args, **kwargs):
        '''Iso_G^W(x, y) of a string instance.
        params:
            inst: StringInstance
            seq: PartitionSequence | None
        return: Coset, empty when no isomorphism exists
        '''
        return string_iso_main(*args, **kwargs)

    @staticmethod
    def iso_window_shift(*args, **kwargs):
        '''Iso over a coset G*g.
        params:
            inst: StringInstance with shift set
        return: Coset
        '''
        return iso_window_shift(*args, **kwargs)

    @staticmethod
    def standard_luks_reduction(*args, **kwargs):
        return standard_luks_reduction(*args, **kwargs)

    @staticmethod
    def coset_union(*args, **kwargs):
        return coset_union(*args, **kwargs)


__all__ = [
    'LuksSolverService', 'StringInstance', 'restrict_instance', 'coset_union', 'certificate_recursion',
    'default_test_size', 'primitive_top', 'reconstruct_symmetry', 'LuksSolver', 'get_solver',
    'string_iso_main', 'iso_window_shift', 'orbit_by_orbit', 'standard_luks_reduction', 'base_case',
]

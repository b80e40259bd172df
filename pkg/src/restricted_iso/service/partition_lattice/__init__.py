from .partition import Partition, refines, index, induced, is_semi_regular, orbit_partition
from .sequence import (PartitionSequence, ValidationReport, Violation, validate_almost_d_ary,
                       restrict_sequence)


class PartitionService:
    @staticmethod
    def validate_almost_d_ary(*args, **kwargs) -> ValidationReport:
        '''Check the almost d-ary condition of a partition sequence.
        params:
            seq: PartitionSequence
        return: ValidationReport
        '''
        return validate_almost_d_ary(*args, **kwargs)

    @staticmethod
    def restrict_sequence(*args, **kwargs) -> PartitionSequence:
        '''Restrict a sequence to a subgroup-invariant point set.
        params:
            seq: PartitionSequence
            subgroup: StabChain
            points: iterable of int
        return: PartitionSequence
        '''
        return restrict_sequence(*args, **kwargs)

    @staticmethod
    def block_tower(*args, **kwargs) -> PartitionSequence:
        return PartitionSequence.from_block_tower(*args, **kwargs)


__all__ = [
    'PartitionService', 'Partition', 'refines', 'index', 'induced', 'is_semi_regular', 'orbit_partition',
    'PartitionSequence', 'ValidationReport', 'Violation', 'validate_almost_d_ary', 'restrict_sequence',
]

from .errors import *
from .permutation import Permutation, compose, invert, apply, direct_sum
from .cycle_notation import parse_cycles, format_cycles, parse_generators, format_generators
from .stab_chain import (GeneratorList, StabChain, bsgs_build, build_chain, trivial_chain,
                         symmetric_chain, alternating_chain)
from .orbits import (orbits_on, is_transitive, block_closure,
                     max_block_system, is_block_system)
from .homomorphism import (GroupHom, identity_hom, induced_action, restrict_hom, set_action_hom,
                           trivial_hom)
from .backtrack import setwise_stabilizer, set_transporter, block_stabilizer
from .giants import GiantKind, is_giant, contains_alternating
from .coset import Coset, right_coset_reps
from .operations import (orbit, all_orbits, membership, point_stabilizer, min_block_system,
                         hom_kernel, hom_preimage, enumerate_elements)


class PermEngineService:
    @staticmethod
    def bsgs_build(*args, **kwargs) -> StabChain:
        '''Build a base and strong generating set.
        params:
            g: GeneratorList
        return: StabChain
        '''
        return bsgs_build(*args, **kwargs)

    @staticmethod
    def setwise_stabilizer(*args, **kwargs) -> StabChain:
        '''Setwise stabilizer of a point set.
        params:
            chain: StabChain
            points: iterable of int
        return: StabChain
        '''
        return setwise_stabilizer(*args, **kwargs)

    @staticmethod
    def min_block_system(*args, **kwargs) -> list:
        return min_block_system(*args, **kwargs)

    @staticmethod
    def induced_action(*args, **kwargs) -> GroupHom:
        return induced_action(*args, **kwargs)

    @staticmethod
    def is_giant(*args, **kwargs) -> GiantKind:
        return is_giant(*args, **kwargs)


__all__ = [
    'PermEngineService', 'Permutation', 'compose', 'invert', 'apply', 'direct_sum',
    'parse_cycles', 'format_cycles', 'parse_generators', 'format_generators',
    'GeneratorList', 'StabChain', 'bsgs_build', 'build_chain', 'trivial_chain', 'symmetric_chain',
    'alternating_chain', 'orbit', 'all_orbits', 'orbits_on', 'is_transitive', 'block_closure',
    'min_block_system', 'max_block_system', 'is_block_system', 'GroupHom', 'identity_hom',
    'induced_action', 'restrict_hom', 'set_action_hom', 'trivial_hom', 'setwise_stabilizer',
    'set_transporter', 'block_stabilizer', 'GiantKind', 'is_giant', 'contains_alternating', 'Coset',
    'right_coset_reps',
    'membership', 'point_stabilizer', 'hom_kernel', 'hom_preimage', 'enumerate_elements',
]

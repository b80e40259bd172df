from .socle import socle, normal_closure, minimal_normal_subgroups
from .johnson import (JohnsonRecognition, johnson_recognize, johnson_induced_permutation, johnson_subsets,
                      johnson_action)
from .classify import (PrimitiveKind, PrimitiveClassification, ClassificationReport, classify_primitive,
                       size_threshold)
from .giant_representation import GiantRepresentation, compute_giant_representation, giant_threshold
from .step_one import AugmentedInstance, reduce_step_one
from .unfold_graph import (BlockNode, LatticeNode, UnfoldGraph, build_unfold_graph, maximal_branches,
                           unfold_graph_to_dot)
from .step_two import recognize_level, select_johnson_levels, reduce_step_two, reduce_instance


class GroupReductionService:
    @staticmethod
    def classify_primitive(*args, **kwargs) -> PrimitiveClassification:
        '''Classify a primitive group as small or as a Johnson tower over its socle.
        params:
            chain: StabChain
            d: int
            config: ReductionConfig
        return: PrimitiveClassification
        '''
        return classify_primitive(*args, **kwargs)

    @staticmethod
    def johnson_recognize(*args, **kwargs):
        return johnson_recognize(*args, **kwargs)

    @staticmethod
    def reduce_step_one(*args, **kwargs) -> AugmentedInstance:
        '''Coset-tagging change of action.
        params:
            group: StabChain (transitive)
            x, y: strings
            d: int
        return: AugmentedInstance
        '''
        return reduce_step_one(*args, **kwargs)

    @staticmethod
    def reduce_step_two(*args, **kwargs) -> AugmentedInstance:
        return reduce_step_two(*args, **kwargs)

    @staticmethod
    def reduce_instance(*args, **kwargs) -> AugmentedInstance:
        return reduce_instance(*args, **kwargs)

    @staticmethod
    def compute_giant_representation(*args, **kwargs):
        return compute_giant_representation(*args, **kwargs)


__all__ = [
    'GroupReductionService', 'socle', 'normal_closure', 'minimal_normal_subgroups', 'JohnsonRecognition',
    'johnson_recognize', 'johnson_induced_permutation', 'johnson_subsets', 'johnson_action', 'PrimitiveKind',
    'PrimitiveClassification', 'ClassificationReport', 'classify_primitive', 'size_threshold',
    'GiantRepresentation', 'compute_giant_representation', 'giant_threshold', 'AugmentedInstance',
    'reduce_step_one', 'BlockNode', 'LatticeNode', 'UnfoldGraph', 'build_unfold_graph', 'maximal_branches',
    'unfold_graph_to_dot', 'recognize_level', 'select_johnson_levels', 'reduce_step_two', 'reduce_instance',
]

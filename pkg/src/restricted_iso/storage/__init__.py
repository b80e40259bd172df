from .models import (GroupModel, PartitionModel, SequenceModel, InstanceModel, ResultModel, StructureModel,
                     HypergraphModel, GraphModel, PhiModel, CertifyModel, CertificateModel)
from .files import (read_json, load_model, parse_graph_text, load_graph, load_isomorphism_input, dump_model,
                    write_model)
__all__ = [
    'GroupModel', 'PartitionModel', 'SequenceModel', 'InstanceModel', 'ResultModel', 'StructureModel',
    'HypergraphModel', 'GraphModel', 'PhiModel', 'CertifyModel', 'CertificateModel', 'read_json', 'load_model',
    'parse_graph_text', 'load_graph', 'load_isomorphism_input', 'dump_model', 'write_model',
]

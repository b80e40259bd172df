import json
import logging
from pathlib import Path
from typing import Type, TypeVar

from pydantic import BaseModel, ValidationError

from ..service.iso_applications import Graph
from ..service.perm_engine import InstanceFormatError
from .models import GraphModel, HypergraphModel, StructureModel

logger = logging.getLogger(__name__)

ModelT = TypeVar('ModelT', bound=BaseModel)


def read_json(path: str | Path) -> object:
    path = Path(path)
    if not path.exists():
        raise InstanceFormatError(f'input file not found: {path}')
    try:
        return json.loads(path.read_text(encoding='utf-8'))
    except json.JSONDecodeError as e:
        raise InstanceFormatError(f'{path}: invalid JSON ({e.msg} at line {e.lineno})') from e


def load_model(path: str | Path, model: Type[ModelT]) -> ModelT:
    data = read_json(path)
    try:
        return model.model_validate(data)
    except ValidationError as e:
        raise InstanceFormatError(f'{path}: {e.error_count()} validation errors\n{e}') from e


def parse_graph_text(text: str) -> Graph:
    '''
    Edge list with 1-indexed "u v" lines, or DIMACS with "p edge n m" and "e u v" lines.
    Lines starting with '#' or 'c' are comments. Without a header n is the largest vertex.
    '''
    n = None
    pairs = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith('#') or line.startswith('c'):
            continue
        tokens = line.split()
        if tokens[0] == 'p':
            if len(tokens) < 3 or not tokens[2].isdigit():
                raise InstanceFormatError(f'line {number}: malformed header {line!r}')
            n = int(tokens[2])
            continue
        if tokens[0] == 'e':
            tokens = tokens[1:]
        if len(tokens) != 2 or not all(t.isdigit() for t in tokens):
            raise InstanceFormatError(f'line {number}: expected "u v", got {line!r}')
        u, v = int(tokens[0]), int(tokens[1])
        if u == v:
            raise InstanceFormatError(f'line {number}: loop at vertex {u}')
        pairs.append((u, v))
    if n is None:
        n = max((max(p) for p in pairs), default=0)
    for u, v in pairs:
        if not (1 <= u <= n and 1 <= v <= n):
            raise InstanceFormatError(f'edge {u} {v} outside 1..{n}')
    return Graph.from_pairs(n, [(u - 1, v - 1) for u, v in pairs])


def load_graph(path: str | Path) -> Graph:
    path = Path(path)
    if path.suffix.lower() == '.json':
        return load_model(path, GraphModel).to_graph()
    if not path.exists():
        raise InstanceFormatError(f'input file not found: {path}')
    return parse_graph_text(path.read_text(encoding='utf-8'))


def load_isomorphism_input(path: str | Path):
    '''
    A graph, hypergraph or relational structure, told apart by content: JSON with "arity"
    is a structure, JSON with an edge of size other than 2 is a hypergraph.
    '''
    path = Path(path)
    if path.suffix.lower() != '.json':
        return load_graph(path)
    data = read_json(path)
    if isinstance(data, dict) and 'arity' in data:
        return load_model(path, StructureModel).to_structure(pad=True)
    if isinstance(data, dict) and any(len(e) != 2 for e in data.get('edges', [])):
        return load_model(path, HypergraphModel).to_hypergraph()
    return load_model(path, GraphModel).to_graph()


def dump_model(model: BaseModel) -> str:
    return model.model_dump_json(indent=2, exclude_none=True, by_alias=True)


def write_model(model: BaseModel, path: str | Path):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_model(model) + '\n', encoding='utf-8')
    logger.info('wrote %s', path.as_posix())

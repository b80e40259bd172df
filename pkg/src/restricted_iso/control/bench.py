import logging
import time
from pathlib import Path
from random import Random
from typing import Iterator, Optional

import pandas as pd
from tqdm import tqdm

from ..config import ToolkitConfig
from ..service.luks_solver import StringInstance, string_iso_main
from ..service.partition_lattice import PartitionSequence
from ..service.perm_engine import Permutation, RestrictedIsoError, StabChain, build_chain, direct_sum
from ..storage import InstanceModel, load_model
from ..utils import get_recursion_tracer
from .common import failure, make_solver

logger = logging.getLogger(__name__)

BENCH_COLUMNS = ['instance_id', 'n', 'd', 'group_order', 'branch', 'calls', 'max_depth', 'millis']


def _random_permutation(rng: Random, n: int) -> Permutation:
    images = list(range(n))
    rng.shuffle(images)
    return Permutation(images)


def _wreath_s2(k: int) -> StabChain:
    '''S_2 wr S_k on 2k points with blocks {2i, 2i+1}.'''
    n = 2 * k
    gens = [Permutation.from_cycles(n, [[0, 1]])]
    if k >= 2:
        gens.append(Permutation.from_cycles(n, [[0, 2], [1, 3]]))
        gens.append(Permutation.from_cycles(n, [list(range(0, n, 2)), list(range(1, n, 2))]))
    return build_chain(gens, n)


def _random_group(rng: Random) -> StabChain:
    kind = rng.choice(['random', 'random', 'wreath', 'intransitive'])
    if kind == 'wreath':
        return _wreath_s2(rng.randint(3, 5))
    n = rng.randint(4, 8)
    if kind == 'random':
        return build_chain([_random_permutation(rng, n) for _ in range(rng.randint(1, 2))], n)
    cut = rng.randint(2, n - 2)
    left = direct_sum(_random_permutation(rng, cut), Permutation.identity(n - cut))
    right = direct_sum(Permutation.identity(cut), _random_permutation(rng, n - cut))
    return build_chain([left, right], n)


def generate_suite(seed: int, count: int) -> Iterator[tuple[str, StringInstance]]:
    '''Seeded instances; half of them have y = x^g for a random g in the group.'''
    rng = Random(seed)
    for i in range(count):
        group = _random_group(rng)
        n = group.degree
        alphabet = 'ab' if rng.random() < 0.5 else 'abc'
        x = [rng.choice(alphabet) for _ in range(n)]
        if rng.random() < 0.5:
            g = group.random_element(rng)
            y = [None] * n
            for a in range(n):
                y[g.images[a]] = x[a]
        else:
            y = [rng.choice(alphabet) for _ in range(n)]
        yield f'gen-{seed}-{i:04d}', StringInstance(tuple(x), tuple(y), group)


def _directory_suite(directory: Path) -> Iterator[tuple[str, StringInstance]]:
    for path in sorted(directory.glob('*.json')):
        yield path.stem, load_model(path, InstanceModel).to_instance()


def bench_process(directory: Optional[str | Path] = None, seed: int = 20240601, count: int = 50,
                  output: Optional[str | Path] = None, config: Optional[ToolkitConfig] = None) -> dict:
    '''Time string isomorphism over a suite and collect recursion statistics as CSV.'''
    solver = make_solver(config)
    tracer = get_recursion_tracer()
    try:
        if directory is not None:
            if not Path(directory).is_dir():
                raise FileNotFoundError(f'bench directory not found: {directory}')
            suite = list(_directory_suite(Path(directory)))
        else:
            suite = list(generate_suite(seed, count))
    except (RestrictedIsoError, ValueError, OSError) as e:
        return failure('基准实例加载失败', str(directory), e)
    rows = []
    for instance_id, inst in tqdm(suite, desc='bench', unit='instance'):
        tracer.reset()
        start = time.perf_counter()
        try:
            string_iso_main(inst, None, solver)
        except RestrictedIsoError as e:
            logger.warning('%s failed: %s', instance_id, e)
            continue
        millis = (time.perf_counter() - start) * 1000
        summary = tracer.summary()
        rows.append({
            'instance_id': instance_id,
            'n': inst.degree,
            'd': PartitionSequence.from_block_tower(inst.group).d,
            'group_order': inst.group.order(),
            'branch': summary['branch'],
            'calls': summary['calls'],
            'max_depth': summary['max_depth'],
            'millis': round(millis, 3),
        })
    frame = pd.DataFrame(rows, columns=BENCH_COLUMNS)
    if output is not None:
        Path(output).parent.mkdir(parents=True, exist_ok=True)
        frame.to_csv(output, index=False)
        csv = None
    else:
        csv = frame.to_csv(index=False)
    logger.info('bench: %d of %d instances solved', len(rows), len(suite))
    return {'status': 'success', 'error_message': '', 'rows': len(rows), 'csv': csv, 'frame': frame}

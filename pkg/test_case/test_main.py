import json

from restricted_iso.control import bench_process, generate_suite, gi_process, si_process
from restricted_iso.main import EXIT_ERROR, EXIT_ISO, EXIT_NONISO, main
from restricted_iso.utils import get_engine_settings

HEXAGON = '1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n'
TRIANGLES = '1 2\n2 3\n3 1\n4 5\n5 6\n6 4\n'


def write(path, text: str) -> str:
    path.write_text(text, encoding='utf-8')
    return str(path)


def s4_instance(tmp_path) -> str:
    return write(tmp_path / 'instance.json', json.dumps({
        'n': 4, 'x': ['a', 'a', 'b', 'b'], 'y': ['a', 'b', 'a', 'b'],
        'group': {'n': 4, 'gens': ['(1 2)', '(1 2 3 4)']},
    }))


def test_gi_exit_codes(tmp_path, capsys):
    hexagon = write(tmp_path / 'c6.txt', HEXAGON)
    relabelled = write(tmp_path / 'c6b.txt', '1 3\n3 5\n5 2\n2 4\n4 6\n6 1\n')
    triangles = write(tmp_path / 'triangles.txt', TRIANGLES)
    assert main(['gi', hexagon, relabelled]) == EXIT_ISO
    assert capsys.readouterr().out.strip() == 'ISO'
    assert main(['gi', hexagon, triangles]) == EXIT_NONISO
    assert capsys.readouterr().out.strip() == 'NONISO'
    bad = write(tmp_path / 'bad.txt', '1 2 3\n')
    assert main(['gi', hexagon, bad]) == EXIT_ERROR
    assert '输入解析失败' in capsys.readouterr().err


def test_gi_json_output(tmp_path, capsys):
    hexagon = write(tmp_path / 'c6.txt', HEXAGON)
    assert main(['gi', hexagon, hexagon, '--json']) == EXIT_ISO
    out = capsys.readouterr().out
    result = json.loads(out.split('\n', 1)[1])
    assert result['order'] == 12 and not result['empty']


def test_si_and_aut(tmp_path, capsys):
    assert main(['si', s4_instance(tmp_path), '--json']) == EXIT_ISO
    out = capsys.readouterr().out
    assert json.loads(out.split('\n', 1)[1])['order'] == 4
    assert main(['aut', write(tmp_path / 'c6.txt', HEXAGON)]) == EXIT_ISO
    result = gi_process(tmp_path / 'c6.txt', tmp_path / 'c6.txt')
    assert result['status'] == 'success' and result['result'].order == 12


def test_si_rejects_bad_window(tmp_path):
    path = write(tmp_path / 'window.json', json.dumps({
        'n': 3, 'x': ['a', 'b', 'c'], 'y': ['a', 'b', 'c'],
        'group': {'n': 3, 'gens': ['(1 2 3)']}, 'window': [1],
    }))
    result = si_process(path)
    assert result['status'] == 'failure'
    assert result['error_message']['异常'] == 'NotInvariant'
    assert main(['si', path]) == EXIT_ERROR


def test_validate_seq(tmp_path, capsys):
    group = write(tmp_path / 'group.json', json.dumps({
        'n': 6, 'gens': ['(1 2)', '(1 3)(2 4)', '(1 3 5)(2 4 6)']}))
    seq = {'d': 2, 'partitions': [[[1, 2, 3, 4, 5, 6]], [[1, 2], [3, 4], [5, 6]],
                                  [[1], [2], [3], [4], [5], [6]]]}
    narrow = write(tmp_path / 'narrow.json', json.dumps(seq))
    assert main(['validate-seq', group, narrow]) == EXIT_NONISO
    assert capsys.readouterr().out.startswith('INVALID d=2')
    seq['d'] = 3
    wide = write(tmp_path / 'wide.json', json.dumps(seq))
    assert main(['validate-seq', group, wide, '--json']) == EXIT_ISO
    assert json.loads(capsys.readouterr().out) == {'valid': True, 'd': 3, 'violations': []}


def test_reduce(tmp_path, capsys):
    path = write(tmp_path / 'wreath.json', json.dumps({
        'n': 6, 'x': list('aabbab'), 'y': list('ababab'),
        'group': {'n': 6, 'gens': ['(1 2)', '(1 3)(2 4)', '(1 3 5)(2 4 6)']},
    }))
    assert main(['reduce', path, '-d', '3']) == EXIT_ISO
    augmented = json.loads(capsys.readouterr().out)
    assert augmented['d'] >= 1 and augmented['partitions'][-1] == [[p] for p in range(1, augmented['n'] + 1)]
    assert len(augmented['x']) == augmented['n'] == len(augmented['origin'])


def test_certify(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv('RESTRICTED_ISO_CERTIFICATE_ALLOW_SMALL_T', 'true')
    data = {'group': {'n': 6, 'gens': ['(1 2)', '(1 2 3 4 5 6)']}, 'x': ['a'] * 6,
            'phi': {'k': 6, 'images': ['(1 2)', '(1 2 3 4 5 6)']}, 'T': [1, 2, 3], 'd': 6}
    assert main(['certify', write(tmp_path / 'full.json', json.dumps(data))]) == EXIT_ISO
    assert capsys.readouterr().out.strip() == 'FULL'
    data['x'] = ['a', 'b', 'a', 'a', 'a', 'a']
    assert main(['certify', write(tmp_path / 'nonfull.json', json.dumps(data)), '--json']) == EXIT_ISO
    out = capsys.readouterr().out
    assert out.startswith('NONFULL')
    data['phi']['images'] = ['(1 2)', '(1 2 3)']
    assert main(['certify', write(tmp_path / 'broken.json', json.dumps(data))]) == EXIT_ERROR


def test_bench(tmp_path, capsys):
    assert main(['--seed', '5', 'bench', '--count', '3']) == EXIT_ISO
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == 'instance_id,n,d,group_order,branch,calls,max_depth,millis'
    assert len(lines) == 4
    out = tmp_path / 'bench.csv'
    result = bench_process(seed=5, count=2, output=out)
    assert result['status'] == 'success' and result['csv'] is None
    assert out.read_text(encoding='utf-8').startswith('instance_id,')
    ids = [instance_id for instance_id, _ in generate_suite(5, 3)]
    assert ids == [instance_id for instance_id, _ in generate_suite(5, 3)]


def test_bad_configuration(tmp_path, capsys):
    hexagon = write(tmp_path / 'c6.txt', HEXAGON)
    assert main(['--brute-cap', '0', 'gi', hexagon, hexagon]) == EXIT_ERROR
    assert main(['--env-file', str(tmp_path / 'none.env'), 'gi', hexagon, hexagon]) == EXIT_ERROR


def test_seeded_runs_are_identical(tmp_path, capsys):
    hexagon = write(tmp_path / 'c6.txt', HEXAGON)
    instance = s4_instance(tmp_path)
    commands = [['--seed', '5', 'bench', '--count', '4'],
                ['--seed', '5', 'gi', hexagon, hexagon, '--json'],
                ['--seed', '5', 'si', instance, '--json']]
    try:
        for argv in commands:
            outputs = []
            for _ in range(3):
                main(argv)
                out = capsys.readouterr().out
                if argv[2] == 'bench':
                    out = '\n'.join(line.rsplit(',', 1)[0] for line in out.strip().splitlines())
                outputs.append(out)
            assert outputs[0] and outputs.count(outputs[0]) == 3
    finally:
        get_engine_settings().reset()


if __name__ == "__main__":
    import pytest
    pytest.main([__file__])

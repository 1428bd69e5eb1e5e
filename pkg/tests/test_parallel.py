import pytest
import ray

from codedocs.documents import generate_documents
from codedocs.parallel import initialize_ray, parallel_map, shutdown_ray
from codedocs.parsing import SourceFile, count_lines_of_code, parse_files
from tests.conftest import DRAWING_SHAPES_DIR


@pytest.fixture(scope='module')
def ray_runtime():
    try:
        initialize_ray(2)
    except Exception as e:
        pytest.skip(f'no local ray runtime: {e}')
    yield
    shutdown_ray()


def test_sequential_map():
    assert parallel_map(count_lines_of_code, ['a;\n', '', 'a;\nb;\n']) == [1, 0, 2]


def test_parallel_map_keeps_order(ray_runtime):
    texts = [f'{"x;" * i}\n' * i for i in range(8)]
    assert parallel_map(count_lines_of_code, texts, parallel=True, num_workers=2) == list(range(8))


def test_parallel_parsing_matches_sequential(ray_runtime, drawing_shapes_files):
    files = drawing_shapes_files + [SourceFile('Broken.java', 'class Broken {')]
    sequential = parse_files(files)
    parallel = parse_files(files, parallel=True, num_workers=2)
    assert parallel[0] == sequential[0]
    assert [str(f) for f in parallel[1]] == [str(f) for f in sequential[1]]
    assert parallel[1][0].path == 'Broken.java'


def test_parallel_documents_match_sequential(ray_runtime, tmp_path, drawing_shapes):
    kinds = ['package', 'method-info', 'method-dependency']
    sequential = generate_documents(drawing_shapes, kinds, str(tmp_path / 'sequential'))
    parallel = generate_documents(drawing_shapes, kinds, str(tmp_path / 'parallel'), parallel=True, num_workers=2)
    assert len(parallel) == len(sequential) == 2 + 6
    for sequential_path, parallel_path in zip(sequential, parallel):
        with open(sequential_path, encoding='utf-8') as f, open(parallel_path, encoding='utf-8') as g:
            assert f.read() == g.read()


def test_unused_runtime_is_not_started():
    shutdown_ray()
    assert parallel_map(count_lines_of_code, ['a;\n'], parallel=True) == [1]
    assert not ray.is_initialized()

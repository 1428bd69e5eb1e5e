import pytest
import yaml

from codedocs.code_model import Project
from codedocs.exchange import parse_model, serialize_model
from codedocs.metrics import MetricsRecord, class_metrics, format_metrics_table, method_metrics, project_metrics, \
    write_metrics_record
from tests.conftest import CORE_ELEMENTS, CORE_FRAME
from tests.corpus_factory import build_project, generate_corpus


def test_fixture_project_metrics(drawing_shapes, drawing_shapes_files):
    record = project_metrics(drawing_shapes)
    assert record.loc == sum(f.line_count for f in drawing_shapes_files)
    assert (record.nop, record.noc, record.noa, record.nom) == (2, 6, 14, 29)
    assert record.nop_declared == 4


@pytest.mark.parametrize('name, expected', [
    (f'{CORE_FRAME}.MyShape', (5, 12)),
    (f'{CORE_FRAME}.PaintJPanel', (4, 6)),
    (f'{CORE_FRAME}.DrawingShapes', (5, 5)),
    (f'{CORE_ELEMENTS}.MyLine', (0, 2)),
    (f'{CORE_ELEMENTS}.MyRectangle', (0, 2)),
])
def test_fixture_class_metrics(drawing_shapes_classes, name, expected):
    assert class_metrics(drawing_shapes_classes[name]) == expected


def test_method_metrics(drawing_shapes_classes):
    my_rectangle = drawing_shapes_classes[f'{CORE_ELEMENTS}.MyRectangle']
    constructor = my_rectangle.find_methods('MyRectangle')[0]
    assert method_metrics(constructor).param_count == 5
    assert method_metrics(constructor).local_count == 0
    draw = my_rectangle.find_methods('draw')[0]
    assert method_metrics(draw).local_count == 4


def test_empty_project():
    assert project_metrics(Project('empty')) == MetricsRecord()


def test_default_package_counts():
    project = build_project({'A.java': 'class A { int a; void f() {} }', 'B.java': 'class B {}'})
    record = project_metrics(project)
    assert (record.nop, record.noc, record.noa, record.nom, record.nop_declared) == (1, 2, 1, 1, 1)


def test_totals_are_sums_of_class_metrics():
    for seed in range(5):
        project = build_project(generate_corpus(seed))
        record = project_metrics(project)
        per_class = [class_metrics(c) for c in project.iter_classes()]
        assert record.noa == sum(m.noa for m in per_class)
        assert record.nom == sum(m.nom for m in per_class)
        assert record.noc == len(per_class)


def test_adding_a_class_only_adds_to_noc(drawing_shapes_files):
    sources = {f.path: f.text for f in drawing_shapes_files}
    before = build_project(sources)
    sources['extra/Extra.java'] = (f'package {CORE_FRAME};\n'
                                    'public class Extra extends MyShape { int e; void f() {} }\n')
    after = build_project(sources)
    assert project_metrics(after).noc == project_metrics(before).noc + 1
    after_classes = after.class_index()
    for entity in before.iter_classes():
        assert class_metrics(after_classes[entity.qualified_name]) == class_metrics(entity)
    assert class_metrics(after_classes[f'{CORE_FRAME}.Extra']) == (1, 1)


def test_metrics_survive_exchange(drawing_shapes):
    assert project_metrics(parse_model(serialize_model(drawing_shapes))) == project_metrics(drawing_shapes)


def test_metrics_table():
    table = format_metrics_table(MetricsRecord(loc=120, nop=2, noc=6, noa=14, nom=29, nop_declared=4))
    assert table == 'LoC 120\nNoP 2\nNoC 6\nNoA 14\nNoM 29\n'


def test_metrics_record_file(tmp_path):
    path = tmp_path / 'metrics.yaml'
    write_metrics_record(MetricsRecord(loc=10, nop=1, noc=2, noa=3, nom=4, nop_declared=2), str(path))
    data = yaml.safe_load(path.read_text(encoding='utf-8'))
    assert data == {'loc': 10, 'nop': 1, 'noc': 2, 'noa': 3, 'nom': 4, 'nop_declared': 2,
                    'nop_rule': 'class-bearing'}

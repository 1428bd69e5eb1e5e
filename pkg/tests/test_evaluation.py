import math
from fractions import Fraction

import pytest

from codedocs.evaluation import LinkSet, evaluate_models, extract_links, precision_recall
from codedocs.exchange import write_model
from tests.conftest import CORE_ELEMENTS, CORE_FRAME
from tests.corpus_factory import build_project, generate_corpus


def link_set(*links):
    return LinkSet(frozenset(links))


def numbered_links(count, prefix='class:gen.C'):
    return LinkSet(frozenset(f'{prefix}{i}' for i in range(count)))


def test_fixture_links(drawing_shapes):
    links = extract_links(drawing_shapes)
    assert len(links) == 139
    assert links.get_kinds() == {'pkg': 4, 'class': 6, 'attr': 14, 'method': 29, 'local': 12, 'inherits': 3,
                                 'invokes': 6, 'accesses': 65}
    assert f'pkg:{CORE_FRAME}' in links
    assert f'inherits:{CORE_ELEMENTS}.MyOval->{CORE_FRAME}.MyShape' in links
    assert f'invokes:{CORE_FRAME}.PaintJPanel#paintComponent(Graphics)->{CORE_FRAME}.MyShape#draw' in links
    assert f'accesses:{CORE_ELEMENTS}.MyLine#draw(Graphics)->{CORE_FRAME}.MyShape#color' in links
    assert f'local:{CORE_FRAME}.DrawingShapes#main(String[])#application' in links


def test_unresolved_dependencies_are_not_links(drawing_shapes):
    links = extract_links(drawing_shapes)
    classes = drawing_shapes.class_index()
    dependencies = [link for link in links if link.startswith(('invokes:', 'accesses:'))]
    assert len(dependencies) == 71
    for link in dependencies:
        class_name, member = link.split('->', 1)[1].split('#')
        assert class_name in classes
        if link.startswith('invokes:'):
            assert classes[class_name].find_methods(member)
        else:
            assert classes[class_name].find_attribute(member) is not None
    assert not any('->JPanel#' in link or link.endswith('#addMouseListener') for link in links)


def test_interface_links():
    project = build_project({
        'p/Api.java': 'package p; public interface Api extends Base {}',
        'p/Base.java': 'package p; public interface Base {}',
        'p/Impl.java': 'package p; public class Impl implements Api, Runnable {}',
    })
    links = extract_links(project)
    assert 'inherits:p.Api->p.Base' in links
    assert 'implements:p.Impl->p.Api' in links
    assert links.get_kinds() == {'pkg': 1, 'class': 3, 'inherits': 1, 'implements': 1}


def test_worked_example():
    reference = numbered_links(95)
    retrieved = numbered_links(90)
    report = precision_recall(retrieved, reference)
    assert report.precision == 1
    assert report.recall == Fraction(90, 95)
    assert math.floor(report.recall * 100) == 94
    assert report.true_positives == 90
    assert len(report.missing) == 5
    assert len(report.spurious) == 0
    assert 'recall 0.9474' in report.format()


def test_spurious_links():
    report = precision_recall(link_set('a', 'b', 'c', 'd'), link_set('a', 'b'))
    assert report.precision == Fraction(1, 2)
    assert report.recall == 1
    assert list(report.spurious) == ['c', 'd']
    assert report.format().splitlines()[-2:] == ['  c', '  d']


def test_identical_sets():
    report = precision_recall(link_set('a', 'b'), link_set('a', 'b'))
    assert (report.precision, report.recall) == (1, 1)


@pytest.mark.parametrize('retrieved, reference, expected', [
    (link_set(), link_set('a'), (1, 0)),
    (link_set('a'), link_set(), (0, 1)),
    (link_set(), link_set(), (1, 1)),
])
def test_empty_sets(retrieved, reference, expected):
    report = precision_recall(retrieved, reference)
    assert (report.precision, report.recall) == expected


def test_perfect_scores_mean_no_differences():
    for retrieved, reference in [(link_set('a', 'b'), link_set('b', 'c')), (link_set('a'), link_set('a', 'b'))]:
        report = precision_recall(retrieved, reference)
        assert (report.precision == 1) == (len(report.spurious) == 0)
        assert (report.recall == 1) == (len(report.missing) == 0)


def test_symmetry():
    for seed in range(5):
        first = extract_links(build_project(generate_corpus(seed)))
        second = extract_links(build_project(generate_corpus(seed + 100)))
        assert precision_recall(first, second).precision == precision_recall(second, first).recall
        assert precision_recall(first, second).recall == precision_recall(second, first).precision


def test_self_evaluation(drawing_shapes):
    links = extract_links(drawing_shapes)
    report = precision_recall(links, links)
    assert (report.precision, report.recall) == (1, 1)


def test_meets():
    report = precision_recall(numbered_links(90), numbered_links(95))
    assert report.meets(1.0, 0.9)
    assert not report.meets(1.0, 0.95)


def test_evaluate_models(tmp_path, drawing_shapes):
    path = tmp_path / 'model.xml'
    write_model(drawing_shapes, str(path))
    report = evaluate_models(str(path), str(path))
    assert (report.precision, report.recall) == (1, 1)
    assert report.retrieved_count == 139


def test_evaluate_against_unresolved_model(tmp_path, drawing_shapes, drawing_shapes_unresolved):
    retrieved = tmp_path / 'retrieved.xml'
    reference = tmp_path / 'reference.xml'
    write_model(drawing_shapes_unresolved, str(retrieved))
    write_model(drawing_shapes, str(reference))
    report = evaluate_models(str(retrieved), str(reference))
    assert report.precision == 1
    assert report.recall == Fraction(139 - 3 - 6 - 65, 139)

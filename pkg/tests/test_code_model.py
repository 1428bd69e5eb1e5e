import pytest

from codedocs.code_model import AttributeEntity, ClassEntity, ExternalTypeRef, MethodEntity, Package, TypeRef, \
    build_model, check_model, lookup, resolve_references
from codedocs.errors import InputError, ModelError
from codedocs.parsing import AccessLevel
from tests.conftest import CORE_ELEMENTS, CORE_FRAME
from tests.corpus_factory import build_project


def relation_targets(relations, name_of):
    return [(name_of(r), r.declaring_class and r.declaring_class.name, r.resolved) for r in relations]


def invocations(method):
    return relation_targets(method.invocations, lambda r: r.invoked_method_name)


def accesses(method):
    return relation_targets(method.accesses, lambda r: r.accessed_attribute_name)


def find_method(entity, name):
    return entity.find_methods(name)[0]


def test_fixture_containment(drawing_shapes, drawing_shapes_files):
    assert [p.qualified_name for p in drawing_shapes.packages] == ['Drawing', 'Drawing.Shapes', CORE_ELEMENTS,
                                                                  CORE_FRAME]
    assert [c.name for c in drawing_shapes.find_package(CORE_ELEMENTS).classes] == ['MyLine', 'MyOval',
                                                                                  'MyRectangle']
    assert [c.name for c in drawing_shapes.find_package(CORE_FRAME).classes] == ['DrawingShapes', 'MyShape',
                                                                               'PaintJPanel']
    assert drawing_shapes.find_package('Drawing').classes == []
    assert drawing_shapes.loc == sum(f.line_count for f in drawing_shapes_files)


def test_zero_files():
    project = build_model([], [], 'empty')
    assert project.packages == []
    assert project.loc == 0
    assert resolve_references(project) == project


def test_multi_declarator_attributes_become_entities():
    project = build_project({'A.java': 'class A { int a, b; }'})
    entity = project.class_index()['A']
    assert [(a.name, a.declared_type) for a in entity.attributes] == [('a', 'int'), ('b', 'int')]
    assert [p.qualified_name for p in project.packages] == ['']


def test_duplicate_class_names_both_files():
    sources = {'one/A.java': 'package p; class A {}', 'two/A.java': 'package p; class A {}'}
    with pytest.raises(ModelError) as e:
        build_project(sources)
    assert 'one/A.java' in str(e.value)
    assert 'two/A.java' in str(e.value)


def test_duplicate_members():
    with pytest.raises(ModelError):
        build_project({'A.java': 'class A { int a; String a; }'})
    with pytest.raises(ModelError):
        build_project({'A.java': 'class A { void f(int x) {} void f(int y) {} }'})
    project = build_project({'A.java': 'class A { void f(int x) {} void f(String y) {} }'})
    assert len(project.class_index()['A'].methods) == 2


def test_builder_leaves_relations_unresolved(drawing_shapes_unresolved):
    paint = drawing_shapes_unresolved.class_index()[f'{CORE_FRAME}.PaintJPanel']
    assert paint.superclass == TypeRef('JPanel')
    relations = [r for m in paint.methods for r in m.invocations + m.accesses]
    assert relations
    assert all(r.declaring_class is None and not r.resolved for r in relations)


def test_inheritance_resolution(drawing_shapes_classes):
    for name in ('MyLine', 'MyOval', 'MyRectangle'):
        assert drawing_shapes_classes[f'{CORE_ELEMENTS}.{name}'].superclass == TypeRef(f'{CORE_FRAME}.MyShape', True)
    assert drawing_shapes_classes[f'{CORE_FRAME}.DrawingShapes'].superclass == TypeRef('JFrame')
    assert drawing_shapes_classes[f'{CORE_FRAME}.PaintJPanel'].superclass == TypeRef('JPanel')
    assert drawing_shapes_classes[f'{CORE_FRAME}.MyShape'].superclass is None


def test_internal_inheritance_edges(drawing_shapes):
    edges = {(c.name, c.superclass.simple_name) for c in drawing_shapes.iter_classes()
             if c.superclass is not None and c.superclass.is_internal}
    assert edges == {('MyLine', 'MyShape'), ('MyOval', 'MyShape'), ('MyRectangle', 'MyShape')}


def test_external_types(drawing_shapes):
    assert drawing_shapes.external_types == [ExternalTypeRef('JFrame'), ExternalTypeRef('JPanel')]


def test_invocation_through_attribute_type(drawing_shapes_classes):
    paint_component = find_method(drawing_shapes_classes[f'{CORE_FRAME}.PaintJPanel'], 'paintComponent')
    assert invocations(paint_component) == [('paintComponent', 'JPanel', False),
                                            ('draw', f'{CORE_FRAME}.MyShape', True)]
    assert accesses(paint_component) == [('currentShape', f'{CORE_FRAME}.PaintJPanel', True)] * 2


def test_unqualified_call_to_framework_method(drawing_shapes_classes):
    # not declared along the internal chain: kept unresolved against the receiver's own type
    constructor = find_method(drawing_shapes_classes[f'{CORE_FRAME}.PaintJPanel'], 'PaintJPanel')
    assert ('addMouseListener', f'{CORE_FRAME}.PaintJPanel', False) in invocations(constructor)


def test_unqualified_call_to_own_method(drawing_shapes_classes):
    constructor = find_method(drawing_shapes_classes[f'{CORE_FRAME}.DrawingShapes'], 'DrawingShapes')
    assert invocations(constructor) == [('createControls', f'{CORE_FRAME}.DrawingShapes', True)]


def test_inherited_attribute_access(drawing_shapes_classes):
    draw = find_method(drawing_shapes_classes[f'{CORE_ELEMENTS}.MyLine'], 'draw')
    assert accesses(draw) == [(name, f'{CORE_FRAME}.MyShape', True) for name in ('color', 'x1', 'y1', 'x2', 'y2')]
    assert invocations(draw) == [('setColor', 'Graphics', False), ('drawLine', 'Graphics', False)]


def test_receiver_through_local_and_static_type(drawing_shapes_classes):
    drawing_shapes = drawing_shapes_classes[f'{CORE_FRAME}.DrawingShapes']
    assert invocations(find_method(drawing_shapes, 'main')) == [('setSize', f'{CORE_FRAME}.DrawingShapes', False),
                                                                ('setVisible', f'{CORE_FRAME}.DrawingShapes', False)]
    color_changed = find_method(drawing_shapes, 'colorChooserItemChanged')
    assert ('BLACK', 'Color', False) in accesses(color_changed)
    assert ('setCurrentShapeColor', f'{CORE_FRAME}.PaintJPanel', True) in invocations(color_changed)


def test_resolution_rules():
    sources = {
        'a/Base.java': 'package a; public class Base { protected int size; public void grow() {} }',
        'a/Item.java': '''package a;
import b.*;
public class Item extends Base implements Api {
    private Helper helper;
    public void run(Helper other) {
        Base local = new Base();
        local.grow();
        other.help();
        this.helper.help();
        this.size = 1;
        grow();
        start();
        unknown.thing();
        make().value = 2;
    }
}
''',
        'b/Helper.java': 'package b; public class Helper extends Thread { public void help() {} }',
        'b/Api.java': 'package b; public interface Api { void start(); }',
    }
    project = build_project(sources)
    item = project.class_index()['a.Item']
    assert item.super_interfaces == [TypeRef('b.Api', True)]
    run = item.methods[0]
    assert invocations(run) == [
        ('grow', 'a.Base', True),
        ('help', 'b.Helper', True),
        ('help', 'b.Helper', True),
        ('grow', 'a.Base', True),
        ('start', 'b.Api', True),
        ('thing', 'unknown', False),
        ('make', 'a.Item', False),
    ]
    assert accesses(run) == [('helper', 'a.Item', True), ('size', 'a.Base', True), ('value', 'make()', False)]
    assert check_model(project) == []


def test_bare_attribute_names():
    sources = {
        'p/Shape.java': 'package p; public class Shape { int x2; public void setX2(int x2) { this.x2 = x2; } }',
        'p/Panel.java': '''package p;
public class Panel {
    private Shape currentShape;
    private int count;
    public void dragged(int x) {
        currentShape.setX2(x);
        count = count + 1;
    }
}
''',
    }
    project = build_project(sources)
    classes = project.class_index()
    dragged = classes['p.Panel'].methods[0]
    assert invocations(dragged) == [('setX2', 'p.Shape', True)]
    assert accesses(dragged) == [('currentShape', 'p.Panel', True), ('count', 'p.Panel', True),
                                 ('count', 'p.Panel', True)]
    assert accesses(classes['p.Shape'].methods[0]) == [('x2', 'p.Shape', True)]
    assert resolve_references(project) == project


def test_bare_names_that_are_not_attributes_are_dropped():
    sources = {
        'p/Base.java': 'package p; public class Base { protected int size; }',
        'p/Child.java': '''package p;
public class Child extends Base {
    private int total;
    public int f(int total) {
        int size = 2;
        Math.max(total, size);
        return helper + this.total;
    }
    public int g() {
        return size + total;
    }
}
''',
    }
    unresolved = build_project(sources, resolve=False).class_index()['p.Child']
    assert [a.accessed_attribute_name for a in unresolved.methods[0].accesses] == ['helper', 'total']
    child = resolve_references(build_project(sources, resolve=False)).class_index()['p.Child']
    f, g = child.methods
    assert accesses(f) == [('total', 'p.Child', True)]
    assert invocations(f) == [('max', 'Math', False)]
    assert accesses(g) == [('size', 'p.Base', True), ('total', 'p.Child', True)]


def test_resolution_is_idempotent(drawing_shapes):
    assert resolve_references(drawing_shapes) == drawing_shapes


def test_resolution_does_not_mutate_its_input(drawing_shapes_unresolved):
    resolve_references(drawing_shapes_unresolved)
    paint = drawing_shapes_unresolved.class_index()[f'{CORE_FRAME}.PaintJPanel']
    assert not paint.superclass.is_internal


def test_fixture_integrity(drawing_shapes):
    assert check_model(drawing_shapes) == []


def test_integrity_problems():
    entity = ClassEntity('I', AccessLevel.PUBLIC, is_interface=True, superclass=TypeRef('Missing', True))
    project = build_model([], [], 'broken')
    project.packages.append(Package('', [entity]))
    problems = check_model(project)
    assert any('has a superclass' in p for p in problems)
    assert any('missing class Missing' in p for p in problems)


def test_lookup(drawing_shapes):
    my_line = lookup(drawing_shapes, f'{CORE_ELEMENTS}.MyLine')
    assert isinstance(my_line, ClassEntity)
    assert my_line.name == 'MyLine'
    assert isinstance(lookup(drawing_shapes, CORE_FRAME), Package)
    assert lookup(drawing_shapes, 'NoSuch.Thing') is None


def test_lookup_members(drawing_shapes):
    attribute = lookup(drawing_shapes, f'{CORE_FRAME}.PaintJPanel#currentShape')
    assert isinstance(attribute, AttributeEntity)
    assert attribute.declared_type == 'MyShape'
    method = lookup(drawing_shapes, f'{CORE_ELEMENTS}.MyRectangle#MyRectangle(int, int, int, int, Color)')
    assert isinstance(method, MethodEntity)
    assert method.is_constructor
    assert lookup(drawing_shapes, f'{CORE_FRAME}.DrawingShapes#main(String[])').is_static
    assert lookup(drawing_shapes, f'{CORE_FRAME}.DrawingShapes#createControls()') is not None
    assert lookup(drawing_shapes, f'{CORE_FRAME}.DrawingShapes#createControls(int)') is None


@pytest.mark.parametrize('name', ['', '   ', 'a..b', 'A#', 'A#f(', '#x'])
def test_lookup_malformed(drawing_shapes, name):
    with pytest.raises(InputError):
        lookup(drawing_shapes, name)

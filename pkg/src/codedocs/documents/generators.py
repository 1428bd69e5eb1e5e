"""
The seven documentation graphs: package, class information / dependency / content and method
information / content / dependency.
"""
import re

from codedocs.code_model.entities import TypeRef
from codedocs.documents.graph import DocumentGraph, DocumentKind, EdgeKind, GraphEdge, GraphNode
from codedocs.metrics import class_metrics, project_metrics

ABSENT = '-'
DEFAULT_PACKAGE_LABEL = '(default package)'

PROJECT_STYLE = {'style': 'filled,bold', 'fillcolor': 'gray90'}
PACKAGE_STYLE = {'style': 'filled', 'fillcolor': 'gray'}
CLASS_STYLE = {'style': 'filled', 'fillcolor': 'lightblue'}
INTERFACE_STYLE = {'style': 'filled', 'fillcolor': 'white'}
EXTERNAL_STYLE = {'style': 'dotted'}
METHOD_STYLE = {'style': 'filled', 'fillcolor': 'lightblue'}
ATTRIBUTE_STYLE = {'style': 'filled', 'fillcolor': 'lightyellow'}

DOTTED_NAME = re.compile(r'\w+(\.\w+)*')


def gen_package_document(project):
    record = project_metrics(project)
    graph = DocumentGraph(DocumentKind.PACKAGE)
    graph.nodes.append(GraphNode('project',
                                 [('', project.name),
                                  ('LoC', record.loc),
                                  ('NoP', record.nop),
                                  ('NoC', record.noc),
                                  ('NoA', record.noa),
                                  ('NoM', record.nom)],
                                 dict(PROJECT_STYLE)))
    names = {p.qualified_name for p in project.packages}
    for package in project.packages:
        node_id = _package_id(package.qualified_name)
        graph.nodes.append(GraphNode(node_id,
                                     [('', package.qualified_name or DEFAULT_PACKAGE_LABEL),
                                      ('Classes', len(package.classes))],
                                     dict(PACKAGE_STYLE)))
        parent = _parent_package(package.qualified_name, names)
        source = parent is None and 'project' or _package_id(parent)
        graph.edges.append(GraphEdge(source, node_id, EdgeKind.CONTAINS))
    return graph


def _package_id(qualified_name):
    return f'package/{qualified_name}'


def _parent_package(qualified_name, names):
    parts = qualified_name.split('.')
    for i in range(len(parts) - 1, 0, -1):
        candidate = '.'.join(parts[:i])
        if candidate in names:
            return candidate
    return None


def gen_class_information_document(project):
    graph = DocumentGraph(DocumentKind.CLASS_INFO)
    for entity in project.iter_classes():
        counts = class_metrics(entity)
        graph.nodes.append(GraphNode(entity.qualified_name,
                                     [('ClassName', entity.name),
                                      ('Superclass', entity.superclass and entity.superclass.simple_name or ABSENT),
                                      ('IsInterface', _flag(entity.is_interface)),
                                      ('SuperInterfaces', _names(entity.super_interfaces)),
                                      ('NoA', counts.noa),
                                      ('NoM', counts.nom)],
                                     _class_style(entity),
                                     entity.package_name))
    return graph


def gen_class_dependency_document(project):
    graph = DocumentGraph(DocumentKind.CLASS_DEPENDENCY)
    external_ids = set()
    external_nodes = []

    def target_of(ref):
        if ref.is_internal:
            return ref.name
        node_id = f'external/{ref.name}'
        if node_id not in external_ids:
            external_ids.add(node_id)
            external_nodes.append(GraphNode(node_id, [('', ref.name)], dict(EXTERNAL_STYLE)))
        return node_id

    for entity in project.iter_classes():
        graph.nodes.append(GraphNode(entity.qualified_name, [('', entity.name)], _class_style(entity),
                                     entity.package_name))
        if entity.superclass is not None:
            graph.edges.append(GraphEdge(entity.qualified_name, target_of(entity.superclass), EdgeKind.INHERITS))
        # an interface extends its super interfaces, a class implements them
        interface_kind = entity.is_interface and EdgeKind.INHERITS or EdgeKind.IMPLEMENTS
        for interface in entity.super_interfaces:
            graph.edges.append(GraphEdge(entity.qualified_name, target_of(interface), interface_kind))
    graph.nodes.extend(external_nodes)
    return graph


def gen_class_content_document(project):
    graph = DocumentGraph(DocumentKind.CLASS_CONTENT)
    for entity in project.iter_classes():
        fields = [('', entity.name)]
        fields.extend((attribute.name, attribute.declared_type) for attribute in entity.attributes)
        fields.extend((method.signature, method.return_type or ABSENT) for method in entity.methods)
        graph.nodes.append(GraphNode(entity.qualified_name, fields, _class_style(entity), entity.package_name))
    return graph


def gen_method_information_document(entity):
    graph = DocumentGraph(DocumentKind.METHOD_INFO)
    for method in entity.methods:
        fields = [('', method.signature),
                  ('MethodName', method.name),
                  ('ReturnType', method.return_type or ABSENT),
                  ('IsStatic', _flag(method.is_static)),
                  ('NumberOfParameters', len(method.parameters))]
        fields.extend((f'Parameter {p.order}', f'{p.name} : {p.declared_type}') for p in method.parameters)
        graph.nodes.append(GraphNode(_method_id(entity, method), fields, dict(METHOD_STYLE), entity.qualified_name))
    return graph


def gen_method_content_document(entity):
    graph = DocumentGraph(DocumentKind.METHOD_CONTENT)
    for method in entity.methods:
        fields = [('', method.signature)]
        fields.extend(('local', f'{v.name} : {v.declared_type}') for v in method.local_variables)
        fields.extend(('access', f'{a.accessed_attribute_name} : {_declaring(a)}') for a in method.accesses)
        fields.extend(('invocation', f'{i.invoked_method_name} : {_declaring(i)}') for i in method.invocations)
        graph.nodes.append(GraphNode(_method_id(entity, method), fields, dict(METHOD_STYLE), entity.qualified_name))
    return graph


def _method_id(entity, method):
    return f'{entity.qualified_name}#{method.signature}'


def _declaring(relation):
    return relation.declaring_class and relation.declaring_class.simple_name or ABSENT


def gen_method_dependency_document(project, include_unresolved=False):
    """
    Methods are identified by class and name: invocations resolve by name only, so overloads share a
    node. Only endpoints of drawn edges become nodes. An unresolved receiver with no static type is keyed
    by its first-seen index (`unresolved/<n>`); its text shows in the label only.
    """
    graph = DocumentGraph(DocumentKind.METHOD_DEPENDENCY)
    nodes = {}
    edges = set()
    unresolved_keys = {}

    def owner_key(owner):
        if DOTTED_NAME.fullmatch(owner.name):
            return owner.name
        return unresolved_keys.setdefault(owner.name, f'unresolved/{len(unresolved_keys)}')

    def add_node(prefix, owner, name, style, resolved=True):
        node_id = f'{prefix}/{owner_key(owner)}#{name}'
        if node_id not in nodes:
            owner_label = DOTTED_NAME.fullmatch(owner.name) and owner.simple_name or owner.name
            node_style = owner.is_internal and resolved and style or EXTERNAL_STYLE
            nodes[node_id] = GraphNode(node_id, [('', f'{owner_label}.{name}')], dict(node_style), owner.name)
            graph.nodes.append(nodes[node_id])
        return node_id

    def add_edge(source, target, kind):
        edge = GraphEdge(source, target, kind)
        if edge not in edges:
            edges.add(edge)
            graph.edges.append(edge)

    def drawn(relation):
        return relation.declaring_class is not None and (relation.resolved or include_unresolved)

    for entity in project.iter_classes():
        owner = _self_ref(entity)
        for method in entity.methods:
            outgoing = [r for r in method.invocations + method.accesses if drawn(r)]
            if not outgoing:
                continue
            source = add_node('method', owner, method.name, METHOD_STYLE)
            for invocation in method.invocations:
                if drawn(invocation):
                    target = add_node('method', invocation.declaring_class, invocation.invoked_method_name,
                                      METHOD_STYLE, invocation.resolved)
                    add_edge(source, target, EdgeKind.INVOKES)
            for access in method.accesses:
                if drawn(access):
                    target = add_node('attribute', access.declaring_class, access.accessed_attribute_name,
                                      ATTRIBUTE_STYLE, access.resolved)
                    add_edge(source, target, EdgeKind.ACCESSES)
    return graph


def _self_ref(entity):
    return TypeRef(entity.qualified_name, True)


def _class_style(entity):
    return dict(entity.is_interface and INTERFACE_STYLE or CLASS_STYLE)


def _flag(value):
    return value and 'TRUE' or 'FALSE'


def _names(refs):
    return ', '.join(ref.simple_name for ref in refs) or ABSENT


PROJECT_GENERATORS = {
    DocumentKind.PACKAGE: gen_package_document,
    DocumentKind.CLASS_INFO: gen_class_information_document,
    DocumentKind.CLASS_DEPENDENCY: gen_class_dependency_document,
    DocumentKind.CLASS_CONTENT: gen_class_content_document,
}

CLASS_GENERATORS = {
    DocumentKind.METHOD_INFO: gen_method_information_document,
    DocumentKind.METHOD_CONTENT: gen_method_content_document,
}

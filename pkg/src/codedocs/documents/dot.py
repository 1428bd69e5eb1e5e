"""
DOT serialization of documentation graphs through graphviz.Digraph.
"""
import re

import graphviz

from codedocs.documents.graph import EdgeKind

RECORD_SPECIAL = re.compile(r'([{}|<>"\\])')

EDGE_STYLES = {
    EdgeKind.CONTAINS: {'arrowhead': 'none'},
    EdgeKind.INHERITS: {'arrowhead': 'empty'},
    EdgeKind.IMPLEMENTS: {'arrowhead': 'empty', 'style': 'dashed'},
    EdgeKind.INVOKES: {'style': 'solid'},
    EdgeKind.ACCESSES: {'style': 'dashed', 'arrowhead': 'vee'},
}


def serialize_dot(graph):
    """
    Nodes are written in model order, grouped nodes inside one cluster per group; edges follow, sorted by
    (source, target, kind).
    """
    graph.check()
    dot = graphviz.Digraph(name=graph.kind.value,
                           graph_attr={'rankdir': 'BT'},
                           node_attr={'fontname': 'Helvetica', 'fontsize': '10'})
    groups = {}
    for node in graph.nodes:
        groups.setdefault(node.group, []).append(node)
    for node in groups.pop(None, []):
        _add_node(dot, node)
    for i, (group, nodes) in enumerate(groups.items()):
        with dot.subgraph(name=f'cluster_{i}') as cluster:
            cluster.attr(label=_escape_label(group or '(default package)'), style='rounded')
            for node in nodes:
                _add_node(cluster, node)
    for edge in sorted(graph.edges, key=lambda e: (e.source, e.target, e.kind.value)):
        attributes = dict(EDGE_STYLES[edge.kind])
        if edge.label:
            attributes['label'] = _escape_label(edge.label)
        dot.edge(edge.source, edge.target, **attributes)
    return dot.source


def _add_node(dot, node):
    label = '{' + '|'.join(_escape_record(row) for row in node.get_rows()) + '}'
    dot.node(node.id, label=label, shape='record', **node.style)


def _escape_record(text):
    return RECORD_SPECIAL.sub(r'\\\1', text)


def _escape_label(text):
    return text.replace('\\', '\\\\').replace('"', '\\"')


"""
Abstract documentation graphs: record nodes joined by typed edges, independent of any output format.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional


class DocumentKind(Enum):
    PACKAGE = 'package'
    CLASS_INFO = 'class-info'
    CLASS_DEPENDENCY = 'class-dependency'
    CLASS_CONTENT = 'class-content'
    METHOD_INFO = 'method-info'
    METHOD_CONTENT = 'method-content'
    METHOD_DEPENDENCY = 'method-dependency'

    @property
    def is_per_class(self):
        return self in (DocumentKind.METHOD_INFO, DocumentKind.METHOD_CONTENT)


class EdgeKind(Enum):
    CONTAINS = 'contains'
    INHERITS = 'inherits'
    IMPLEMENTS = 'implements'
    INVOKES = 'invokes'
    ACCESSES = 'accesses'


@dataclass
class GraphNode:
    """
    A record node. Each field is a (name, value) row; a row with an empty name is a header and shows the
    value alone.
    """
    id: str
    fields: list
    style: dict = field(default_factory=dict)
    group: Optional[str] = None

    def get_rows(self):
        return [name and f'{name}: {value}' or str(value) for name, value in self.fields]


@dataclass(frozen=True)
class GraphEdge:
    source: str
    target: str
    kind: EdgeKind
    label: Optional[str] = None


@dataclass
class DocumentGraph:
    kind: DocumentKind
    nodes: list = field(default_factory=list)
    edges: list = field(default_factory=list)

    def find_node(self, node_id):
        return next((n for n in self.nodes if n.id == node_id), None)

    def get_node_ids(self):
        return [n.id for n in self.nodes]

    def check(self):
        """:raises ValueError: on a duplicate node id or an edge whose endpoint is not a node"""
        ids = set()
        for node in self.nodes:
            if node.id in ids:
                raise ValueError(f'duplicate node id {node.id} in {self.kind.value} document')
            ids.add(node.id)
        for edge in self.edges:
            for endpoint in (edge.source, edge.target):
                if endpoint not in ids:
                    raise ValueError(f'edge {edge.source} -> {edge.target} of {self.kind.value} document '
                                     f'refers to missing node {endpoint}')
        return self


def merge_graphs(kind, graphs):
    merged = DocumentGraph(kind)
    ids = set()
    edges = set()
    for graph in graphs:
        for node in graph.nodes:
            if node.id not in ids:
                ids.add(node.id)
                merged.nodes.append(node)
        for edge in graph.edges:
            if edge not in edges:
                edges.add(edge)
                merged.edges.append(edge)
    return merged

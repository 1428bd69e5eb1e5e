from codedocs.documents.dot import serialize_dot
from codedocs.documents.generators import gen_class_content_document, gen_class_dependency_document, \
    gen_class_information_document, gen_method_content_document, gen_method_dependency_document, \
    gen_method_information_document, gen_package_document
from codedocs.documents.graph import DocumentGraph, DocumentKind, EdgeKind, GraphEdge, GraphNode, merge_graphs
from codedocs.documents.renderer import DotRenderer, render_dot_file, render_dot_files
from codedocs.documents.writer import generate_documents, plan_documents

"""
Plans, generates and writes the requested documents under <output>/docs.
"""
import os
from dataclasses import dataclass
from typing import Optional

from codedocs.documents.dot import serialize_dot
from codedocs.documents.generators import CLASS_GENERATORS, PROJECT_GENERATORS, gen_method_dependency_document
from codedocs.documents.graph import DocumentKind, merge_graphs
from codedocs.parallel import parallel_map
from codedocs.storage_manager import DOCS_DIR_NAME
from log import log


@dataclass
class DocumentTask:
    kind: DocumentKind
    relative_path: str
    project: object
    class_names: Optional[list] = None # per-class kinds: one class, or every class when merged
    include_unresolved: bool = False


def plan_documents(project, kinds, include_unresolved=False, merge=False):
    tasks = []
    for kind in DocumentKind:
        if kind not in kinds:
            continue
        if not kind.is_per_class:
            tasks.append(DocumentTask(kind, f'{kind.value}.dot', project, include_unresolved=include_unresolved))
        elif merge:
            tasks.append(DocumentTask(kind, f'{kind.value}.dot', project,
                                      [c.qualified_name for c in project.iter_classes()]))
        else:
            for entity in project.iter_classes():
                tasks.append(DocumentTask(kind, f'{kind.value}/{entity.qualified_name}.dot', project,
                                          [entity.qualified_name]))
    return tasks


def build_graph(task):
    if task.kind == DocumentKind.METHOD_DEPENDENCY:
        return gen_method_dependency_document(task.project, task.include_unresolved)
    if task.kind in PROJECT_GENERATORS:
        return PROJECT_GENERATORS[task.kind](task.project)
    classes = task.project.class_index()
    generator = CLASS_GENERATORS[task.kind]
    return merge_graphs(task.kind, [generator(classes[name]) for name in task.class_names])


def build_document(task):
    return task.relative_path, serialize_dot(build_graph(task))


def generate_documents(project, kinds, output_dir, include_unresolved=False, merge=False, parallel=False,
                       num_workers=None):
    """Writes the documents and returns their paths in plan order."""
    kinds = {DocumentKind(kind) for kind in kinds}
    tasks = plan_documents(project, kinds, include_unresolved, merge)
    log.info(f'generating {len(tasks)} documents...')
    documents = parallel_map(build_document, tasks, parallel, num_workers)
    docs_dir = os.path.join(output_dir, DOCS_DIR_NAME)
    paths = []
    for relative_path, text in documents:
        path = os.path.join(docs_dir, *relative_path.split('/'))
        os.makedirs(os.path.dirname(path), exist_ok=True)
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text)
        paths.append(path)
    log.info(f'wrote {len(paths)} documents to {docs_dir}')
    return paths

"""
Builds the containment tree of a project from parsed files. Relations come out unresolved; see resolver.
"""
from codedocs.code_model.entities import AccessRelation, AttributeEntity, ClassEntity, InvocationRelation, \
    LocalVariableEntity, MethodEntity, Package, Parameter, Project, TypeRef
from codedocs.code_model.resolver import collect_external_types
from codedocs.errors import ModelError
from codedocs.parsing.syntax_tree import BodyItemKind, TypeKind
from log import log


def build_model(trees, files, project_name):
    packages = {}
    class_sources = {}
    for tree in trees:
        for package_name in _package_and_ancestors(tree.package_name):
            packages.setdefault(package_name, Package(package_name))
        for decl in tree.type_decls:
            package = packages.setdefault(tree.package_name, Package(tree.package_name))
            entity = _class_entity(decl, tree)
            qualified_name = entity.qualified_name
            if qualified_name in class_sources:
                raise ModelError(f'duplicate class {qualified_name} declared in {class_sources[qualified_name]} '
                                 f'and {tree.path}')
            class_sources[qualified_name] = tree.path
            package.classes.append(entity)

    for package in packages.values():
        package.classes.sort(key=lambda c: c.name)
    project = Project(project_name,
                      [packages[name] for name in sorted(packages)],
                      sum(file.line_count for file in files))
    _mark_qualified_supertypes(project)
    log.info(f'built model of {project_name}: {len(project.packages)} packages, {len(class_sources)} classes')
    return project


def _mark_qualified_supertypes(project):
    """written type names that already are qualified names of analyzed classes are internal before resolution"""
    class_names = set(project.class_index())

    def written(ref):
        return TypeRef(ref.name, ref.name in class_names)

    for entity in project.iter_classes():
        if entity.superclass is not None:
            entity.superclass = written(entity.superclass)
        entity.super_interfaces = [written(ref) for ref in entity.super_interfaces]
        for method in entity.methods:
            method.throws = [written(ref) for ref in method.throws]
    project.external_types = collect_external_types(project)


def _package_and_ancestors(package_name):
    if not package_name:
        return []
    parts = package_name.split('.')
    return ['.'.join(parts[:i]) for i in range(1, len(parts) + 1)]


def _class_entity(decl, tree):
    entity = ClassEntity(decl.name,
                         decl.access_level,
                         is_interface=decl.kind == TypeKind.INTERFACE,
                         is_abstract=decl.is_abstract,
                         is_final=decl.is_final,
                         package_name=tree.package_name,
                         source_path=tree.path,
                         imports=list(tree.imports))
    if decl.extends_name is not None:
        entity.superclass = TypeRef(decl.extends_name)
    entity.super_interfaces = [TypeRef(name) for name in decl.implements_names]

    for raw in decl.attributes:
        if entity.find_attribute(raw.name) is not None:
            raise ModelError(f'duplicate attribute {entity.qualified_name}#{raw.name} in {tree.path}')
        entity.attributes.append(AttributeEntity(raw.name, raw.declared_type, raw.access_level, raw.is_static))

    identities = set()
    for raw in decl.methods:
        method = _method_entity(raw)
        if method.identity in identities:
            raise ModelError(f'duplicate method {entity.qualified_name}#{method.signature} in {tree.path}')
        identities.add(method.identity)
        entity.methods.append(method)
    return entity


def _method_entity(raw):
    method = MethodEntity(raw.name,
                          raw.return_type,
                          raw.access_level,
                          is_static=raw.is_static,
                          is_constructor=raw.is_constructor)
    method.parameters = [Parameter(p.name, p.declared_type, order) for order, p in enumerate(raw.parameters)]
    method.throws = [TypeRef(name) for name in raw.throws]
    for item in raw.body:
        if item.kind == BodyItemKind.LOCAL_VARIABLE:
            method.local_variables.append(LocalVariableEntity(item.name, item.type_or_receiver))
        elif item.kind == BodyItemKind.ATTRIBUTE_ACCESS:
            method.accesses.append(AccessRelation(item.name, receiver=item.type_or_receiver))
        else:
            method.invocations.append(InvocationRelation(item.name, receiver=item.type_or_receiver))
    return method

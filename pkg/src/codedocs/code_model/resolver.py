"""
Name resolution: turns the written supertype names, receivers and member names into references to
internal classes where the analyzed code declares them, and into external references otherwise.

Resolution is a pure function of the written names (plus the file imports), so running it again on its
own output changes nothing.
"""
import copy
import re

from codedocs.code_model.entities import ExternalTypeRef, TypeRef
from log import log

DOTTED_NAME = re.compile(r'\w+(\.\w+)*')

OBJECT_TYPE = TypeRef('Object')


def resolve_references(project):
    resolved = copy.deepcopy(project)
    Resolver(resolved).resolve()
    return resolved


def collect_external_types(project):
    names = set()
    for entity in project.iter_classes():
        refs = list(entity.super_interfaces)
        if entity.superclass is not None:
            refs.append(entity.superclass)
        for method in entity.methods:
            refs.extend(method.throws)
        names.update(ref.name for ref in refs if not ref.is_internal)
    return [ExternalTypeRef(name) for name in sorted(names)]


class Resolver:

    def __init__(self, project):
        self.project = project
        self.classes = project.class_index()

    def resolve(self):
        # supertypes first: member lookup walks them
        for entity in self.project.iter_classes():
            if entity.superclass is not None:
                entity.superclass = self.resolve_type(entity.superclass.name, entity)
            entity.super_interfaces = [self.resolve_type(ref.name, entity) for ref in entity.super_interfaces]
            for method in entity.methods:
                method.throws = [self.resolve_type(ref.name, entity) for ref in method.throws]

        resolved_count = 0
        total_count = 0
        for entity in self.project.iter_classes():
            for method in entity.methods:
                method.accesses = [a for a in method.accesses if self.is_attribute_use(a, entity, method)]
                for access in method.accesses:
                    name = access.accessed_attribute_name
                    self._resolve_relation(access, entity, method, lambda c, n=name: c.find_attribute(n) is not None)
                    resolved_count += access.resolved
                for invocation in method.invocations:
                    name = invocation.invoked_method_name
                    self._resolve_relation(invocation, entity, method, lambda c, n=name: len(c.find_methods(n)) > 0)
                    resolved_count += invocation.resolved
                total_count += len(method.accesses) + len(method.invocations)

        self.project.external_types = collect_external_types(self.project)
        log.info(f'resolved {resolved_count} of {total_count} accesses and invocations to internal members')
        return self.project

    def resolve_type(self, name, context):
        if name in self.classes:
            return TypeRef(name, True)
        if '.' not in name:
            same_package = context.package_name and f'{context.package_name}.{name}' or name
            if same_package in self.classes:
                return TypeRef(same_package, True)
            for imported in context.imports:
                if not imported.endswith('.*') and imported.rsplit('.', 1)[-1] == name and imported in self.classes:
                    return TypeRef(imported, True)
            for imported in context.imports:
                if imported.endswith('.*') and f'{imported[:-2]}.{name}' in self.classes:
                    return TypeRef(f'{imported[:-2]}.{name}', True)
        return TypeRef(name, False)

    def supertypes(self, start):
        """start and its supertypes: the superclass chain first, then the super interfaces"""
        order = []
        seen = set()

        def visit_chain(ref):
            while ref is not None and ref.name not in seen:
                seen.add(ref.name)
                order.append(ref)
                entity = ref.is_internal and self.classes.get(ref.name) or None
                if entity is None:
                    break
                ref = entity.superclass

        visit_chain(start)
        i = 0
        while i < len(order):
            entity = order[i].is_internal and self.classes.get(order[i].name) or None
            i += 1
            if entity is not None:
                for interface in entity.super_interfaces:
                    visit_chain(interface)
        return order

    def find_attribute(self, type_ref, name):
        for ref in self.supertypes(type_ref):
            entity = ref.is_internal and self.classes.get(ref.name) or None
            if entity is not None and entity.find_attribute(name) is not None:
                return entity, entity.find_attribute(name)
        return None, None

    def expression_type(self, expression, entity, method):
        """Static type of a receiver expression, or None when it is not a plain (dotted) name."""
        if expression == '':
            return TypeRef(entity.qualified_name, True)
        if not DOTTED_NAME.fullmatch(expression):
            return None
        if expression in self.classes:
            return TypeRef(expression, True)
        head, *rest = expression.split('.')
        current = self._head_type(head, entity, method)
        for segment in rest:
            if current is None or not current.is_internal:
                return None
            owner, attribute = self.find_attribute(current, segment)
            if attribute is None:
                return None
            current = self.resolve_type(attribute.declared_type, owner)
        return current

    def _head_type(self, head, entity, method):
        if head == 'this':
            return TypeRef(entity.qualified_name, True)
        if head == 'super':
            return entity.superclass or OBJECT_TYPE
        declared_type = next((v.declared_type for v in method.local_variables if v.name == head), None)
        if declared_type is None:
            declared_type = next((p.declared_type for p in method.parameters if p.name == head), None)
        if declared_type is not None:
            return self.resolve_type(declared_type, entity)
        owner, attribute = self.find_attribute(TypeRef(entity.qualified_name, True), head)
        if attribute is not None:
            return self.resolve_type(attribute.declared_type, owner)
        # not a variable in scope, so a type name (static member reference)
        return self.resolve_type(head, entity)

    def is_attribute_use(self, access, entity, method):
        """a bare name (empty receiver) counts when no variable shadows it and the class chain declares it"""
        if access.receiver != '':
            return True
        name = access.accessed_attribute_name
        if any(v.name == name for v in method.local_variables) or any(p.name == name for p in method.parameters):
            return False
        return self.find_attribute(TypeRef(entity.qualified_name, True), name)[1] is not None

    def _resolve_relation(self, relation, entity, method, declares_member):
        if relation.receiver is None:
            return
        receiver_type = self.expression_type(relation.receiver, entity, method)
        if receiver_type is None:
            relation.declaring_class = TypeRef(relation.receiver)
            relation.resolved = False
            return
        for ref in self.supertypes(receiver_type):
            declaring_entity = ref.is_internal and self.classes.get(ref.name) or None
            if declaring_entity is not None and declares_member(declaring_entity):
                relation.declaring_class = ref
                relation.resolved = True
                return
        relation.declaring_class = receiver_type
        relation.resolved = False

"""
Canonical string links for model elements and resolved dependencies, the unit of precision/recall.
"""
from dataclasses import dataclass, field


@dataclass(frozen=True)
class LinkSet:
    links: frozenset = field(default_factory=frozenset)

    def __len__(self):
        return len(self.links)

    def __iter__(self):
        return iter(sorted(self.links))

    def __contains__(self, link):
        return link in self.links

    def __and__(self, other):
        return LinkSet(self.links & other.links)

    def __sub__(self, other):
        return LinkSet(self.links - other.links)

    def get_kinds(self):
        """link counts per kind prefix"""
        counts = {}
        for link in self.links:
            kind = link.split(':', 1)[0]
            counts[kind] = counts.get(kind, 0) + 1
        return counts


def method_link(entity, method):
    return f'{entity.qualified_name}#{method.signature}'


def extract_links(project):
    links = set()
    for package in project.packages:
        links.add(f'pkg:{package.qualified_name}')
        for entity in package.classes:
            links.update(_class_links(entity))
    return LinkSet(frozenset(links))


def _class_links(entity):
    class_name = entity.qualified_name
    yield f'class:{class_name}'
    if entity.superclass is not None and entity.superclass.is_internal:
        yield f'inherits:{class_name}->{entity.superclass.name}'
    for interface in entity.super_interfaces:
        if interface.is_internal:
            kind = entity.is_interface and 'inherits' or 'implements'
            yield f'{kind}:{class_name}->{interface.name}'
    for attribute in entity.attributes:
        yield f'attr:{class_name}#{attribute.name}'
    for method in entity.methods:
        caller = method_link(entity, method)
        yield f'method:{caller}'
        for local_variable in method.local_variables:
            yield f'local:{caller}#{local_variable.name}'
        for invocation in method.invocations:
            if invocation.resolved:
                yield f'invokes:{caller}->{invocation.declaring_class.name}#{invocation.invoked_method_name}'
        for access in method.accesses:
            if access.resolved:
                yield f'accesses:{caller}->{access.declaring_class.name}#{access.accessed_attribute_name}'

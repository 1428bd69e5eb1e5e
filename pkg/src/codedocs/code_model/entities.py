"""
The resolved source-code model: packages own classes, classes own attributes and methods, and methods
own their parameters, locals and outgoing access / invocation relations.
"""
from dataclasses import dataclass, field
from typing import Optional

from codedocs.parsing.syntax_tree import AccessLevel


@dataclass(frozen=True)
class TypeRef:
    """Internal references carry the qualified class name, external ones the name as written."""
    name: str
    is_internal: bool = False

    @property
    def simple_name(self):
        return self.is_internal and self.name.rsplit('.', 1)[-1] or self.name


@dataclass(frozen=True)
class ExternalTypeRef:
    name: str


@dataclass
class Parameter:
    name: str
    declared_type: str
    order: int


@dataclass
class LocalVariableEntity:
    name: str
    declared_type: str


@dataclass
class AccessRelation:
    accessed_attribute_name: str
    declaring_class: Optional[TypeRef] = None
    resolved: bool = False
    # receiver expression as written; None once the relation came back from XML
    receiver: Optional[str] = field(default=None, compare=False)


@dataclass
class InvocationRelation:
    invoked_method_name: str
    declaring_class: Optional[TypeRef] = None
    resolved: bool = False
    receiver: Optional[str] = field(default=None, compare=False)


@dataclass
class MethodEntity:
    name: str
    return_type: Optional[str]
    access_level: AccessLevel
    is_static: bool = False
    is_constructor: bool = False
    parameters: list = field(default_factory=list)
    local_variables: list = field(default_factory=list)
    throws: list = field(default_factory=list)
    accesses: list = field(default_factory=list)
    invocations: list = field(default_factory=list)

    @property
    def signature(self):
        return f'{self.name}({",".join(p.declared_type for p in self.parameters)})'

    @property
    def identity(self):
        return self.name, tuple(p.declared_type for p in self.parameters)


@dataclass
class AttributeEntity:
    name: str
    declared_type: str
    access_level: AccessLevel
    is_static: bool = False


@dataclass
class ClassEntity:
    name: str
    access_level: AccessLevel
    is_interface: bool = False
    superclass: Optional[TypeRef] = None
    super_interfaces: list = field(default_factory=list)
    attributes: list = field(default_factory=list)
    methods: list = field(default_factory=list)
    is_abstract: bool = False
    is_final: bool = False
    package_name: str = field(default='', compare=False)
    source_path: Optional[str] = field(default=None, compare=False)
    imports: list = field(default_factory=list, compare=False)

    @property
    def qualified_name(self):
        return self.package_name and f'{self.package_name}.{self.name}' or self.name

    def find_attribute(self, name):
        return next((a for a in self.attributes if a.name == name), None)

    def find_methods(self, name):
        return [m for m in self.methods if m.name == name]


@dataclass
class Package:
    qualified_name: str
    classes: list = field(default_factory=list)


@dataclass
class Project:
    name: str
    packages: list = field(default_factory=list)
    loc: int = 0
    external_types: list = field(default_factory=list)

    def iter_classes(self):
        for package in self.packages:
            yield from package.classes

    def class_index(self):
        return {c.qualified_name: c for c in self.iter_classes()}

    def find_package(self, qualified_name):
        return next((p for p in self.packages if p.qualified_name == qualified_name), None)

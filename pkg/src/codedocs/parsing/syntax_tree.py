"""
Raw, unresolved declarations harvested from one source file.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional


class AccessLevel(Enum):
    PUBLIC = 'public'
    PROTECTED = 'protected'
    PRIVATE = 'private'
    PACKAGE_PRIVATE = 'package-private'


class TypeKind(Enum):
    CLASS = 'class'
    INTERFACE = 'interface'


class BodyItemKind(Enum):
    LOCAL_VARIABLE = 'local-variable-declaration'
    METHOD_INVOCATION = 'method-invocation'
    ATTRIBUTE_ACCESS = 'attribute-access'


@dataclass
class BodyItem:
    kind: BodyItemKind
    name: str
    # declared type for locals, receiver expression text otherwise ('' when unqualified)
    type_or_receiver: str
    position: int

    def __post_init__(self):
        if self.kind == BodyItemKind.LOCAL_VARIABLE and not self.type_or_receiver:
            raise ValueError(f'local variable {self.name} has no declared type')


@dataclass
class RawParameter:
    name: str
    declared_type: str


@dataclass
class RawAttribute:
    name: str
    declared_type: str
    access_level: AccessLevel
    is_static: bool
    line: int = 0


@dataclass
class RawMethod:
    name: str
    return_type: Optional[str] # None for constructors
    access_level: AccessLevel
    is_static: bool
    is_constructor: bool
    parameters: list = field(default_factory=list)
    throws: list = field(default_factory=list)
    body: list = field(default_factory=list)
    line: int = 0


@dataclass
class RawTypeDecl:
    name: str
    kind: TypeKind
    access_level: AccessLevel
    extends_name: Optional[str] = None
    implements_names: list = field(default_factory=list)
    is_abstract: bool = False
    is_final: bool = False
    attributes: list = field(default_factory=list)
    methods: list = field(default_factory=list)
    line: int = 0

    @property
    def members(self):
        return self.attributes + self.methods


@dataclass
class ParseWarning:
    line: int
    message: str


@dataclass
class FileSyntaxTree:
    path: str
    package_name: str = ''
    imports: list = field(default_factory=list)
    type_decls: list = field(default_factory=list)
    warnings: list = field(default_factory=list)

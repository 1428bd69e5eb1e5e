"""
Reads and writes the XML exchange format for a project model.
"""
from dataclasses import dataclass

from lxml import etree

from codedocs.code_model.entities import AccessRelation, AttributeEntity, ClassEntity, InvocationRelation, \
    LocalVariableEntity, MethodEntity, Package, Parameter, Project, TypeRef
from codedocs.code_model.resolver import collect_external_types
from codedocs.errors import ConsistencyError, SchemaError
from codedocs.parsing.syntax_tree import AccessLevel
from log import log

# allowed attributes per element, in the order they are written
SCHEMA = {
    'Project': ('ProjectName', 'LinesOfCode'),
    'Packages': (),
    'Package': ('PackageName',),
    'Classes': (),
    'Class': ('ClassName', 'classAccessLevel', 'IsInterface', 'IsAbstract', 'IsFinal', 'SuperClassName'),
    'SuperInterfaces': ('InterfaceNames',),
    'Attributes': (),
    'Attribute': ('AttributeName', 'DeclaredType', 'AttributeAccessLevel', 'IsStatic'),
    'Methods': (),
    'Method': ('MethodName', 'MethodAccessLevel', 'ReturnType', 'IsStatic', 'IsConstructor'),
    'Parameters': ('NumberOfParameters',),
    'Parameter': ('Name', 'DeclaredType', 'Order'),
    'LocalVariables': (),
    'LocalVariable': ('Name', 'DeclaredType'),
    'AttributeAccesses': (),
    'AttributeAccess': ('Name', 'DeclaringClass', 'Resolved'),
    'MethodInvocations': (),
    'MethodInvocation': ('Name', 'DeclaringClass', 'Resolved'),
    'MethodExceptions': (),
    'MethodException': ('Name',),
}

OPTIONAL_ATTRIBUTES = {'SuperClassName', 'InterfaceNames', 'ReturnType'}

METHOD_SECTIONS = ('Parameters', 'LocalVariables', 'AttributeAccesses', 'MethodInvocations', 'MethodExceptions')


@dataclass
class XmlModelDocument:
    text: str


def serialize_model(project):
    root = _element('Project', ProjectName=project.name, LinesOfCode=str(project.loc))
    packages = etree.SubElement(root, 'Packages')
    for package in project.packages:
        package_element = _sub_element(packages, 'Package', PackageName=package.qualified_name)
        classes = etree.SubElement(package_element, 'Classes')
        for entity in package.classes:
            classes.append(_class_element(entity))
    text = etree.tostring(root, pretty_print=True, xml_declaration=True, encoding='UTF-8').decode('utf-8')
    return XmlModelDocument(text)


def write_model(project, path):
    with open(path, 'w', encoding='utf-8') as f:
        f.write(serialize_model(project).text)
    log.info(f'wrote model of {project.name} to {path}')


def read_model(path):
    with open(path, 'rb') as f:
        return parse_model(XmlModelDocument(f.read().decode('utf-8')))


def _class_element(entity):
    element = _element('Class',
                       ClassName=entity.name,
                       classAccessLevel=entity.access_level.value,
                       IsInterface=_bool(entity.is_interface),
                       IsAbstract=_bool(entity.is_abstract),
                       IsFinal=_bool(entity.is_final),
                       SuperClassName=entity.superclass and entity.superclass.name)
    _sub_element(element, 'SuperInterfaces',
                 InterfaceNames=','.join(ref.name for ref in entity.super_interfaces) or None)
    attributes = etree.SubElement(element, 'Attributes')
    for attribute in entity.attributes:
        _sub_element(attributes, 'Attribute',
                     AttributeName=attribute.name,
                     DeclaredType=attribute.declared_type,
                     AttributeAccessLevel=attribute.access_level.value,
                     IsStatic=_bool(attribute.is_static))
    methods = etree.SubElement(element, 'Methods')
    for method in entity.methods:
        methods.append(_method_element(method))
    return element


def _method_element(method):
    element = _element('Method',
                       MethodName=method.name,
                       MethodAccessLevel=method.access_level.value,
                       ReturnType=method.return_type,
                       IsStatic=_bool(method.is_static),
                       IsConstructor=_bool(method.is_constructor))
    parameters = _sub_element(element, 'Parameters', NumberOfParameters=str(len(method.parameters)))
    for parameter in method.parameters:
        _sub_element(parameters, 'Parameter',
                     Name=parameter.name, DeclaredType=parameter.declared_type, Order=str(parameter.order))
    local_variables = etree.SubElement(element, 'LocalVariables')
    for local_variable in method.local_variables:
        _sub_element(local_variables, 'LocalVariable', Name=local_variable.name,
                     DeclaredType=local_variable.declared_type)
    accesses = etree.SubElement(element, 'AttributeAccesses')
    for access in method.accesses:
        _sub_element(accesses, 'AttributeAccess',
                     Name=access.accessed_attribute_name,
                     DeclaringClass=access.declaring_class and access.declaring_class.name or '',
                     Resolved=_bool(access.resolved))
    invocations = etree.SubElement(element, 'MethodInvocations')
    for invocation in method.invocations:
        _sub_element(invocations, 'MethodInvocation',
                     Name=invocation.invoked_method_name,
                     DeclaringClass=invocation.declaring_class and invocation.declaring_class.name or '',
                     Resolved=_bool(invocation.resolved))
    exceptions = etree.SubElement(element, 'MethodExceptions')
    for thrown in method.throws:
        _sub_element(exceptions, 'MethodException', Name=thrown.name)
    return element


def _element(tag, **attributes):
    element = etree.Element(tag)
    _set_attributes(element, attributes)
    return element


def _sub_element(parent, tag, **attributes):
    element = etree.SubElement(parent, tag)
    _set_attributes(element, attributes)
    return element


def _set_attributes(element, attributes):
    for name in SCHEMA[element.tag]:
        value = attributes.get(name)
        if value is not None:
            element.set(name, value)


def _bool(value):
    return value and 'true' or 'false'


def parse_model(doc):
    """
    :raises SchemaError: on malformed XML or vocabulary outside the exchange format
    :raises ConsistencyError: when a count attribute disagrees with the number of children
    """
    try:
        root = etree.fromstring(doc.text.encode('utf-8'), parser=etree.XMLParser(remove_blank_text=True,
                                                                                 resolve_entities=False))
    except etree.XMLSyntaxError as e:
        raise SchemaError(f'malformed XML: {e.msg}', e.lineno) from e
    return ModelReader().read(root)


class ModelReader:

    def __init__(self):
        self.class_names = set()

    def read(self, root):
        self._check(root, 'Project')
        for element in root.iter():
            if isinstance(element.tag, str):
                self._check_vocabulary(element)
        self.class_names = {self._qualified(package, entity)
                            for package in root.iter('Package') for entity in package.iter('Class')}

        project = Project(self._required(root, 'ProjectName'), loc=self._int(root, 'LinesOfCode'))
        for packages in self._children(root, 'Packages'):
            for package_element in self._children(packages, 'Package'):
                package = Package(self._required(package_element, 'PackageName'))
                for classes in self._children(package_element, 'Classes'):
                    for class_element in self._children(classes, 'Class'):
                        package.classes.append(self._class(class_element, package.qualified_name))
                project.packages.append(package)
        project.external_types = collect_external_types(project)
        return project

    def _class(self, element, package_name):
        entity = ClassEntity(self._required(element, 'ClassName'),
                             self._access_level(element, 'classAccessLevel'),
                             is_interface=self._bool(element, 'IsInterface'),
                             is_abstract=self._bool(element, 'IsAbstract'),
                             is_final=self._bool(element, 'IsFinal'),
                             package_name=package_name)
        if element.get('SuperClassName') is not None:
            entity.superclass = self._type_ref(element.get('SuperClassName'))
        for interfaces in self._children(element, 'SuperInterfaces'):
            names = interfaces.get('InterfaceNames')
            if names:
                entity.super_interfaces = [self._type_ref(name) for name in names.split(',')]
        for attributes in self._children(element, 'Attributes'):
            for attribute in self._children(attributes, 'Attribute'):
                entity.attributes.append(AttributeEntity(self._required(attribute, 'AttributeName'),
                                                         self._required(attribute, 'DeclaredType'),
                                                         self._access_level(attribute, 'AttributeAccessLevel'),
                                                         self._bool(attribute, 'IsStatic')))
        for methods in self._children(element, 'Methods'):
            for method in self._children(methods, 'Method'):
                entity.methods.append(self._method(method))
        return entity

    def _method(self, element):
        is_constructor = self._bool(element, 'IsConstructor')
        method = MethodEntity(self._required(element, 'MethodName'),
                              element.get('ReturnType'),
                              self._access_level(element, 'MethodAccessLevel'),
                              is_static=self._bool(element, 'IsStatic'),
                              is_constructor=is_constructor)
        if not is_constructor and method.return_type is None:
            raise SchemaError(f'method {method.name} has no ReturnType', element.sourceline)
        for section in self._children(element, 'Parameters'):
            parameters = self._children(section, 'Parameter')
            declared_count = self._int(section, 'NumberOfParameters')
            if declared_count != len(parameters):
                raise ConsistencyError(f'NumberOfParameters="{declared_count}" but {len(parameters)} Parameter '
                                       f'elements in method {method.name}', section.sourceline)
            method.parameters = [Parameter(self._required(p, 'Name'), self._required(p, 'DeclaredType'),
                                           self._int(p, 'Order')) for p in parameters]
            orders = sorted(p.order for p in method.parameters)
            if orders != list(range(len(orders))):
                raise ConsistencyError(f'parameter orders {orders} of method {method.name} are not 0..n-1',
                                       section.sourceline)
            method.parameters.sort(key=lambda p: p.order)
        for section in self._children(element, 'LocalVariables'):
            method.local_variables = [LocalVariableEntity(self._required(v, 'Name'), self._required(v, 'DeclaredType'))
                                      for v in self._children(section, 'LocalVariable')]
        for section in self._children(element, 'AttributeAccesses'):
            method.accesses = [AccessRelation(self._required(a, 'Name'),
                                              self._declaring_class(a),
                                              self._bool(a, 'Resolved'))
                               for a in self._children(section, 'AttributeAccess')]
        for section in self._children(element, 'MethodInvocations'):
            method.invocations = [InvocationRelation(self._required(i, 'Name'),
                                                     self._declaring_class(i),
                                                     self._bool(i, 'Resolved'))
                                  for i in self._children(section, 'MethodInvocation')]
        for section in self._children(element, 'MethodExceptions'):
            method.throws = [self._type_ref(self._required(e, 'Name'))
                             for e in self._children(section, 'MethodException')]
        return method

    def _qualified(self, package_element, class_element):
        package_name = package_element.get('PackageName', '')
        class_name = class_element.get('ClassName', '')
        return package_name and f'{package_name}.{class_name}' or class_name

    def _type_ref(self, name):
        return TypeRef(name, name in self.class_names)

    def _declaring_class(self, element):
        name = self._required(element, 'DeclaringClass')
        return name and self._type_ref(name) or None

    def _children(self, element, tag):
        return [child for child in element if child.tag == tag]

    def _check(self, element, tag):
        if element.tag != tag:
            raise SchemaError(f'expected <{tag}> but found <{element.tag}>', element.sourceline)

    def _check_vocabulary(self, element):
        if element.tag not in SCHEMA:
            raise SchemaError(f'unknown element <{element.tag}>', element.sourceline)
        for name in element.attrib:
            if name not in SCHEMA[element.tag]:
                raise SchemaError(f'unknown attribute {name} on <{element.tag}>', element.sourceline)
        for name in SCHEMA[element.tag]:
            if name not in OPTIONAL_ATTRIBUTES and name not in element.attrib:
                raise SchemaError(f'missing attribute {name} on <{element.tag}>', element.sourceline)

    def _required(self, element, name):
        value = element.get(name)
        if value is None:
            raise SchemaError(f'missing attribute {name} on <{element.tag}>', element.sourceline)
        return value

    def _int(self, element, name):
        value = self._required(element, name)
        if not value.isdigit():
            raise SchemaError(f'{name}="{value}" is not a non-negative integer', element.sourceline)
        return int(value)

    def _bool(self, element, name):
        value = self._required(element, name)
        if value not in ('true', 'false'):
            raise SchemaError(f'{name}="{value}" is not true or false', element.sourceline)
        return value == 'true'

    def _access_level(self, element, name):
        value = self._required(element, name)
        try:
            return AccessLevel(value)
        except ValueError:
            raise SchemaError(f'{name}="{value}" is not an access level', element.sourceline) from None

"""
Finds a package, class, attribute (Class#attr) or method (Class#method(types)) by qualified name.
"""
import re

from codedocs.errors import InputError

QUALIFIED_NAME = re.compile(r'\w+(\.\w+)*')
MEMBER = re.compile(r'(?P<name>\w+)(\((?P<types>[^()]*)\))?')


def lookup(project, qualified_name):
    """
    :return: the Package, ClassEntity, AttributeEntity or MethodEntity denoted, or None if there is none
    :raises InputError: if the name is malformed
    """
    if qualified_name is None or not qualified_name.strip():
        raise InputError('empty qualified name')
    owner_name, separator, member = qualified_name.strip().partition('#')
    if not QUALIFIED_NAME.fullmatch(owner_name):
        raise InputError(f'malformed qualified name "{qualified_name}"')
    if separator and not MEMBER.fullmatch(member):
        raise InputError(f'malformed member name "{member}" in "{qualified_name}"')

    entity = project.class_index().get(owner_name)
    if not separator:
        return entity or project.find_package(owner_name)
    if entity is None:
        return None
    match = MEMBER.fullmatch(member)
    if match.group('types') is None:
        return entity.find_attribute(match.group('name'))
    types = tuple(t for t in ''.join(match.group('types').split()).split(',') if t)
    return next((m for m in entity.methods if m.identity == (match.group('name'), types)), None)

"""
Parses the supported Java subset into FileSyntaxTree values.

tree-sitter does the tokenizing and gives us a concrete syntax tree; the walk below decides what is
supported, harvests declarations and method-body items, and turns everything else into warnings.
"""
import re

import tree_sitter
import tree_sitter_java

from codedocs.errors import ParseFailure
from codedocs.parallel import parallel_map
from codedocs.parsing.syntax_tree import AccessLevel, BodyItem, BodyItemKind, FileSyntaxTree, ParseWarning, \
    RawAttribute, RawMethod, RawParameter, RawTypeDecl, TypeKind
from log import log

JAVA_LANGUAGE = tree_sitter.Language(tree_sitter_java.language())

COMMENT_TYPES = {'line_comment', 'block_comment'}

UNSUPPORTED_DECLARATIONS = {
    'class_declaration': 'nested class',
    'interface_declaration': 'nested interface',
    'enum_declaration': 'enum',
    'record_declaration': 'record',
    'annotation_type_declaration': 'annotation type',
    'module_declaration': 'module',
}

# labels, case constants and annotations hold names that are never variable reads
NON_EXPRESSION_TYPES = {'break_statement', 'continue_statement', 'switch_label', 'annotation', 'marker_annotation'}

_parser = None


def get_parser():
    # one parser per process; tree-sitter parsers cannot be pickled to Ray workers
    global _parser
    if _parser is None:
        _parser = tree_sitter.Parser(JAVA_LANGUAGE)
    return _parser


def parse_file(file):
    """
    Parses one source file.
    :raises ParseFailure: on a syntax error, carrying the file path and the line of the first error, or
        when the file could not be read
    """
    if file.read_error is not None:
        line, message = file.read_error
        raise ParseFailure(file.path, line, message)
    return JavaFileParser(file).parse()


def parse_file_outcome(file):
    """Same as parse_file, but returns the failure instead of raising it so a batch can carry on."""
    try:
        return parse_file(file)
    except ParseFailure as e:
        return e


def parse_files(files, parallel=False, num_workers=None):
    """
    Parses every file, isolating failures per file.
    :return: (trees, failures), both in the order of files
    """
    outcomes = parallel_map(parse_file_outcome, files, parallel, num_workers)
    trees = []
    failures = []
    for outcome in outcomes:
        if isinstance(outcome, ParseFailure):
            log.error(f'failed to parse {outcome}')
            failures.append(outcome)
        else:
            for warning in outcome.warnings:
                log.warning(f'{outcome.path}:{warning.line}: {warning.message}')
            trees.append(outcome)
    log.info(f'parsed {len(trees)} of {len(files)} files')
    return trees, failures


class JavaFileParser:

    def __init__(self, file):
        self.file = file
        self.source = file.text.encode('utf-8')
        self.tree = FileSyntaxTree(file.path)

    def parse(self):
        root = get_parser().parse(self.source).root_node
        if root.has_error:
            error_node = _first_error(root) or root
            if error_node.is_missing:
                raise self._failure(error_node, f'missing "{error_node.type}"')
            raise self._failure(error_node, 'syntax error')

        package_seen = False
        for node in _children(root):
            if node.type == 'package_declaration':
                if package_seen:
                    raise self._failure(node, 'more than one package declaration')
                package_seen = True
                self.tree.package_name = self._qualified_name(node)
            elif node.type == 'import_declaration':
                self.tree.imports.append(self._import(node))
            elif node.type in ('class_declaration', 'interface_declaration'):
                self.tree.type_decls.append(self._type_decl(node))
            elif node.type in UNSUPPORTED_DECLARATIONS:
                self._warn(node, f'{UNSUPPORTED_DECLARATIONS[node.type]} declarations are not supported; omitted')
            else:
                raise self._failure(node, f'unexpected top-level {node.type}')
        return self.tree

    def _type_decl(self, node):
        keywords = self._modifiers(node)
        name = self._text(node.child_by_field_name('name'))
        if node.child_by_field_name('type_parameters') is not None:
            self._warn(node, f'type parameters of {name} are not supported; ignored')
        access_level = _access_level(keywords, AccessLevel.PACKAGE_PRIVATE)
        if access_level in (AccessLevel.PRIVATE, AccessLevel.PROTECTED):
            raise self._failure(node, f'top-level type {name} cannot be {access_level.value}')
        is_interface = node.type == 'interface_declaration'
        decl = RawTypeDecl(name,
                           is_interface and TypeKind.INTERFACE or TypeKind.CLASS,
                           access_level,
                           is_abstract='abstract' in keywords,
                           is_final='final' in keywords,
                           line=_line(node))

        superclass = node.child_by_field_name('superclass')
        if superclass is not None:
            decl.extends_name = self._type_text(_children(superclass)[0])
        for child in _children(node):
            if child.type in ('super_interfaces', 'extends_interfaces'):
                for type_list in _children(child):
                    decl.implements_names.extend(self._type_text(t) for t in _children(type_list))

        for member in _children(node.child_by_field_name('body')):
            if member.type in ('field_declaration', 'constant_declaration'):
                decl.attributes.extend(self._attributes(member, is_interface))
            elif member.type in ('method_declaration', 'constructor_declaration'):
                decl.methods.append(self._method(member, name, is_interface))
            elif member.type in UNSUPPORTED_DECLARATIONS:
                self._warn(member, f'{UNSUPPORTED_DECLARATIONS[member.type]} declarations are not supported; omitted')
            else:
                self._warn(member, f'{member.type.replace("_", " ")} is not supported; skipped')
        return decl

    def _attributes(self, node, in_interface):
        keywords = self._modifiers(node)
        declared_type = self._type_text(node.child_by_field_name('type'))
        access_level = _access_level(keywords, in_interface and AccessLevel.PUBLIC or AccessLevel.PACKAGE_PRIVATE)
        is_static = in_interface or 'static' in keywords
        attributes = []
        for declarator in node.children_by_field_name('declarator'):
            attributes.append(RawAttribute(self._text(declarator.child_by_field_name('name')),
                                           declared_type + self._dimensions(declarator),
                                           access_level,
                                           is_static,
                                           _line(declarator)))
        return attributes

    def _method(self, node, class_name, in_interface):
        keywords = self._modifiers(node)
        name = self._text(node.child_by_field_name('name'))
        is_constructor = node.type == 'constructor_declaration'
        if is_constructor and name != class_name:
            raise self._failure(node, f'malformed declaration header: method {name} has no return type')
        if node.child_by_field_name('type_parameters') is not None:
            self._warn(node, f'type parameters of {name} are not supported; ignored')
        method = RawMethod(name,
                           None if is_constructor else self._type_text(node.child_by_field_name('type')),
                           _access_level(keywords, in_interface and AccessLevel.PUBLIC or AccessLevel.PACKAGE_PRIVATE),
                           'static' in keywords,
                           is_constructor,
                           line=_line(node))
        method.parameters = self._parameters(node.child_by_field_name('parameters'))
        for child in _children(node):
            if child.type == 'throws':
                method.throws.extend(self._type_text(t) for t in _children(child))
        body = node.child_by_field_name('body')
        if body is not None and not in_interface:
            method.body = BodyHarvester(self, [p.name for p in method.parameters]).harvest(body)
        return method

    def _parameters(self, node):
        parameters = []
        for child in _children(node):
            if child.type == 'formal_parameter':
                self._modifiers(child)
                parameters.append(RawParameter(self._text(child.child_by_field_name('name')),
                                               self._type_text(child.child_by_field_name('type'))
                                               + self._dimensions(child)))
            elif child.type == 'spread_parameter':
                self._warn(child, 'varargs parameters are not supported; kept as a single parameter')
                parts = [c for c in _children(child) if c.type != 'modifiers']
                declarator = next(c for c in parts if c.type == 'variable_declarator')
                parameters.append(RawParameter(self._text(declarator.child_by_field_name('name')),
                                               self._type_text(parts[0]) + '...'))
            elif child.type == 'receiver_parameter':
                self._warn(child, 'receiver parameters are not supported; skipped')
        return parameters

    def _modifiers(self, node):
        keywords = set()
        for child in node.children:
            if child.type != 'modifiers':
                continue
            for modifier in child.children:
                if modifier.type in ('marker_annotation', 'annotation'):
                    self._warn(modifier, 'annotations are not supported; ignored')
                elif modifier.type not in COMMENT_TYPES:
                    keywords.add(modifier.type)
        return keywords

    def _qualified_name(self, node):
        for child in _children(node):
            if child.type in ('identifier', 'scoped_identifier'):
                return self._text(child)
        return ''

    def _import(self, node):
        name = self._qualified_name(node)
        if any(child.type == 'asterisk' for child in node.children):
            name += '.*'
        return name

    def _type_text(self, node):
        text = ''.join(self._text(node).split())
        if '@' in text:
            self._warn(node, 'annotations are not supported; ignored')
            text = re.sub(r'@[\w.]+', '', text)
        if '<' in text:
            self._warn(node, f'generic type {text} is not supported; type arguments dropped')
            while '<' in text:
                stripped = re.sub(r'<[^<>]*>', '', text)
                if stripped == text:
                    break
                text = stripped
        return text

    def _dimensions(self, node):
        dimensions = node.child_by_field_name('dimensions')
        return dimensions is not None and ''.join(self._text(dimensions).split()) or ''

    def _text(self, node):
        return self.source[node.start_byte:node.end_byte].decode('utf-8')

    def _warn(self, node, message):
        self.tree.warnings.append(ParseWarning(_line(node), message))

    def _failure(self, node, message):
        return ParseFailure(self.file.path, _line(node), message)


class BodyHarvester:
    """
    Walks a method body in source order collecting locals, invocations and attribute accesses.

    A bare name that is not a parameter or a local declared so far is recorded as an attribute access
    with an empty receiver; resolution keeps it only when the enclosing class chain declares it.
    """

    def __init__(self, file_parser, parameter_names=()):
        self.file_parser = file_parser
        self.items = []
        self.scope = set(parameter_names)

    def harvest(self, body):
        self._walk(body)
        return self.items

    def _walk(self, node):
        node_type = node.type
        if node_type in COMMENT_TYPES:
            return
        if node_type == 'local_variable_declaration':
            self.file_parser._modifiers(node)
            declared_type = self.file_parser._type_text(node.child_by_field_name('type'))
            for declarator in node.children_by_field_name('declarator'):
                self._add(BodyItemKind.LOCAL_VARIABLE,
                          declarator.child_by_field_name('name'),
                          declared_type + self.file_parser._dimensions(declarator))
                value = declarator.child_by_field_name('value')
                if value is not None:
                    self._walk(value)
        elif node_type == 'enhanced_for_statement':
            declared_type = self.file_parser._type_text(node.child_by_field_name('type'))
            self._add(BodyItemKind.LOCAL_VARIABLE, node.child_by_field_name('name'), declared_type)
            self._walk(node.child_by_field_name('value'))
            self._walk(node.child_by_field_name('body'))
        elif node_type == 'method_invocation':
            receiver = node.child_by_field_name('object')
            self._add(BodyItemKind.METHOD_INVOCATION,
                      node.child_by_field_name('name'),
                      receiver is not None and self._receiver_text(receiver) or '')
            if receiver is not None:
                self._walk_receiver(receiver)
            self._walk(node.child_by_field_name('arguments'))
        elif node_type == 'field_access':
            receiver = node.child_by_field_name('object')
            field = node.child_by_field_name('field')
            if field.type != 'this':
                self._add(BodyItemKind.ATTRIBUTE_ACCESS, field, self._receiver_text(receiver))
            self._walk_receiver(receiver)
        elif node_type == 'identifier':
            self._bare_name(node)
        elif node_type == 'catch_formal_parameter':
            self.scope.add(self.file_parser._text(node.child_by_field_name('name')))
        elif node_type == 'resource' and node.child_by_field_name('name') is not None:
            self.scope.add(self.file_parser._text(node.child_by_field_name('name')))
            self._walk(node.child_by_field_name('value'))
        elif node_type == 'instanceof_expression':
            self._walk(node.child_by_field_name('left'))
            name = node.child_by_field_name('name')
            if name is not None:
                self.scope.add(self.file_parser._text(name))
        elif node_type in NON_EXPRESSION_TYPES:
            return
        elif node_type == 'labeled_statement':
            for child in node.named_children:
                if child.type != 'identifier':
                    self._walk(child)
        elif node_type in ('lambda_expression', 'method_reference'):
            self.file_parser._warn(node, f'{node_type.replace("_", " ")}s are not supported; skipped')
        elif node_type == 'object_creation_expression':
            if any(child.type == 'class_body' for child in node.children):
                self.file_parser._warn(node, 'anonymous classes are not supported; skipped')
                return
            arguments = node.child_by_field_name('arguments')
            if arguments is not None:
                self._walk(arguments)
        elif node_type in UNSUPPORTED_DECLARATIONS:
            kind = UNSUPPORTED_DECLARATIONS[node_type]
            self.file_parser._warn(node, f'local {kind} declarations are not supported; skipped')
        else:
            for child in node.named_children:
                self._walk(child)

    def _walk_receiver(self, node):
        if node.type == 'identifier':
            self._bare_name(node, is_receiver=True)
        else:
            self._walk(node)

    def _bare_name(self, node, is_receiver=False):
        name = self.file_parser._text(node)
        if name in self.scope:
            return
        if is_receiver and _looks_like_type_name(name):
            # Color.BLACK, Math.min(...)
            return
        self._add(BodyItemKind.ATTRIBUTE_ACCESS, node, '')

    def _receiver_text(self, node):
        return ''.join(self.file_parser._text(node).split())

    def _add(self, kind, name_node, type_or_receiver):
        name = self.file_parser._text(name_node)
        if kind == BodyItemKind.LOCAL_VARIABLE:
            self.scope.add(name)
        self.items.append(BodyItem(kind, name, type_or_receiver, _line(name_node)))


def _children(node):
    if node is None:
        return []
    return [child for child in node.named_children if child.type not in COMMENT_TYPES]


def _first_error(node):
    if node.type == 'ERROR' or node.is_missing:
        return node
    for child in node.children:
        if child.has_error or child.is_missing:
            found = _first_error(child)
            if found is not None:
                return found
    return None


def _line(node):
    return node.start_point[0] + 1


def _looks_like_type_name(name):
    return name[0].isupper() and not name.isupper()


def _access_level(keywords, default):
    for access_level in (AccessLevel.PUBLIC, AccessLevel.PROTECTED, AccessLevel.PRIVATE):
        if access_level.value in keywords:
            return access_level
    return default

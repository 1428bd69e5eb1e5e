"""
Exceptions raised by the codedocs pipeline.
"""


class CodeDocsError(Exception):
    pass


class InputError(CodeDocsError):
    """Bad input: missing or unreadable paths, malformed names."""


class ParseFailure(CodeDocsError):

    def __init__(self, path, line, message):
        super().__init__(f'{path}:{line}: {message}')
        self.path = path
        self.line = line
        self.message = message

    def __reduce__(self):
        return ParseFailure, (self.path, self.line, self.message)


class ModelError(CodeDocsError):
    pass


class SchemaError(CodeDocsError):

    def __init__(self, message, line=None):
        super().__init__(line is not None and f'line {line}: {message}' or message)
        self.line = line


class ConsistencyError(SchemaError):
    pass


class RenderError(CodeDocsError):
    pass

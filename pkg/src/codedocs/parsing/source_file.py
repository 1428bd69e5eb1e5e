"""
Source files on disk and the lines-of-code rule.
"""
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from codedocs.errors import InputError
from log import log


@dataclass
class SourceFile:
    path: str
    text: str
    # (line, message) when the file could not be read or decoded; parsing reports it as a failure
    read_error: Optional[tuple] = None
    line_count: int = field(init=False)

    def __post_init__(self):
        self.line_count = count_lines_of_code(self.text)


def count_loc(file):
    return file.line_count


def count_lines_of_code(text):
    """Counts physical lines that hold something other than whitespace or comment text."""
    count = 0
    in_block_comment = False
    for line in text.splitlines():
        has_code, in_block_comment = _scan_line(line, in_block_comment)
        if has_code:
            count += 1
    return count


def _scan_line(line, in_block_comment):
    has_code = False
    i = 0
    length = len(line)
    while i < length:
        if in_block_comment:
            end = line.find('*/', i)
            if end < 0:
                return has_code, True
            in_block_comment = False
            i = end + 2
            continue
        ch = line[i]
        if line.startswith('//', i):
            break
        if line.startswith('/*', i):
            in_block_comment = True
            i += 2
            continue
        if ch == '"' or ch == "'":
            has_code = True
            i = _skip_literal(line, i + 1, ch)
            continue
        if not ch.isspace():
            has_code = True
        i += 1
    return has_code, in_block_comment


def _skip_literal(line, i, quote):
    while i < len(line):
        if line[i] == '\\':
            i += 2
            continue
        if line[i] == quote:
            return i + 1
        i += 1
    return i


def read_source_file(path):
    """Reads a UTF-8 source file; an unreadable or undecodable file comes back empty with its read_error set."""
    path = str(path).replace('\\', '/')
    try:
        with open(path, 'rb') as f:
            data = f.read()
    except OSError as e:
        return SourceFile(path, '', (0, f'cannot read file: {e.strerror}'))
    try:
        return SourceFile(path, data.decode('utf-8'))
    except UnicodeDecodeError as e:
        line = data[:e.start].count(b'\n') + 1
        return SourceFile(path, '', (line, f'not valid UTF-8 (byte 0x{data[e.start]:02x} at offset {e.start})'))


def scan_directory(root, extension='.java'):
    """Returns every file under root with the given extension, ordered by full path."""
    root_path = Path(root)
    if not root_path.is_dir():
        raise InputError(f'not a readable directory: {root}')
    if not os.access(root_path, os.R_OK | os.X_OK):
        raise InputError(f'not a readable directory: {root}')

    def on_error(e):
        raise InputError(f'cannot read directory {e.filename}: {e.strerror}')

    paths = []
    for dir_path, dir_names, file_names in os.walk(root_path, onerror=on_error):
        for file_name in file_names:
            if file_name.endswith(extension):
                paths.append(str(Path(dir_path) / file_name).replace('\\', '/'))
    paths.sort()
    log.debug(f'found {len(paths)} {extension} files under {root}')
    return [read_source_file(path) for path in paths]

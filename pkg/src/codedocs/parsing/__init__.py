from codedocs.parsing.java_parser import parse_file, parse_file_outcome, parse_files
from codedocs.parsing.source_file import SourceFile, count_lines_of_code, count_loc, read_source_file, scan_directory
from codedocs.parsing.syntax_tree import AccessLevel, BodyItem, BodyItemKind, FileSyntaxTree, ParseWarning, \
    RawAttribute, RawMethod, RawParameter, RawTypeDecl, TypeKind

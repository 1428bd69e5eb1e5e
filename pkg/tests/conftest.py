import os

import pytest

from codedocs.code_model import build_model, resolve_references
from codedocs.parsing import parse_files, scan_directory

FIXTURES_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'fixtures').replace('\\', '/')
DRAWING_SHAPES_DIR = f'{FIXTURES_DIR}/drawing_shapes'
DRAWING_SHAPES_NAME = 'Drawing shapes software'

CORE_FRAME = 'Drawing.Shapes.coreFrame'
CORE_ELEMENTS = 'Drawing.Shapes.coreElements'


@pytest.fixture(scope='session')
def drawing_shapes_files():
    return scan_directory(DRAWING_SHAPES_DIR)


@pytest.fixture(scope='session')
def drawing_shapes_unresolved(drawing_shapes_files):
    trees, failures = parse_files(drawing_shapes_files)
    assert failures == []
    return build_model(trees, drawing_shapes_files, DRAWING_SHAPES_NAME)


@pytest.fixture(scope='session')
def drawing_shapes(drawing_shapes_unresolved):
    """the resolved fixture model; treat as read-only"""
    return resolve_references(drawing_shapes_unresolved)


@pytest.fixture(scope='session')
def drawing_shapes_classes(drawing_shapes):
    return drawing_shapes.class_index()

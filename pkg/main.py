#!/usr/bin/env python
"""
Runs the codedocs command line from a source checkout, e.g.

    python main.py analyze tests/fixtures/drawing_shapes -o out --name "Drawing shapes software"
"""
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), 'src'))

from codedocs.cli import main # noqa: E402

if __name__ == '__main__':
    sys.exit(main())

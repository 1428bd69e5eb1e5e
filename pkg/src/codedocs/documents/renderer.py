import os
import subprocess

from codedocs.errors import RenderError
from log import log
from util.platform import find_executable


class DotRenderer:
    """Runs an external DOT-compatible renderer to turn .dot files into sibling .svg files."""

    def __init__(self, renderer_path):
        self.renderer_path = renderer_path

    def get_executable(self):
        executable = self.renderer_path and find_executable(self.renderer_path)
        if not executable:
            raise RenderError(f'renderer {self.renderer_path} not found')
        return executable

    def render(self, dot_path):
        svg_path = os.path.splitext(dot_path)[0] + '.svg'
        render_cmd = [self.get_executable(), '-Tsvg', dot_path, '-o', svg_path]
        log.debug(f'rendering {dot_path}: {" ".join(render_cmd)}')
        try:
            subprocess.check_output(render_cmd, stderr=subprocess.STDOUT)
        except subprocess.CalledProcessError as e:
            output = e.output.decode('utf-8', errors='replace').strip()
            raise RenderError(f'error rendering {dot_path}: {output or e}') from e
        except OSError as e:
            raise RenderError(f'error rendering {dot_path}: {e}') from e
        return svg_path


def render_dot_file(dot_path, renderer_path):
    return DotRenderer(renderer_path).render(dot_path)


def render_dot_files(dot_paths, renderer_path):
    """Renders every file; returns the svg paths and the failures as (dot_path, RenderError) pairs."""
    renderer = DotRenderer(renderer_path)
    svg_paths = []
    failures = []
    for dot_path in dot_paths:
        try:
            svg_paths.append(renderer.render(dot_path))
        except RenderError as e:
            log.warning(str(e))
            failures.append((dot_path, e))
    log.info(f'rendered {len(svg_paths)} of {len(dot_paths)} documents')
    return svg_paths, failures

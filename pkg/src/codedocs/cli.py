"""
Command line for the analysis pipeline: scan, parse, build and resolve the model, then write the XML
model, the metrics and the documentation graphs, optionally rendering them; plus precision/recall
evaluation of one model against another.
"""
import argparse
import logging
import os
import sys
from dataclasses import dataclass, field
from typing import Optional

from codedocs import __version__
from codedocs.code_model import build_model, resolve_references
from codedocs.documents import generate_documents, render_dot_files
from codedocs.errors import CodeDocsError, InputError, ParseFailure, SchemaError
from codedocs.evaluation import evaluate_models
from codedocs.exchange import read_model, write_model
from codedocs.metrics import format_metrics_table, project_metrics, write_metrics_record
from codedocs.parallel import shutdown_ray
from codedocs.parsing import parse_files, scan_directory
from codedocs.storage_manager import StorageManager
from config import ALL_DOCUMENT_KINDS, RENDERER_ENV_VAR, config
from log import log, set_console_level
from util.platform import default_renderer_name

EXIT_SUCCESS = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_THRESHOLD = 3


class UsageError(CodeDocsError):
    pass


class ArgumentParser(argparse.ArgumentParser):

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f'{self.prog}: error: {message}\n')


@dataclass
class RunConfig:
    input_root: Optional[str]
    output_dir: Optional[str]
    project_name: Optional[str] = None
    source_extension: str = '.java'
    documents: list = field(default_factory=lambda: list(ALL_DOCUMENT_KINDS))
    render: bool = False
    renderer_path: Optional[str] = None
    include_unresolved: bool = False
    merge_method_documents: bool = False
    strict: bool = False
    parallel: bool = False
    num_workers: Optional[int] = None

    def check(self, needs_documents=False):
        if needs_documents and not self.documents:
            raise UsageError('no documents requested')
        unknown = [kind for kind in self.documents if kind not in ALL_DOCUMENT_KINDS]
        if unknown:
            raise UsageError(f'unknown document kinds {unknown}; choose from {ALL_DOCUMENT_KINDS}')
        if self.render and not self.renderer_path:
            raise UsageError('--render needs a renderer path')
        if self.num_workers is not None and self.num_workers < 1:
            raise UsageError('--workers must be at least 1')
        if self.output_dir and self.input_root and os.path.isdir(self.input_root) \
                and StorageManager(self.output_dir).is_inside(self.input_root):
            raise UsageError(f'output directory {self.output_dir} must not lie inside input {self.input_root}')
        return self

    def get_project_name(self):
        if self.project_name:
            return self.project_name
        return os.path.basename(os.path.normpath(self.input_root))


def load_project(run_config):
    """
    Scans, parses, builds and resolves the project under input_root.
    :return: (project, failures)
    """
    files = scan_directory(run_config.input_root, run_config.source_extension)
    if not files:
        raise InputError(f'no source files with extension {run_config.source_extension} '
                         f'under {run_config.input_root}')
    trees, failures = parse_files(files, run_config.parallel, run_config.num_workers)
    if failures and run_config.strict:
        raise failures[0]
    parsed_paths = {tree.path for tree in trees}
    analyzed_files = [f for f in files if f.path in parsed_paths]
    project = resolve_references(build_model(trees, analyzed_files, run_config.get_project_name()))
    return project, failures


def load_project_or_model(run_config):
    if os.path.isfile(run_config.input_root) and run_config.input_root.endswith('.xml'):
        log.info(f'reading model from {run_config.input_root}')
        return read_model(run_config.input_root), []
    if not os.path.isdir(run_config.input_root):
        raise InputError(f'{run_config.input_root} is neither a source directory nor a model .xml file')
    return load_project(run_config)


def run_analyze(run_config):
    run_config.check(needs_documents=False)
    storage_manager = StorageManager(run_config.output_dir)
    project, failures = load_project(run_config)
    storage_manager.prepare()
    storage_manager.clean_docs()

    write_model(project, storage_manager.get_model_path())
    write_metrics(project, storage_manager)
    dot_paths = generate_documents(project,
                                   run_config.documents,
                                   storage_manager.get_output_dir(),
                                   run_config.include_unresolved,
                                   run_config.merge_method_documents,
                                   run_config.parallel,
                                   run_config.num_workers)
    exit_code = EXIT_SUCCESS
    if run_config.render:
        exit_code = render(dot_paths, run_config)
    if failures:
        log.warning(f'{len(failures)} files failed to parse and were skipped')
    log.info(f'finished analyzing {project.name}')
    return exit_code


def write_metrics(project, storage_manager):
    record = project_metrics(project)
    storage_manager.write_text(storage_manager.get_metrics_table_path(), format_metrics_table(record))
    write_metrics_record(record, storage_manager.get_metrics_record_path())
    log.info(f'metrics: {", ".join(format_metrics_table(record).splitlines())}')
    return record


def render(dot_paths, run_config):
    _, failures = render_dot_files(dot_paths, run_config.renderer_path)
    if failures and run_config.strict:
        log.error(f'{len(failures)} documents failed to render')
        return EXIT_INPUT
    return EXIT_SUCCESS


def run_metrics(run_config):
    run_config.check()
    project, _ = load_project_or_model(run_config)
    record = project_metrics(project)
    sys.stdout.write(format_metrics_table(record))
    if run_config.output_dir:
        storage_manager = StorageManager(run_config.output_dir)
        storage_manager.prepare()
        write_metrics(project, storage_manager)
    return EXIT_SUCCESS


def run_document(run_config):
    run_config.check(needs_documents=True)
    storage_manager = StorageManager(run_config.output_dir)
    project, _ = load_project_or_model(run_config)
    storage_manager.prepare()
    storage_manager.clean_docs()
    dot_paths = generate_documents(project,
                                   run_config.documents,
                                   storage_manager.get_output_dir(),
                                   run_config.include_unresolved,
                                   run_config.merge_method_documents,
                                   run_config.parallel,
                                   run_config.num_workers)
    if run_config.render:
        return render(dot_paths, run_config)
    return EXIT_SUCCESS


def run_evaluate(run_config, retrieved_path, reference_path, fail_under=None):
    for path in (retrieved_path, reference_path):
        if not os.path.isfile(path):
            raise InputError(f'model file not found: {path}')
    report = evaluate_models(retrieved_path, reference_path)
    sys.stdout.write(report.format())
    if fail_under is not None and not report.meets(*fail_under):
        log.error(f'precision {float(report.precision):.4f} / recall {float(report.recall):.4f} '
                  f'below thresholds {fail_under[0]} / {fail_under[1]}')
        return EXIT_THRESHOLD
    return EXIT_SUCCESS


def run_render(run_config):
    run_config.check()
    if not os.path.isdir(run_config.input_root):
        raise InputError(f'not a directory: {run_config.input_root}')
    dot_paths = StorageManager(run_config.input_root).list_dot_files(run_config.input_root)
    if not dot_paths:
        raise InputError(f'no .dot files under {run_config.input_root}')
    _, failures = render_dot_files(dot_paths, run_config.renderer_path)
    return failures and EXIT_INPUT or EXIT_SUCCESS


def create_parser():
    parser = ArgumentParser(prog='codedocs', description='Static documentation of object-oriented source code.')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    parser.add_argument('--config', help='YAML file overriding config/codedocs.yaml')
    parser.add_argument('-v', '--verbose', action='store_true', help='log debug detail to standard error')
    parser.add_argument('-q', '--quiet', action='store_true', help='log only warnings and errors')
    subparsers = parser.add_subparsers(dest='command', required=True)

    analyze = subparsers.add_parser('analyze', help='write model.xml, metrics and documents for a source tree')
    analyze.add_argument('input_root', help='root directory of the source files')
    analyze.add_argument('-o', '--output', required=True, help='output directory')
    _add_source_options(analyze)
    _add_document_options(analyze)
    analyze.add_argument('--strict', action='store_true', default=None,
                         help='fail when a file fails to parse or a document fails to render')

    metrics = subparsers.add_parser('metrics', help='print the size metrics of a source tree or model.xml')
    metrics.add_argument('input_root', help='source directory or model .xml file')
    metrics.add_argument('-o', '--output', help='also write metrics.txt and metrics.yaml here')
    _add_source_options(metrics)

    document = subparsers.add_parser('document', help='write documents for a source tree or model.xml')
    document.add_argument('input_root', help='source directory or model .xml file')
    document.add_argument('-o', '--output', required=True, help='output directory')
    _add_source_options(document)
    _add_document_options(document)
    document.add_argument('--strict', action='store_true', default=None, help='fail when a document fails to render')

    evaluate = subparsers.add_parser('evaluate', help='precision and recall of a model against a reference model')
    evaluate.add_argument('--retrieved', required=True, help='model .xml produced by the tool')
    evaluate.add_argument('--reference', required=True, help='gold-standard model .xml')
    evaluate.add_argument('--fail-under', nargs=2, type=_ratio, metavar=('PRECISION', 'RECALL'),
                          help='exit 3 when precision or recall is below these values')

    render_parser = subparsers.add_parser('render', help='render every .dot file under a directory to .svg')
    render_parser.add_argument('input_root', help='directory holding .dot files')
    render_parser.add_argument('--renderer', help='DOT renderer executable')
    return parser


def _add_source_options(parser):
    parser.add_argument('--name', help='project name (defaults to the input directory name)')
    parser.add_argument('--ext', help='source file extension (default .java)')
    parser.add_argument('--parallel', action='store_true', default=None, help='parse files as Ray tasks')
    parser.add_argument('--workers', type=int, help='number of Ray workers')


def _add_document_options(parser):
    parser.add_argument('--documents', type=_document_list,
                        help=f'comma-separated document kinds out of {",".join(ALL_DOCUMENT_KINDS)}')
    parser.add_argument('--render', action='store_true', default=None, help='render .svg files with the renderer')
    parser.add_argument('--renderer', help=f'DOT renderer executable (default ${RENDERER_ENV_VAR} or dot)')
    parser.add_argument('--include-unresolved', action='store_true', default=None,
                        help='draw unresolved relations in the method dependency document')
    parser.add_argument('--merge', action='store_true', default=None,
                        help='one method-info and method-content document for all classes')


def _document_list(value):
    kinds = [kind.strip() for kind in value.split(',') if kind.strip()]
    unknown = [kind for kind in kinds if kind not in ALL_DOCUMENT_KINDS]
    if unknown:
        raise argparse.ArgumentTypeError(f'unknown document kinds {unknown}')
    return kinds


def _ratio(value):
    try:
        ratio = float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f'{value} is not a number') from None
    if not 0 <= ratio <= 1:
        raise argparse.ArgumentTypeError(f'{value} is not in [0, 1]')
    return ratio


def create_run_config(opt):
    """CLI flags win over the config file values."""

    def pick(name, value):
        return value if value is not None else getattr(config, name)

    return RunConfig(input_root=getattr(opt, 'input_root', None),
                     output_dir=getattr(opt, 'output', None),
                     project_name=pick('project_name', getattr(opt, 'name', None)),
                     source_extension=pick('source_extension', getattr(opt, 'ext', None)),
                     documents=list(pick('documents', getattr(opt, 'documents', None))),
                     render=bool(pick('render', getattr(opt, 'render', None))),
                     renderer_path=getattr(opt, 'renderer', None) or config.renderer_path or default_renderer_name(),
                     include_unresolved=bool(pick('include_unresolved', getattr(opt, 'include_unresolved', None))),
                     merge_method_documents=bool(pick('merge_method_documents', getattr(opt, 'merge', None))),
                     strict=bool(pick('strict', getattr(opt, 'strict', None))),
                     parallel=bool(pick('parallel', getattr(opt, 'parallel', None))),
                     num_workers=pick('num_workers', getattr(opt, 'workers', None)))


def main(argv=None):
    parser = create_parser()
    opt = parser.parse_args(argv)
    if opt.verbose:
        set_console_level(logging.DEBUG)
    elif opt.quiet:
        set_console_level(logging.WARNING)

    if opt.config is not None:
        try:
            config.load_overrides(opt.config)
        except (FileNotFoundError, ValueError) as e:
            log.error(str(e))
            return EXIT_USAGE

    try:
        run_config = create_run_config(opt)
        log.debug(f'running {opt.command} with {run_config}')
        if opt.command == 'analyze':
            return run_analyze(run_config)
        if opt.command == 'metrics':
            return run_metrics(run_config)
        if opt.command == 'document':
            return run_document(run_config)
        if opt.command == 'evaluate':
            return run_evaluate(run_config, opt.retrieved, opt.reference, opt.fail_under)
        return run_render(run_config)
    except UsageError as e:
        log.error(str(e))
        return EXIT_USAGE
    except SchemaError as e:
        log.error(f'invalid model file: {e}')
        return EXIT_INPUT
    except ParseFailure as e:
        log.error(f'failed to parse {e}')
        return EXIT_INPUT
    except (CodeDocsError, OSError) as e:
        log.error(str(e))
        return EXIT_INPUT
    finally:
        shutdown_ray()


if __name__ == '__main__':
    sys.exit(main())

from codedocs.code_model import build_model, lookup, resolve_references
from codedocs.evaluation import extract_links, precision_recall
from codedocs.exchange import parse_model, serialize_model
from codedocs.metrics import class_metrics, method_metrics, project_metrics
from codedocs.parsing import count_loc, parse_file, scan_directory

__version__ = '0.1.0'

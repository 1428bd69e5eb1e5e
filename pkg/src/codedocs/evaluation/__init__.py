from codedocs.evaluation.links import LinkSet, extract_links
from codedocs.evaluation.report import EvalReport, evaluate_models, precision_recall

"""
Precision and recall of retrieved links against a reference, in exact rational arithmetic.
"""
from dataclasses import dataclass
from fractions import Fraction

from codedocs.evaluation.links import LinkSet, extract_links
from codedocs.exchange import read_model


@dataclass
class EvalReport:
    precision: Fraction
    recall: Fraction
    true_positives: int
    retrieved_count: int
    relevant_count: int
    missing: LinkSet
    spurious: LinkSet

    def meets(self, min_precision, min_recall):
        return self.precision >= Fraction(str(min_precision)) and self.recall >= Fraction(str(min_recall))

    def format(self):
        lines = [f'retrieved {self.retrieved_count}',
                 f'relevant {self.relevant_count}',
                 f'correct {self.true_positives}',
                 f'precision {float(self.precision):.4f}',
                 f'recall {float(self.recall):.4f}',
                 f'missing {len(self.missing)}']
        lines.extend(f'  {link}' for link in self.missing)
        lines.append(f'spurious {len(self.spurious)}')
        lines.extend(f'  {link}' for link in self.spurious)
        return '\n'.join(lines) + '\n'


def precision_recall(retrieved, reference):
    """
    Empty sets score 1: an empty retrieved set has precision 1 and an empty reference has recall 1, so
    precision_recall(a, b).precision always equals precision_recall(b, a).recall.
    """
    correct = retrieved & reference
    true_positives = len(correct)
    precision = Fraction(true_positives, len(retrieved)) if len(retrieved) else Fraction(1)
    recall = Fraction(true_positives, len(reference)) if len(reference) else Fraction(1)
    return EvalReport(precision,
                      recall,
                      true_positives,
                      len(retrieved),
                      len(reference),
                      reference - retrieved,
                      retrieved - reference)


def evaluate_models(retrieved_xml_path, reference_xml_path):
    return precision_recall(extract_links(read_model(retrieved_xml_path)),
                            extract_links(read_model(reference_xml_path)))

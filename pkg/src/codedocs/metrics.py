"""
Size metrics over the code model: LoC, NoP, NoC, NoA and NoM.
"""
from dataclasses import asdict, dataclass
from typing import NamedTuple

import yaml

from log import log

# packages that directly contain at least one class
LEAF_PACKAGE_RULE = 'class-bearing'


@dataclass
class MetricsRecord:
    loc: int = 0
    nop: int = 0
    noc: int = 0
    noa: int = 0
    nom: int = 0
    nop_declared: int = 0


class ClassMetrics(NamedTuple):
    noa: int
    nom: int


class MethodMetrics(NamedTuple):
    param_count: int
    local_count: int
    access_count: int
    invocation_count: int


def project_metrics(project):
    record = MetricsRecord(loc=project.loc, nop_declared=len(project.packages))
    for package in project.packages:
        if package.classes:
            record.nop += 1
        for entity in package.classes:
            counts = class_metrics(entity)
            record.noc += 1
            record.noa += counts.noa
            record.nom += counts.nom
    return record


def class_metrics(entity):
    """Declared members only; constructors count as methods."""
    return ClassMetrics(len(entity.attributes), len(entity.methods))


def method_metrics(method):
    return MethodMetrics(len(method.parameters),
                         len(method.local_variables),
                         len(method.accesses),
                         len(method.invocations))


def format_metrics_table(record):
    return '\n'.join([f'LoC {record.loc}',
                      f'NoP {record.nop}',
                      f'NoC {record.noc}',
                      f'NoA {record.noa}',
                      f'NoM {record.nom}']) + '\n'


def write_metrics_record(record, path):
    data = asdict(record)
    data['nop_rule'] = LEAF_PACKAGE_RULE
    with open(path, 'w', encoding='utf-8') as f:
        yaml.safe_dump(data, f, sort_keys=False)
    log.info(f'wrote metrics record to {path}')

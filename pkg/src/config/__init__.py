import os
import pathlib

import yaml

BASE_DIR = str(pathlib.Path(__file__).parents[2]).replace('\\', '/')
CONFIG_DIR = BASE_DIR + '/config'
SRC_DIR = BASE_DIR + '/src'

RENDERER_ENV_VAR = 'CODEDOCS_RENDERER'

ALL_DOCUMENT_KINDS = ['package', 'class-info', 'class-dependency', 'class-content',
                      'method-info', 'method-content', 'method-dependency']


class Config:

    def __init__(self, config_file_path=None):
        super().__init__()

        self.source_extension = '.java'
        self.project_name = None # defaults to the input directory name
        self.documents = list(ALL_DOCUMENT_KINDS)
        self.render = False
        self.renderer_path = os.environ.get(RENDERER_ENV_VAR)
        self.include_unresolved = False
        self.merge_method_documents = False
        self.strict = False

        self.parallel = False # run per-file parsing and document generation as Ray tasks
        self.num_workers = None

        if config_file_path is None:
            config_file_path = f'{CONFIG_DIR}/codedocs.yaml'
        if os.path.exists(config_file_path):
            self.load_overrides(config_file_path)

    def load_overrides(self, config_file_path):
        overrides = load_config_file(config_file_path)
        for key, value in overrides.items():
            if not hasattr(self, key):
                raise ValueError(f'unknown config key "{key}" in {config_file_path}')
            if key == 'renderer_path' and value is None:
                continue # keep the environment default
            setattr(self, key, value)
        return self


def load_config_file(config_file_path):
    if not os.path.exists(config_file_path):
        raise FileNotFoundError(f'config file not found at {config_file_path}')
    with open(config_file_path, 'r') as f:
        values = yaml.safe_load(f)
    return values or {}


config = Config()

"""
Manager for the directories and files of one output directory.
"""
import os
import shutil

from log import log

MODEL_FILENAME = 'model.xml'
METRICS_TABLE_FILENAME = 'metrics.txt'
METRICS_RECORD_FILENAME = 'metrics.yaml'
DOCS_DIR_NAME = 'docs'


class StorageManager:

    def __init__(self, output_dir):
        self.output_dir = str(output_dir).replace('\\', '/')

    def get_output_dir(self):
        return self.output_dir

    def get_model_path(self):
        return f'{self.output_dir}/{MODEL_FILENAME}'

    def get_metrics_table_path(self):
        return f'{self.output_dir}/{METRICS_TABLE_FILENAME}'

    def get_metrics_record_path(self):
        return f'{self.output_dir}/{METRICS_RECORD_FILENAME}'

    def get_docs_dir(self):
        return f'{self.output_dir}/{DOCS_DIR_NAME}'

    def is_inside(self, root):
        """true when the output directory is root itself or lies below it"""
        root_path = os.path.realpath(root)
        output_path = os.path.realpath(self.output_dir)
        return os.path.commonpath([root_path, output_path]) == root_path

    def prepare(self):
        os.makedirs(self.output_dir, exist_ok=True)

    def clean_docs(self):
        """Removes documents of an earlier run so the docs dir holds exactly what this run writes."""
        self._delete_dir(self.get_docs_dir())

    def list_dot_files(self, dir_path=None):
        dir_path = dir_path or self.get_docs_dir()
        dot_paths = []
        for current_dir, _, file_names in os.walk(dir_path):
            for file_name in file_names:
                if file_name.endswith('.dot'):
                    dot_paths.append(os.path.join(current_dir, file_name).replace('\\', '/'))
        return sorted(dot_paths)

    def write_text(self, path, text):
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text)

    def _delete_dir(self, dir_path):
        if not os.path.exists(dir_path):
            return
        log.info(f'deleting {dir_path}...')
        try:
            shutil.rmtree(dir_path)
        except OSError:
            os.remove(dir_path)

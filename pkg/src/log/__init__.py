import logging
import logging.config
import os
import pathlib


BASE_DIR = str(pathlib.Path(__file__).parents[2]).replace('\\', '/')
LOGS_DIR = BASE_DIR + '/logs'
LOG_FILENAME = 'codedocs.log'


def setup_logging():
    config_file_path = f'{BASE_DIR}/config/logging.ini'
    if os.path.exists(config_file_path):
        if not os.path.exists(LOGS_DIR):
            os.makedirs(LOGS_DIR, exist_ok=True)
        logging.config.fileConfig(config_file_path,
                                  defaults={'file_filename': f'{LOGS_DIR}/{LOG_FILENAME}',
                                            'file_write_mode': 'w',
                                            'file_log_level': 'DEBUG',
                                            'file_log_formatter': 'file'},
                                  disable_existing_loggers=False)
    else:
        # installed without the repository config dir
        logging.basicConfig(level=logging.INFO, format='%(levelname).4s - %(message)s')
        logging.getLogger('ray').setLevel(logging.WARNING)
        logging.getLogger('codedocs').setLevel(logging.DEBUG)

    return logging.getLogger('codedocs')


def set_console_level(level):
    """Adjusts the stderr handler only, so the log file keeps debug detail."""
    for handler in logging.getLogger().handlers:
        if isinstance(handler, logging.StreamHandler) and not isinstance(handler, logging.FileHandler):
            handler.setLevel(level)


log = setup_logging()

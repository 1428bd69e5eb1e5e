"""
Convenience functions for getting info about the current OS platform
"""
import os
import shutil
import sys


def get_cpu_device_count():
    return os.cpu_count() or 1


def is_windows():
    return sys.platform == 'win32'


def default_renderer_name():
    return is_windows() and 'dot.exe' or 'dot'


def find_executable(path):
    """returns the absolute path of the executable, looking it up on PATH when only a name is given"""
    if path is None:
        return None
    if os.path.dirname(path):
        return os.path.exists(path) and path or None
    return shutil.which(path)

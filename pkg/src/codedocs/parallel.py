"""
Runs independent tasks either in-process or as Ray tasks on a local Ray runtime.
"""
import os

import ray

from config import SRC_DIR
from log import log
from util.platform import get_cpu_device_count


def initialize_ray(num_workers=None):
    if ray.is_initialized():
        return
    num_cpus = num_workers or get_cpu_device_count()
    runtime_env = None
    if os.path.isdir(f'{SRC_DIR}/codedocs'):
        # working_dir is required for the workers to import codedocs from a source checkout
        runtime_env = {'working_dir': SRC_DIR}
    log.info(f'starting local ray runtime with {num_cpus} cpus...')
    ray.init(num_cpus=num_cpus, include_dashboard=False, log_to_driver=False, runtime_env=runtime_env)


def shutdown_ray():
    if ray.is_initialized():
        ray.shutdown()


def parallel_map(fn, items, parallel=False, num_workers=None):
    """Applies fn to every item; results always come back in the order of items."""
    items = list(items)
    if not parallel or len(items) < 2:
        return [fn(item) for item in items]
    initialize_ray(num_workers)
    remote_fn = ray.remote(fn)
    return ray.get([remote_fn.remote(item) for item in items])

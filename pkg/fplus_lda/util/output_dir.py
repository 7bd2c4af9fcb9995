import logging
import os

import fplus_lda


def create(name=""):
    return OutputDir(name)


class OutputDir:
    """A run directory under the configured default output directory."""

    def __init__(self, name=""):
        self.root_path = os.path.join(fplus_lda.get_output_dir(), name)
        os.makedirs(self.root_path, exist_ok=True)
        logging.debug("use output dir: %s", self.root_path)

    def get_root_path(self):
        return self.root_path

    def subpath(self, path):
        res = os.path.join(self.get_root_path(), path)
        res_dir = os.path.dirname(res)
        os.makedirs(res_dir, exist_ok=True)
        return res

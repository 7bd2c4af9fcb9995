import json
import logging
import os
from typing import Optional

from fplus_lda import constant

__version__ = "0.3.0"


def init(output_dir=None, log_level=None):
    EnvHolder.init(output_dir, log_level)


def get_output_dir():
    return EnvHolder.get_settings()["output_dir"]


def get_log_level():
    return EnvHolder.get_settings()["log_level"]


def setup_logging(level=None):
    """Configure the root logger once, the way every entry point does."""
    level = (level or get_log_level()).upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.INFO),
        format=constant.LOG_FORMAT,
        datefmt=constant.LOG_DATE_FORMAT,
    )


class EnvHolder:
    SETTINGS: Optional[dict] = None

    @classmethod
    def init(cls, output_dir, log_level):
        conf = {}
        if os.environ.get("HOME", None) is not None:
            path = os.path.join(os.environ["HOME"], constant.CONFIG_FILE)
            if os.path.isfile(path):
                with open(path, encoding="utf-8") as f:
                    conf = json.load(f)

        final_output_dir = cls.pickup_non_blank_value(
            os.environ.get(constant.OUTPUT_DIR_ENV_NAME, None),
            conf.get("output_dir", None),
            output_dir,
        )
        if not final_output_dir:
            home = os.environ.get("HOME", default="/tmp")
            final_output_dir = os.path.join(home, constant.DEFAULT_OUTPUT_SUBDIR)

        final_log_level = cls.pickup_non_blank_value(
            os.environ.get(constant.LOG_LEVEL_ENV_NAME, None),
            conf.get("log_level", None),
            log_level,
        )
        cls.SETTINGS = {
            "output_dir": final_output_dir,
            "log_level": final_log_level or constant.DEFAULT_LOG_LEVEL,
        }

    @classmethod
    def get_settings(cls):
        if cls.SETTINGS is None:
            cls.init(None, None)
        return cls.SETTINGS

    @classmethod
    def pickup_non_blank_value(cls, *args):
        for arg in args:
            if arg is not None and len(arg.strip()) > 0:
                return arg.strip()
        return ""

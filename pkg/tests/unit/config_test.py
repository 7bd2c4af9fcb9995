import json
import os

import fplus_lda
from fplus_lda import constant
from fplus_lda.util import output_dir


def test_environment_overrides_config_file_and_argument(tmp_path, monkeypatch):
    monkeypatch.setenv("HOME", str(tmp_path))
    config_path = tmp_path / constant.CONFIG_FILE
    config_path.parent.mkdir(parents=True)
    config_path.write_text(json.dumps({"output_dir": "/from/file", "log_level": "DEBUG"}))

    monkeypatch.delenv(constant.OUTPUT_DIR_ENV_NAME, raising=False)
    monkeypatch.delenv(constant.LOG_LEVEL_ENV_NAME, raising=False)
    fplus_lda.init(output_dir="/from/arg", log_level="ERROR")
    assert fplus_lda.get_output_dir() == "/from/file"
    assert fplus_lda.get_log_level() == "DEBUG"

    monkeypatch.setenv(constant.OUTPUT_DIR_ENV_NAME, "/from/env")
    fplus_lda.init(output_dir="/from/arg")
    assert fplus_lda.get_output_dir() == "/from/env"


def test_argument_and_builtin_defaults(tmp_path, monkeypatch):
    monkeypatch.setenv("HOME", str(tmp_path))
    monkeypatch.delenv(constant.OUTPUT_DIR_ENV_NAME, raising=False)
    monkeypatch.delenv(constant.LOG_LEVEL_ENV_NAME, raising=False)
    fplus_lda.init(output_dir="  /from/arg  ")
    assert fplus_lda.get_output_dir() == "/from/arg"
    fplus_lda.init()
    assert fplus_lda.get_output_dir() == os.path.join(str(tmp_path), constant.DEFAULT_OUTPUT_SUBDIR)
    assert fplus_lda.get_log_level() == constant.DEFAULT_LOG_LEVEL


def test_output_dir_creates_subpaths(tmp_path, monkeypatch):
    monkeypatch.setenv(constant.OUTPUT_DIR_ENV_NAME, str(tmp_path))
    fplus_lda.init()
    run = output_dir.create("bench")
    path = run.subpath("nested/records.csv")
    assert os.path.isdir(os.path.dirname(path))
    assert run.get_root_path() == str(tmp_path / "bench")

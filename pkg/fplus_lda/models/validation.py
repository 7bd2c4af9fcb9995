import jsonschema

from fplus_lda import constant
from fplus_lda.errors import ConfigError

_positive_number = {"type": "number", "exclusiveMinimum": 0}
_positive_integer = {"type": "integer", "minimum": 1}

_hyper_params_schema = {
    "type": "object",
    "properties": {
        "num_topics": _positive_integer,
        "vocab_size": {"type": "integer", "minimum": 0},
        "alpha": _positive_number,
        "beta": _positive_number,
    },
    "required": ["num_topics", "vocab_size", "alpha", "beta"],
}

_trainer_config_schema = {
    "type": "object",
    "properties": {
        "algorithm": {"type": "string", "enum": constant.SUPPORTED_ALGORITHMS},
        "iterations": _positive_integer,
        "mh_steps": _positive_integer,
        "seed": {"type": "integer", "minimum": 0},
    },
    "required": ["algorithm", "iterations", "mh_steps", "seed"],
}

_synthetic_spec_schema = {
    "type": "object",
    "properties": {
        "num_docs": _positive_integer,
        "vocab_size": _positive_integer,
        "num_topics": _positive_integer,
        "mean_doc_length": _positive_number,
        "alpha": _positive_number,
        "beta": _positive_number,
        "seed": {"type": "integer", "minimum": 0},
    },
    "required": [
        "num_docs",
        "vocab_size",
        "num_topics",
        "mean_doc_length",
        "alpha",
        "beta",
        "seed",
    ],
}

_run_config_schema = {
    "type": "object",
    "properties": {
        "subcommand": {"type": "string", "enum": ["train", "bench"]},
        "algorithm": {"type": "string", "enum": constant.SUPPORTED_ALGORITHMS},
        "num_topics": _positive_integer,
        "alpha": {"anyOf": [_positive_number, {"type": "null"}]},
        "beta": _positive_number,
        "iterations": _positive_integer,
        "workers": _positive_integer,
        "routing": {"type": "string", "enum": constant.SUPPORTED_ROUTINGS},
        "seed": {"type": "integer", "minimum": 0},
        "output_format": {"type": "string", "enum": constant.SUPPORTED_FORMATS},
    },
    "required": ["subcommand"],
}


def _validate(instance, schema, what):
    try:
        jsonschema.validate(instance, schema=schema)
    except jsonschema.ValidationError as e:
        raise ConfigError(f"Invalid {what}: {e.message}") from e


def validate_hyper_params(hyper):
    _validate(hyper, _hyper_params_schema, "hyper parameters")


def validate_trainer_config(config):
    _validate(config, _trainer_config_schema, "trainer config")


def validate_synthetic_spec(spec):
    _validate(spec, _synthetic_spec_schema, "synthetic corpus spec")


def validate_run_config(config):
    _validate(config, _run_config_schema, "run config")


def validate_workers(workers):
    if not isinstance(workers, int) or workers < 1:
        raise ConfigError(f"Invalid worker count {workers}, should be >= 1")


def validate_epochs(epochs):
    if not isinstance(epochs, int) or epochs < 1:
        raise ConfigError(f"Invalid epoch count {epochs}, should be >= 1")


def validate_corpus_fit(hyper, corpus):
    """A trainer needs a non-empty vocabulary matching ``hyper.vocab_size``."""
    if corpus.vocab_size < 1:
        raise ConfigError("Invalid corpus: the vocabulary is empty, nothing to train")
    if hyper.vocab_size != corpus.vocab_size:
        raise ConfigError(
            f"hyper.vocab_size={hyper.vocab_size} but the corpus has "
            f"{corpus.vocab_size} words",
        )


def validate_resume_state(hyper, resume_hyper, num_assignments, num_tokens):
    if resume_hyper != hyper:
        raise ConfigError(f"Invalid resume state: saved with {resume_hyper}, run asks for {hyper}")
    if num_assignments != num_tokens:
        raise ConfigError(
            f"Invalid resume state: {num_assignments} assignments, corpus has {num_tokens} tokens",
        )

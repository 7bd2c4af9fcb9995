"""``fplus-lda`` command line: ``train`` and ``bench``.

Exit codes: 0 success, 1 usage error, 2 runtime error.
"""
import argparse
import contextlib
import logging
import sys
from dataclasses import asdict
from dataclasses import dataclass
from typing import List
from typing import Optional

import fplus_lda
from fplus_lda import constant
from fplus_lda.cli.bench import BENCH_FIELDS
from fplus_lda.cli.bench import cmd_bench_samplers
from fplus_lda.cli.metrics import MetricsWriter
from fplus_lda.datasets.synthetic import generate_synthetic
from fplus_lda.datasets.synthetic import SyntheticSpec
from fplus_lda.datasets.uci_bow import parse_uci_bow
from fplus_lda.errors import ConfigError
from fplus_lda.errors import FPlusLdaError
from fplus_lda.io.checkpoint import load_train_state
from fplus_lda.io.checkpoint import save_state
from fplus_lda.io.checkpoint import save_train_state
from fplus_lda.models import validation
from fplus_lda.models.hyper import HyperParams
from fplus_lda.nomad.controller import NomadController
from fplus_lda.trainers.config import TrainerConfig
from fplus_lda.trainers.serial import SerialTrainer
from fplus_lda.util import output_dir

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RUNTIME = 2

_SYNTHETIC_KEYS = {
    "docs": ("num_docs", int),
    "vocab": ("vocab_size", int),
    "topics": ("num_topics", int),
    "length": ("mean_doc_length", float),
    "alpha": ("alpha", float),
    "beta": ("beta", float),
    "seed": ("seed", int),
}


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    """Parsed command line of one invocation, defaults already applied."""

    subcommand: str
    corpus: Optional[str] = None
    vocab: Optional[str] = None
    synthetic: Optional[SyntheticSpec] = None
    algorithm: str = constant.ALGORITHM_FLDA_WORD
    num_topics: int = constant.DEFAULT_TOPICS
    alpha: Optional[float] = None
    beta: float = constant.DEFAULT_BETA
    iterations: int = constant.DEFAULT_ITERATIONS
    mh_steps: int = constant.DEFAULT_MH_STEPS
    workers: int = 1
    routing: str = constant.ROUTING_RING
    seed: int = constant.DEFAULT_SEED
    output: Optional[str] = None
    output_format: str = constant.FORMAT_CSV
    checkpoint: Optional[str] = None
    resume: Optional[str] = None
    top_words: int = 0
    quiet: bool = False
    bench_topics: Optional[List[int]] = None
    updates_per_sample: float = 0.1
    trials: int = constant.BENCH_TRIALS

    def __post_init__(self):
        validation.validate_run_config(
            {
                k: v for k, v in asdict(self).items()
                if k in ("subcommand", "algorithm", "num_topics", "alpha", "beta", "iterations",
                         "workers", "routing", "seed", "output_format")
            },
        )


def parse_synthetic(text: str, seed: int) -> SyntheticSpec:
    """Parse ``docs=500,vocab=200,topics=5,length=50[,alpha=..,beta=..,seed=..]``."""
    values = {"alpha": 0.1, "beta": constant.DEFAULT_BETA, "seed": seed}
    for item in filter(None, text.split(",")):
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or key not in _SYNTHETIC_KEYS:
            raise UsageError(f"bad synthetic spec item {item!r}")
        try:
            values[key] = _SYNTHETIC_KEYS[key][1](value)
        except ValueError as e:
            raise UsageError(f"bad synthetic spec value {item!r}") from e
    missing = {"docs", "vocab", "topics", "length"} - values.keys()
    if missing:
        raise UsageError(f"synthetic spec lacks {sorted(missing)}")
    return SyntheticSpec(**{_SYNTHETIC_KEYS[k][0]: v for k, v in values.items()})


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="fplus-lda", description="F+tree LDA training and benchmarks")
    parser.add_argument("--version", action="version", version=fplus_lda.__version__)
    parser.add_argument("--log-level", default=None, help="logging level, default from environment")
    sub = parser.add_subparsers(dest="subcommand", parser_class=_ArgumentParser)
    sub.required = True

    train = sub.add_parser("train", help="train a topic model and write a metric trace")
    source = train.add_mutually_exclusive_group(required=True)
    source.add_argument("--corpus", help="UCI docword file")
    source.add_argument("--synthetic", help="docs=I,vocab=J,topics=K,length=L[,alpha=,beta=,seed=]")
    train.add_argument("--vocab", help="UCI vocab file")
    train.add_argument("--algo", dest="algorithm", default=constant.ALGORITHM_FLDA_WORD,
                       choices=constant.SUPPORTED_ALGORITHMS)
    train.add_argument("--topics", dest="num_topics", type=int, default=constant.DEFAULT_TOPICS)
    train.add_argument("--alpha", type=float, default=None, help="default 50/T")
    train.add_argument("--beta", type=float, default=constant.DEFAULT_BETA)
    train.add_argument("--iters", dest="iterations", type=int, default=constant.DEFAULT_ITERATIONS)
    train.add_argument("--mh-steps", type=int, default=constant.DEFAULT_MH_STEPS)
    train.add_argument("--workers", "--threads", dest="workers", type=int, default=1,
                       help="nomad workers; more than one runs the parallel trainer")
    train.add_argument("--routing", default=constant.ROUTING_RING, choices=constant.SUPPORTED_ROUTINGS)
    train.add_argument("--seed", type=int, default=constant.DEFAULT_SEED)
    train.add_argument("--output", help="trace file, '-' for stdout; default under the output dir")
    train.add_argument("--format", dest="output_format", default=constant.FORMAT_CSV,
                       choices=constant.SUPPORTED_FORMATS)
    train.add_argument("--checkpoint", help="write the final state here")
    train.add_argument("--resume", help="continue a serial run from this checkpoint")
    train.add_argument("--top-words", type=int, default=0, help="log the top K words per topic")
    train.add_argument("--quiet", action="store_true", help="no progress bar")

    bench = sub.add_parser("bench", help="time sampler build, sample and update")
    bench.add_argument("--topics", dest="bench_topics", type=int, nargs="+",
                       default=constant.BENCH_TOPICS)
    bench.add_argument("--updates-per-sample", type=float, default=0.1)
    bench.add_argument("--trials", type=int, default=constant.BENCH_TRIALS)
    bench.add_argument("--output", help="record file, '-' for stdout")
    bench.add_argument("--format", dest="output_format", default=constant.FORMAT_CSV,
                       choices=constant.SUPPORTED_FORMATS)
    bench.add_argument("--quiet", action="store_true")
    return parser


def to_run_config(args) -> RunConfig:
    fields = {k: v for k, v in vars(args).items() if k in RunConfig.__dataclass_fields__}
    if args.subcommand == "train" and args.synthetic is not None:
        fields["synthetic"] = parse_synthetic(args.synthetic, args.seed)
    if args.subcommand == "bench":
        if any(t < 1 for t in args.bench_topics) or args.trials < 1 or args.updates_per_sample < 0:
            raise UsageError("topics and trials must be positive, updates-per-sample non-negative")
    return RunConfig(**fields)


@contextlib.contextmanager
def _open_sink(path):
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as f:
            yield f


def default_output(config: RunConfig) -> str:
    name = f"{config.algorithm}-T{config.num_topics}-p{config.workers}-seed{config.seed}"
    return output_dir.create(config.subcommand).subpath(f"{name}.{config.output_format}")


def load_corpus(config: RunConfig):
    if config.synthetic is not None:
        corpus, _, _ = generate_synthetic(config.synthetic)
        return corpus
    return parse_uci_bow(config.corpus, config.vocab)


def cmd_train(config: RunConfig) -> int:
    corpus = load_corpus(config)
    hyper = HyperParams(config.num_topics, corpus.vocab_size, config.alpha, config.beta)
    trainer_config = TrainerConfig(
        algorithm=config.algorithm,
        iterations=config.iterations,
        hyper=hyper,
        mh_steps=config.mh_steps,
        seed=config.seed,
        show_progress=not config.quiet,
    )
    if config.workers > 1 and config.resume:
        raise UsageError("--resume applies to serial training only")
    if config.workers > 1 and config.algorithm != constant.ALGORITHM_FLDA_WORD:
        raise UsageError(f"--workers needs --algo {constant.ALGORITHM_FLDA_WORD}")

    controller = trainer = None
    if config.workers > 1:
        controller = NomadController(corpus, trainer_config, config.workers, config.routing)
    else:
        resume = load_train_state(config.resume) if config.resume else None
        trainer = SerialTrainer(corpus, trainer_config, resume)

    output = config.output or default_output(config)
    logging.info("writing %s trace to %s", config.output_format, output)
    with _open_sink(output) as sink:
        writer = MetricsWriter(sink, config.output_format)
        if controller is not None:
            try:
                trace = controller.run(config.iterations, writer.write)
            finally:
                controller.close()
            z, model = controller.z, controller.model
            if config.checkpoint:
                save_state(config.checkpoint, z, model, iteration=controller.epoch)
        else:
            trace = trainer.run(writer.write)
            model = trainer.model
            if config.checkpoint:
                save_train_state(config.checkpoint, trainer.state)

    logging.info("trace summary:\n%s", trace.summary_table())
    if config.top_words > 0:
        for t, words in enumerate(model.top_words(config.top_words)):
            names = [corpus.vocab[w] if corpus.vocab else str(w + 1) for w in words]
            logging.info("topic %d: %s", t, " ".join(names))
    return EXIT_OK


def cmd_bench(config: RunConfig) -> int:
    output = config.output
    if output is None:
        return cmd_bench_samplers(
            config.bench_topics, config.updates_per_sample, config.trials,
            show_progress=not config.quiet,
        )
    with _open_sink(output) as sink:
        writer = MetricsWriter(sink, config.output_format, BENCH_FIELDS)
        return cmd_bench_samplers(
            config.bench_topics, config.updates_per_sample, config.trials, writer,
            show_progress=not config.quiet,
        )


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fplus_lda.init(log_level=args.log_level)
    fplus_lda.setup_logging()

    try:
        config = to_run_config(args)
    except (UsageError, ConfigError) as e:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {e}", file=sys.stderr)
        return EXIT_USAGE

    try:
        if config.subcommand == "train":
            return cmd_train(config)
        return cmd_bench(config)
    except (UsageError, ConfigError) as e:
        print(f"{parser.prog}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (FPlusLdaError, OSError) as e:
        logging.error("%s failed: %s", config.subcommand, e)
        print(f"{parser.prog}: error: {e}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())

import argparse
import logging

from prettytable import PrettyTable

import fplus_lda
from fplus_lda import constant
from fplus_lda.datasets import SyntheticSpec
from fplus_lda.datasets import generate_synthetic
from fplus_lda.io import save_state
from fplus_lda.models import HyperParams
from fplus_lda.models.likelihood import topic_recovery
from fplus_lda.nomad import run_parallel
from fplus_lda.trainers import TrainerConfig
from fplus_lda.trainers import train
from fplus_lda.util import output_dir

fplus_lda.init()
fplus_lda.setup_logging()
OUTPUT_DIR = output_dir.create("samples/compare_algorithms")

parser = argparse.ArgumentParser()
parser.add_argument("--iters", type=int, default=20)
parser.add_argument("--topics", type=int, default=10)
parser.add_argument("--workers", type=int, nargs="+", default=[1, 2, 4])
args = parser.parse_args()

spec = SyntheticSpec(
    num_docs=1000, vocab_size=500, num_topics=args.topics, mean_doc_length=80, alpha=0.1, beta=0.01, seed=7,
)
corpus, phi, _ = generate_synthetic(spec)
hyper = HyperParams(num_topics=args.topics, vocab_size=corpus.vocab_size)
logging.info("corpus: %s", corpus)

table = PrettyTable(["run", "final loglik", "tokens/sec", "topic cosine"])


def report(name, model, trace):
    records = trace.records
    rate = sum(r.tokens_per_sec for r in records) / len(records)
    cosine, _ = topic_recovery(phi, model.topic_word_distribution())
    table.add_row([name, f"{trace.final_loglik:.1f}", f"{rate:.0f}", f"{cosine:.3f}"])


for algorithm in constant.SUPPORTED_ALGORITHMS:
    config = TrainerConfig(algorithm=algorithm, iterations=args.iters, hyper=hyper, seed=1, show_progress=True)
    z, model, trace = train(corpus, config)
    report(algorithm, model, trace)
    save_state(OUTPUT_DIR.subpath(f"{algorithm}.ckpt"), z, model)

word_config = TrainerConfig(
    algorithm=constant.ALGORITHM_FLDA_WORD, iterations=args.iters, hyper=hyper, seed=1,
)
for p in args.workers:
    _, model, trace = run_parallel(corpus, word_config, p, args.iters)
    report(f"nomad p={p}", model, trace)

print(table)

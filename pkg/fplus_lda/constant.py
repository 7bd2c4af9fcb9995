import os

OUTPUT_DIR_ENV_NAME = "FPLUS_LDA_OUTPUT_DIR"
LOG_LEVEL_ENV_NAME = "FPLUS_LDA_LOG_LEVEL"
CONFIG_FILE = os.path.join(".fplus_lda", "config")

DEFAULT_OUTPUT_SUBDIR = os.path.join(".fplus_lda", "runs")
DEFAULT_LOG_LEVEL = "INFO"

LOG_FORMAT = "%(asctime)s %(levelname)s %(message)s"
LOG_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"

DEFAULT_TOPICS = 1024
DEFAULT_BETA = 0.01
# alpha defaults to DEFAULT_ALPHA_MASS / num_topics
DEFAULT_ALPHA_MASS = 50.0
DEFAULT_ITERATIONS = 100
DEFAULT_MH_STEPS = 2
DEFAULT_SEED = 0

ALGORITHM_FLDA_WORD = "flda-word"
ALGORITHM_FLDA_DOC = "flda-doc"
ALGORITHM_SPARSE = "sparse"
ALGORITHM_ALIAS = "alias"
SUPPORTED_ALGORITHMS = [
    ALGORITHM_FLDA_WORD,
    ALGORITHM_FLDA_DOC,
    ALGORITHM_SPARSE,
    ALGORITHM_ALIAS,
]

ROUTING_RING = "ring"
ROUTING_UNIFORM = "random"
SUPPORTED_ROUTINGS = [ROUTING_RING, ROUTING_UNIFORM]

FORMAT_CSV = "csv"
FORMAT_JSONL = "jsonl"
SUPPORTED_FORMATS = [FORMAT_CSV, FORMAT_JSONL]

TRACE_FIELDS = [
    "iter",
    "loglik",
    "seconds",
    "tokens_per_sec",
    "algorithm",
    "workers",
    "seed",
]
# excluded from determinism comparisons
TIMING_FIELDS = ["seconds", "tokens_per_sec"]

CHECKPOINT_MAGIC = b"FLDA"
CHECKPOINT_VERSION = 1

# a leaf more negative than this fraction of the total mass is a contract violation
LEAF_NEGATIVE_TOLERANCE = 1e-12

BENCH_TOPICS = [64, 256, 1024, 4096]
BENCH_TRIALS = 5
BENCH_SAMPLES_PER_TRIAL = 2000
BENCH_WARMUP = 200
BENCH_SEED = 20150101

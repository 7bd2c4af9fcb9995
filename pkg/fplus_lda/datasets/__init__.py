from fplus_lda.datasets.corpus import Corpus
from fplus_lda.datasets.synthetic import SyntheticSpec
from fplus_lda.datasets.synthetic import generate_synthetic
from fplus_lda.datasets.uci_bow import parse_uci_bow

__all__ = ["Corpus", "SyntheticSpec", "generate_synthetic", "parse_uci_bow"]

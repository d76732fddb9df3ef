from .batching import BatchStream, make_batches
from .corpus import ParallelExample, read_corpus_tsv, write_corpus_tsv
from .generate import GeneratedCorpora, SplitCorpora, generate_corpus
from .taskspec import DomainSpec, SyntheticTaskSpec, default_spec, transform_fn
from .vocab import BOS, EOS, PAD, UNK, DomainLabel, Vocabulary, tag_token

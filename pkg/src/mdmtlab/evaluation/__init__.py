from .bleu import BleuScore, corpus_bleu, corpus_stats, pair_stats, score_from_stats, tokenize_13a
from .bootstrap import SignificanceResult, paired_bootstrap
from .matrix import NO_LABEL, AblationMatrix, read_ablation_csv, write_ablation_csv
from .robustness import RobustnessSummary, robustness_std

"""mdmtlab: a desk-scale multi-domain translation workbench.

Trains a small encoder-decoder transformer on synthetic multi-domain
parallel corpora, contrasts tag-prefix conditioning with additive
encoder interventions, and evaluates robustness to domain-label error.
"""

__version__ = "0.1.0"

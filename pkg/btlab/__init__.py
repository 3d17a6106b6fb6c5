"""
Brun-Titchmarsh constants workbench

Modules:
- services/exponent_pairs.py - exact A/B process calculus and searches
- services/sieve_functions.py - linear-sieve functions F and f
- services/curve_catalog.py, services/bt_constants.py - constant curves, envelopes, report tables
- services/arith_sums.py, services/characters.py - Kloosterman, Ramanujan and character sums
- services/prime_counts.py - segmented sieve and primes in progressions
- orchestrator.py - experiment runner behind `sums` and `verify-bt`
- cli.py - command-line front end
- config.py - configuration management
"""

from .config import load_config
from .orchestrator import ExperimentOrchestrator
from .services.bt_constants import envelope, eval_curve
from .services.exponent_pairs import eval_word, optimize

__all__ = [
    'ExperimentOrchestrator',
    'envelope',
    'eval_curve',
    'eval_word',
    'load_config',
    'optimize',
]

__version__ = '0.1.0'

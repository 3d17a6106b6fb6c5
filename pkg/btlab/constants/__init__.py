from .published import (
    PUBLISHED_RANKIN_CONSTANT,
    PUBLISHED_RANKIN_G,
    PUBLISHED_RANKIN_INFIMUM,
    PUBLISHED_TABLE1,
    RANKIN_LOWER_BOUND,
)
from .thresholds import (
    CONGRUENCE_RELATIVE_ERROR,
    KL_MOMENT_RATIO,
    RESIDUE_TOLERANCE,
    RSTAR_RATIO,
    TABLE1_PERCENT_TOLERANCE,
    VP_BOUND,
)

__all__ = [
    'CONGRUENCE_RELATIVE_ERROR',
    'KL_MOMENT_RATIO',
    'PUBLISHED_RANKIN_CONSTANT',
    'PUBLISHED_RANKIN_G',
    'PUBLISHED_RANKIN_INFIMUM',
    'PUBLISHED_TABLE1',
    'RANKIN_LOWER_BOUND',
    'RESIDUE_TOLERANCE',
    'RSTAR_RATIO',
    'TABLE1_PERCENT_TOLERANCE',
    'VP_BOUND',
]

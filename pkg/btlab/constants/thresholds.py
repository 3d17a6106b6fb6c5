"""
Frozen thresholds for the diagnostic sums.

Hard identities use RESIDUE_TOLERANCE; the remaining values bound quantities that only have
"<<" estimates and are fixed once so that every run is judged against the same line.
"""

RESIDUE_TOLERANCE = 1e-9

# max |V_p(y; a, b)| for a != b. The y-sum collapses to a one-variable sum of a rational function with two
# simple poles, so |V_p| <= 2 + 1/sqrt(p).
VP_BOUND = 3.0

# moment / (|N|^nu p + |N|^(2 nu) sqrt(p)) for nu <= 2
KL_MOMENT_RATIO = 2.0

# |incomplete Kloosterman sum| / (|I|^(1/2) (h, q)^(1/2)) over random intervals mod 30030
RSTAR_RATIO = 20.0

# |R - main term| / main term for the congruence count at q = 53, M = 20, N >= 200
CONGRUENCE_RELATIVE_ERROR = 0.05

# allowed gap in percentage points between computed and printed improvement
TABLE1_PERCENT_TOLERANCE = 0.11

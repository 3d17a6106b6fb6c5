"""
Published reference values that computed results are reported against.
"""

from decimal import Decimal
from fractions import Fraction

# varpi -> (ours, iwaniec, improvement %), as printed
PUBLISHED_TABLE1: dict[Fraction, tuple[Decimal, Decimal, Decimal]] = {
    Fraction(16, 31): (Decimal('3.3067'), Decimal('3.3514'), Decimal('1.4')),
    Fraction(12, 23): (Decimal('3.3455'), Decimal('3.4074'), Decimal('1.8')),
    Fraction(32, 61): (Decimal('3.3889'), Decimal('3.4366'), Decimal('1.3')),
    Fraction(8, 15): (Decimal('3.4615'), Decimal('3.5294'), Decimal('1.9')),
    Fraction(7, 13): (Decimal('3.5254'), Decimal('3.5862'), Decimal('1.6')),
    Fraction(6, 11): (Decimal('3.5918'), Decimal('3.6667'), Decimal('2.0')),
}

# infimum of kappa + lambda over the A/B-generated pairs
PUBLISHED_RANKIN_INFIMUM = 0.829021
RANKIN_LOWER_BOUND = Fraction(829, 1000)

PUBLISHED_RANKIN_G = 0.723659
# printed as 4/g; 4/0.723659 is 5.5275
PUBLISHED_RANKIN_CONSTANT = 5.2746

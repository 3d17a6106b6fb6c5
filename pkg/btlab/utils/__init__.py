from .rationals import parse_rational, rational_str, round_half_up, significant
from .transforms import prime_dft

__all__ = [
    'parse_rational',
    'prime_dft',
    'rational_str',
    'round_half_up',
    'significant',
]

"""
Exact rational parsing and decimal rendering.
"""

from decimal import ROUND_HALF_UP, Decimal, localcontext
from fractions import Fraction

from btlab.domain.errors import InvalidParameterError


def parse_rational(text: str | int | Fraction) -> Fraction:
    """
    Parse "p/q" or a base-10 decimal string exactly.

    Args:
        text: "2/3", "0.46", "7/64", "1e-3" or an int/Fraction

    Returns:
        The exact rational value
    """
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    try:
        return Fraction(text.strip().replace('_', ''))
    except (ValueError, ZeroDivisionError) as e:
        raise InvalidParameterError(f'not a rational number: {text!r} ({e})')


def rational_str(value: Fraction | None) -> str | None:
    """'p/q' in lowest terms, bare 'p' for integers"""
    if value is None:
        return None
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'


def round_half_up(value: Fraction, places: int) -> Decimal:
    """Round an exact rational to `places` decimals, halves away from zero"""
    with localcontext() as ctx:
        ctx.prec = 60
        exact = Decimal(value.numerator) / Decimal(value.denominator)
        return exact.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_UP)


def significant(value: float | Fraction, digits: int = 10) -> str:
    return f'{float(value):.{digits}g}'

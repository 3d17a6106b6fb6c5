"""
Tests for rational parsing and rendering
"""

from decimal import Decimal
from fractions import Fraction as F

import pytest

from btlab.domain.errors import InvalidParameterError
from btlab.utils.rationals import parse_rational, rational_str, round_half_up, significant


class TestRationalStr:
    """Tests for rational_str"""

    @pytest.mark.parametrize('value,expected', [
        (F(6), '6'),
        (F(0), '0'),
        (F(-2), '-2'),
        (F(4, 2), '2'),
        (F(2, 3), '2/3'),
        (F(-7, 64), '-7/64'),
    ])
    def test_render(self, value, expected):
        assert rational_str(value) == expected

    def test_none(self):
        assert rational_str(None) is None

    def test_parse_back(self):
        for value in (F(6), F(248, 75)):
            assert parse_rational(rational_str(value)) == value


class TestParseRational:
    """Tests for parse_rational"""

    @pytest.mark.parametrize('text,expected', [('2/3', F(2, 3)), ('0.46', F(23, 50)), ('1e-3', F(1, 1000)), (7, F(7))])
    def test_exact(self, text, expected):
        assert parse_rational(text) == expected

    @pytest.mark.parametrize('text', ['abc', '1/0', ''])
    def test_invalid(self, text):
        with pytest.raises(InvalidParameterError):
            parse_rational(text)


class TestRounding:
    """Tests for round_half_up and significant"""

    def test_half_up(self):
        assert round_half_up(F(1, 8), 2) == Decimal('0.13')
        assert round_half_up(F(248, 75), 4) == Decimal('3.3067')

    def test_significant(self):
        assert significant(F(2, 3)) == '0.6666666667'


if __name__ == "__main__":
    pytest.main([__file__, "-v"])

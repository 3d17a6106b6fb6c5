"""
Tests for Dirichlet character groups
"""

import numpy as np
import pytest
from sympy import legendre_symbol

from btlab.domain.errors import InvalidParameterError
from btlab.services.characters import (
    build_character_group,
    character_matrix,
    nontrivial_index,
    orthogonality_errors,
    quadratic_character,
)
from btlab.utils.modular import phi


class TestCharacterGroup:
    """Tests for build_character_group"""

    @pytest.mark.parametrize('q', [1, 2, 3, 4, 8, 9, 16, 24, 30, 45, 64, 97])
    def test_group_size(self, q):
        group = build_character_group(q)
        assert len(group) == phi(q)
        assert len(list(group.indices())) == phi(q)

    @pytest.mark.parametrize('q', [1, 2, 8, 16, 24, 25, 36, 40])
    def test_orthogonality(self, q):
        by_residue, by_character = orthogonality_errors(build_character_group(q))
        assert by_residue < 1e-9
        assert by_character < 1e-9

    def test_two_power_factors(self):
        assert build_character_group(32).orders == (2, 8)
        assert build_character_group(4).orders == (2,)
        assert build_character_group(2).orders == ()

    def test_values_vanish_off_units(self):
        group = build_character_group(12)
        values = group.values(nontrivial_index(group))
        assert np.all(values[[0, 2, 3, 4, 6, 8, 9, 10]] == 0)
        assert np.allclose(np.abs(values[[1, 5, 7, 11]]), 1)

    def test_multiplicative(self):
        group = build_character_group(45)
        index = nontrivial_index(group)
        for m, n in ((2, 7), (4, 11), (13, 14)):
            product = group.evaluate(index, m) * group.evaluate(index, n)
            assert group.evaluate(index, m * n) == pytest.approx(product)

    def test_matrix_shape(self):
        assert character_matrix(build_character_group(15)).shape == (8, 15)

    def test_wrong_index_length(self):
        group = build_character_group(15)
        with pytest.raises(InvalidParameterError):
            group.values((1,))


class TestSpecialCharacters:
    """Tests for quadratic_character and nontrivial_index"""

    @pytest.mark.parametrize('p', [3, 11, 101])
    def test_quadratic_is_legendre(self, p):
        group = build_character_group(p)
        index = quadratic_character(group)
        assert group.order_of(index) == 2
        for n in range(1, p):
            assert group.evaluate(index, n).real == pytest.approx(legendre_symbol(n, p))

    @pytest.mark.parametrize('q', [2, 15, 16])
    def test_quadratic_needs_odd_prime(self, q):
        with pytest.raises(InvalidParameterError):
            quadratic_character(build_character_group(q))

    def test_nontrivial_index(self):
        group = build_character_group(7)
        assert nontrivial_index(group) == (1,)
        assert not group.is_trivial(nontrivial_index(group))

    @pytest.mark.parametrize('q', [1, 2])
    def test_no_nontrivial_character(self, q):
        with pytest.raises(InvalidParameterError):
            nontrivial_index(build_character_group(q))


if __name__ == "__main__":
    pytest.main([__file__, "-v"])

import pytest
from numpy import arange, float64, ones

from metamap.errors import DomainError
from metamap.transfer.density import (as_grid, cell_fractions, cell_of, indicator, integrate, l1_distance, mass,
									  normalize_mass, point_value, uniform)


def test_uniform_has_mass_one():
	assert mass(uniform(7)) == pytest.approx(1.0)


def test_cell_fractions_partial_cells():
	frac = cell_fractions([(0.05, 0.35)], 10)
	assert frac[0] == pytest.approx(0.5)
	assert frac[1] == pytest.approx(1.0)
	assert frac[3] == pytest.approx(0.5)
	assert frac[4] == 0.0
	assert frac.sum() / 10 == pytest.approx(0.3)


def test_integrate_exact_on_partial_cells():
	d = indicator(12, 0.0, 0.5, 2.0)
	assert integrate(d, 0.0, 0.5) == pytest.approx(1.0)
	assert integrate(d, 1 / 3. - 0.01, 1 / 3.) == pytest.approx(0.02)


def test_l1_distance_size_mismatch():
	with pytest.raises(DomainError):
		l1_distance(ones(4), ones(5))


def test_normalize_zero_mass():
	with pytest.raises(DomainError):
		normalize_mass(0.0 * ones(3))


def test_cell_of_right_end():
	assert cell_of(1.0, 8) == 7
	assert cell_of(0.0, 8) == 0


def test_point_value_stays_in_half():
	d = indicator(10, 0.0, 0.5, 2.0)
	# cells 4 and 5 straddle 1/2; only cells inside [0, 1/2] are averaged
	assert point_value(d, 0.49, 0.0, 0.5) == pytest.approx(2.0)
	assert point_value(d, 0.51, 0.5, 1.0) == pytest.approx(0.0)


def test_as_grid_rejects_matrix():
	with pytest.raises(DomainError):
		as_grid(arange(4, dtype=float64).reshape(2, 2))

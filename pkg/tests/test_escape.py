import pytest

from metamap.errors import DegeneracyError
from metamap.metastability.holes import compute_holes
from metamap.model.interval_map import Interval
from metamap.model.perturbation import instantiate
from metamap.spectral.escape import escape_rate, hole_cell_fractions, sub_domain_cells
from metamap.transfer.density import indicator
from metamap.transfer.ulam import build_ulam

N = 1200
I_L = Interval(0.0, 0.5)


@pytest.fixture(scope='module')
def P0(t0_a):
	return build_ulam(t0_a, N)


def test_empty_hole(P0):
	rep = escape_rate(P0, [], I_L)
	assert rep.rate == 0.0
	assert rep.open_eigenvalue == 1.0


def test_whole_domain_hole(P0):
	with pytest.raises(DegeneracyError):
		escape_rate(P0, sub_domain_cells(N, I_L), I_L)


def test_hole_cell_fractions():
	cells, frac = hole_cell_fractions([(0.1, 0.125)], 20)
	assert list(cells) == [2]
	assert frac[2] == pytest.approx(0.5)


def test_left_escape_matches_hole_measure(P0, family_a):
	holes = compute_holes(instantiate(family_a, 0.005), 0.5)
	cells, frac = hole_cell_fractions([(iv.lo, iv.hi) for iv in holes.H_l], N)
	rep = escape_rate(P0, cells, I_L, frac, indicator(N, 0.0, 0.5, 2.0))
	assert rep.hole_measure == pytest.approx(0.01)
	assert 0.85 <= rep.ratio <= 1.15


def test_computed_reference_density(P0, family_a):
	holes = compute_holes(instantiate(family_a, 0.005), 0.5)
	cells, frac = hole_cell_fractions([(iv.lo, iv.hi) for iv in holes.H_l], N)
	given = escape_rate(P0, cells, I_L, frac, indicator(N, 0.0, 0.5, 2.0))
	computed = escape_rate(P0, cells, I_L, frac)
	assert computed.hole_measure == pytest.approx(given.hole_measure, rel=1e-6)
	assert computed.rate == pytest.approx(given.rate, rel=1e-6)


def test_larger_hole_escapes_faster(P0):
	rates = [escape_rate(P0, list(range(400 - w, 400 + w)), I_L).rate for w in (2, 5, 12, 30)]
	assert rates[0] > 0.0
	assert all(a <= b for a, b in zip(rates[:-1], rates[1:]))

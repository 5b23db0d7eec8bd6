import pytest
from numpy import allclose, arange, concatenate, cumsum, float64, ones, zeros

from metamap.bv.postcritical import postcritical_hierarchy
from metamap.bv.saltus import (local_saltus_variation, reconstruction_error, saltus_decompose, saltus_variation,
							   sup_norm_bound, total_variation)
from metamap.errors import DomainError
from metamap.model.perturbation import instantiate
from metamap.spectral.power import invariant_density
from metamap.transfer.density import indicator
from metamap.transfer.ulam import build_ulam


def test_total_variation():
	assert total_variation(ones(16)) == 0.0
	assert total_variation(indicator(16, 0.0, 0.5, 2.0)) == pytest.approx(2.0)


def test_sup_norm_bound():
	d = indicator(16, 0.0, 0.5, 2.0)
	sup, bound = sup_norm_bound(d)
	assert sup == 2.0
	assert bound == pytest.approx(3.0)
	assert sup <= bound


def test_pure_step(t0_a):
	d = indicator(100, 0.0, 0.5, 2.0)
	dec = saltus_decompose(d, postcritical_hierarchy(t0_a, 2), 1.0)
	assert len(dec.jumps) == 1
	u, s = dec.jumps[0]
	assert u == pytest.approx(0.5)
	assert s == pytest.approx(-2.0)
	assert dec.depths == [1]
	assert dec.unmatched == 0
	# the saltus part vanishes at 1, so the regular part is the right-hand value
	assert allclose(dec.regular, 0.0)
	assert dec.lipschitz_estimate == 0.0
	assert reconstruction_error(d, dec) == 0.0


def test_linear_ramp():
	n = 200
	d = arange(n, dtype=float64) / n
	dec = saltus_decompose(d, None, 1.0)
	assert dec.jumps == []
	assert dec.lipschitz_estimate == pytest.approx(1.0)
	assert saltus_variation(dec) == 0.0


def test_smeared_jump_is_merged():
	d = indicator(100, 0.0, 0.503, 2.0)
	dec = saltus_decompose(d, None, 1.0)
	assert len(dec.jumps) == 1
	assert dec.jumps[0][1] == pytest.approx(-2.0)
	# located at the larger of the two differences
	assert dec.jumps[0][0] == pytest.approx(0.5)
	assert dec.unmatched == 1


def test_ringing_lobe_joins_the_jump(t0_a):
	d = indicator(200, 0.0, 0.5, 2.0)
	d[101] = -0.3
	dec = saltus_decompose(d, postcritical_hierarchy(t0_a, 2), 1.0)
	assert len(dec.jumps) == 1
	u, s = dec.jumps[0]
	assert u == pytest.approx(0.5)
	assert s == pytest.approx(-2.0)
	assert dec.unmatched == 0


def test_wide_smear_with_quiet_middle(t0_a):
	# -0.5 at boundary 90, five small steps of -0.01, then -1.45 at boundary 96
	steps = zeros(199)
	steps[90] = -0.5
	steps[91:96] = -0.01
	steps[96] = -1.45
	d = 2.0 + concatenate(([0.0], cumsum(steps)))
	dec = saltus_decompose(d, postcritical_hierarchy(t0_a, 2), 1.0)
	assert len(dec.jumps) == 1
	u, s = dec.jumps[0]
	assert u == pytest.approx(97 / 200.)
	assert s == pytest.approx(-2.0)
	assert dec.lipschitz_estimate == 0.0
	assert reconstruction_error(d, dec) < 1e-12


def test_local_saltus_variation():
	d = indicator(100, 0.0, 0.5, 2.0) + indicator(100, 0.0, 0.2, 1.0)
	dec = saltus_decompose(d, None, 1.0)
	assert saltus_variation(dec) == pytest.approx(3.0)
	assert local_saltus_variation(dec, 0.5, 0.05) == pytest.approx(2.0)


def test_bad_lipschitz_bound():
	with pytest.raises(DomainError):
		saltus_decompose(ones(4), None, 0.0)


@pytest.mark.parametrize('eps', [0.02, 0.01])
def test_small_saltus_near_the_holes(family_a, eps):
	n = 1200
	T = instantiate(family_a, eps)
	phi = invariant_density(build_ulam(T, n)).phi
	dec = saltus_decompose(phi, postcritical_hierarchy(T, 6), 1.0)
	for h in sorted(family_a.hole_coefficients):
		assert local_saltus_variation(dec, h, 1 / 48.) < 0.1

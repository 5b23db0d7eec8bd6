import pytest
from numpy import ones
from numpy.random import RandomState

from metamap.errors import NoPerturbationError
from metamap.metastability.holes import HoleReport, compute_holes, flux_balance, hole_measures
from metamap.model.interval_map import Interval, evaluate
from metamap.model.perturbation import instantiate
from metamap.transfer.density import indicator

N = 600


def _references(n=N):
	return indicator(n, 0.0, 0.5, 2.0), indicator(n, 0.5, 1.0, 2.0)


def test_family_a_geometry(family_a):
	rep = compute_holes(instantiate(family_a, 0.01), 0.5)
	assert len(rep.H_l) == 1 and len(rep.H_r) == 1
	assert rep.H_l[0].lo == pytest.approx(1 / 3. - 0.01)
	assert rep.H_l[0].hi == pytest.approx(1 / 3.)
	assert rep.H_r[0].lo == pytest.approx(2 / 3.)
	assert rep.H_r[0].hi == pytest.approx(2 / 3. + 0.01 / 3)
	assert rep.warnings == []


def test_no_holes_at_zero(family_a, family_b):
	for fam in (family_a, family_b):
		rep = compute_holes(instantiate(fam, 0.0), 0.5)
		assert rep.H_l == [] and rep.H_r == []


def test_family_b_geometry(family_b):
	rep = compute_holes(instantiate(family_b, 0.01), 0.5)
	assert len(rep.H_l) == 3 and len(rep.H_r) == 3
	assert rep.leb_l == pytest.approx(0.03)
	assert rep.leb_r == pytest.approx(0.01)
	assert rep.H_l[-1].hi == pytest.approx(0.5)
	assert any(w.startswith("boundary violation") for w in rep.warnings)


def test_family_a_measures(family_a):
	rep = hole_measures(compute_holes(instantiate(family_a, 0.01), 0.5), *_references())
	assert rep.mu_l_Hl == pytest.approx(0.02)
	assert rep.mu_r_Hr == pytest.approx(0.02 / 3)
	assert rep.ratio == pytest.approx(1 / 3.)


@pytest.mark.parametrize('eps', [0.02, 0.01, 0.005])
def test_family_b_ratio(family_b, eps):
	rep = hole_measures(compute_holes(instantiate(family_b, eps), 0.5), *_references())
	assert rep.ratio == pytest.approx(1 / 3., rel=1e-9)


def test_symmetric_holes_ratio_one():
	rep = HoleReport([Interval(0.2, 0.25)], [Interval(0.75, 0.8)], 0.05, 0.05, None, None, None, [])
	assert hole_measures(rep, *_references()).ratio == pytest.approx(1.0)


def test_no_perturbation(family_a):
	rep = compute_holes(instantiate(family_a, 0.0), 0.5)
	with pytest.raises(NoPerturbationError):
		hole_measures(rep, *_references())


def test_one_sided_leak_gives_infinite_ratio():
	rep = HoleReport([Interval(0.2, 0.25)], [Interval(0.75, 0.8)], 0.05, 0.05, None, None, None, [])
	out = hole_measures(rep, 0.0 * ones(N), indicator(N, 0.5, 1.0, 2.0))
	assert out.ratio == float('inf')


def test_flux_balance_of_mixture(family_a):
	rep = compute_holes(instantiate(family_a, 0.01), 0.5)
	mixture = indicator(N, 0.0, 0.5, 0.5) + indicator(N, 0.5, 1.0, 1.5)
	# 0.5 * 0.01 on the left, 1.5 * 0.01 / 3 on the right
	assert flux_balance(mixture, rep) == pytest.approx(0.0, abs=1e-12)


def test_hole_points_cross_and_others_stay(family_a):
	b = 0.5
	T = instantiate(family_a, 0.01)
	rep = compute_holes(T, b)
	rs = RandomState(3)
	for H, lo, hi, crosses in ((rep.H_l, 0.0, b, lambda y: y > b), (rep.H_r, b, 1.0, lambda y: y < b)):
		for iv in H:
			for x in rs.uniform(iv.lo, iv.hi, 1000):
				assert all(crosses(y) for y in evaluate(T, x))
		outside = [x for x in rs.uniform(lo, hi, 3000)
				   if all(abs(x - e) > 1e-9 for e in (lo, hi)) and not any(iv.lo <= x <= iv.hi for iv in H)][:1000]
		assert len(outside) == 1000
		for x in outside:
			assert not any(crosses(y) for y in evaluate(T, x))

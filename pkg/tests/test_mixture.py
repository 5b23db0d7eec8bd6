import pytest
from numpy import allclose

from metamap.errors import DegeneracyError, DomainError, ModelError
from metamap.metastability.mixture import (alpha_from_lhr, analytic_lhr, markov_matrix, markov_stationary,
										   predict_mixture)
from metamap.model.perturbation import make_family
from metamap.transfer.density import indicator

N = 60
PHI_L = indicator(N, 0.0, 0.5, 2.0)
PHI_R = indicator(N, 0.5, 1.0, 2.0)


def _with_holes(family, holes):
	return make_family(family.base, family.eps_coefficients, family.boundary_b, holes, 'variant')


def test_family_a_lhr(family_a):
	assert analytic_lhr(family_a, PHI_L, PHI_R) == pytest.approx(1 / 3.)


def test_one_sided_leak(family_a):
	fam = _with_holes(family_a, {1 / 3.: (1.0, 0.0), 2 / 3.: (0.0, 0.0)})
	lhr = analytic_lhr(fam, PHI_L, PHI_R)
	assert lhr == 0.0
	assert alpha_from_lhr(lhr) == 0.0


def test_symmetric_lhr(family_a):
	fam = _with_holes(family_a, {1 / 3.: (0.5, 0.0), 2 / 3.: (0.0, 0.5)})
	assert analytic_lhr(fam, PHI_L, PHI_R) == pytest.approx(1.0)


def test_no_left_hole(family_a):
	fam = _with_holes(family_a, {2 / 3.: (0.0, 1 / 3.)})
	with pytest.raises(DegeneracyError):
		analytic_lhr(fam, PHI_L, PHI_R)


def test_no_coefficients(family_b):
	with pytest.raises(ModelError):
		analytic_lhr(family_b, PHI_L, PHI_R)


def test_predict_mixture():
	alpha, mix = predict_mixture(1 / 3., PHI_L, PHI_R)
	assert alpha == pytest.approx(0.25)
	assert allclose(mix, indicator(N, 0.0, 0.5, 0.5) + indicator(N, 0.5, 1.0, 1.5))


def test_alpha_limits():
	assert alpha_from_lhr(1.0) == 0.5
	alpha, mix = predict_mixture(float('inf'), PHI_L, PHI_R)
	assert alpha == 1.0
	assert allclose(mix, PHI_L)
	with pytest.raises(DomainError):
		alpha_from_lhr(-1.0)


def test_markov_stationary():
	alpha, rho = markov_stationary(0.01, 0.03)
	assert alpha == pytest.approx(0.75, abs=1e-12)
	assert rho == pytest.approx(0.96, abs=1e-12)
	assert markov_stationary(0.02, 0.02)[0] == 0.5
	assert markov_stationary(0.0, 0.03)[0] == 1.0


def test_markov_errors():
	with pytest.raises(DegeneracyError):
		markov_stationary(0.0, 0.0)
	with pytest.raises(DomainError):
		markov_stationary(-0.1, 0.2)
	with pytest.raises(DomainError):
		markov_stationary(0.6, 0.6)


def test_markov_matrix_rows():
	assert allclose(markov_matrix(0.01, 0.03).sum(axis=1), 1.0)

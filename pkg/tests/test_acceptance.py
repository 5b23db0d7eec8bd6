"""End-to-end checks at full resolution (n = 3840). Run with ``pytest -m slow``."""

import pytest

from metamap.exec_metamap import eps0_simplicity
from metamap.io.builtins import DEFAULT_EPS, DEFAULT_GRID
from metamap.metastability.mixture import markov_stationary
from metamap.metastability.sweep import sweep
from metamap.model.interval_map import Interval
from metamap.model.perturbation import instantiate
from metamap.spectral.dense import dense_second_eigenpair
from metamap.spectral.power import invariant_density, second_eigenpair
from metamap.transfer.density import indicator, integrate, l1_distance
from metamap.transfer.ulam import build_ulam

pytestmark = pytest.mark.slow

EPS = [float(e) for e in DEFAULT_EPS]
N = DEFAULT_GRID
I_L = Interval(0.0, 0.5)
OPTIONS = {'closed_form_reference': 'lebesgue'}


@pytest.fixture(scope='module')
def result_a(family_a):
	return sweep(family_a, EPS, N, OPTIONS)


def test_mixture_convergence(result_a):
	dist = [r.l1_phi_vs_mixture for r in result_a.rows]
	assert all(a > b for a, b in zip(dist[:-1], dist[1:]))
	assert dist[-1] < 0.05
	assert result_a.alpha == pytest.approx(0.25)


def test_second_eigenfunction(result_a):
	row, det = result_a.rows[-1], result_a.details[-1]
	assert row.l1_psi_vs_half_diff < 0.10
	assert abs(integrate(det.psi, 0.0, 1.0)) <= 1e-8
	assert integrate(det.psi, 0.0, 0.5) > 0.0


def test_spectral_gap_closes(result_a, family_a):
	rho = [r.rho for r in result_a.rows]
	assert all(a < b for a, b in zip(rho[:-1], rho[1:]))
	assert 1.0 - rho[-1] < 0.05
	assert all(r.leading_simple for r in result_a.rows)
	assert eps0_simplicity(family_a, N, 1e-10)['leading_simple'] is False


def test_flux_balance(result_a):
	for r in result_a.rows:
		assert r.flux_gap <= r.flux_bound


def test_markov_chain():
	alpha, rho = markov_stationary(0.01, 0.03)
	assert abs(alpha - 0.75) < 1e-12
	assert abs(rho - 0.96) < 1e-12


def test_escape_rate_ratios(result_a):
	row = result_a.rows[EPS.index(0.005)]
	assert 0.85 <= row.escape_ratio_l <= 1.15
	assert 0.85 <= row.escape_ratio_r <= 1.15


def test_boundary_violation_breaks_the_mixture(family_b):
	res = sweep(family_b, [0.01], N, OPTIONS)
	row, det = res.rows[0], res.details[0]
	assert l1_distance(det.phi, indicator(N, 0.5, 1.0, 2.0)) < 0.10
	assert row.l1_phi_vs_mixture > 0.30
	assert abs(row.lhr_emp - 1 / 3.) <= 0.02


def test_jump_decay(result_a):
	det = result_a.details[EPS.index(0.01)]
	assert [d.m for d in det.decay] == [0, 1, 2, 3, 4]
	for d in det.decay:
		assert d.tail <= 1.1 * 3.0 ** -d.m * 72.0
	assert det.saltus.unmatched == 0


def test_uniform_variation_bound(result_a):
	assert all(r.tv_phi <= 72.0 for r in result_a.rows)
	lips = [r.lip_reg for r in result_a.rows]
	assert max(lips) <= 10.0 * min(lips) + 1.0


def test_ulam_refinement(family_a):
	T = instantiate(family_a, 0.01)
	coarse = invariant_density(build_ulam(T, N // 2)).phi
	fine = invariant_density(build_ulam(T, N)).phi
	assert l1_distance(coarse.repeat(2), fine) < 0.02

	P = build_ulam(T, 768)
	phi = invariant_density(P).phi
	rho, psi = second_eigenpair(P, phi, I_L)
	rho_d, psi_d = dense_second_eigenpair(P, I_L)
	assert rho == pytest.approx(rho_d, abs=1e-6)
	assert l1_distance(psi, psi_d) < 1e-4

###########################################################################
# This file is part of metamap, a toolkit for transfer-operator studies   #
# of metastable piecewise expanding maps of the interval.                 #
#                                                                         #
# metamap is free software: you can redistribute it and/or modify it      #
# under the terms of the GNU General Public License as published by the   #
# Free Software Foundation, either version 3 of the License, or (at your  #
# option) any later version.                                              #
#                                                                         #
# metamap is distributed in the hope that it will be useful, but WITHOUT  #
# ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or   #
# FITNESS FOR A PARTICULAR PURPOSE. See the GNU General Public License    #
# for more details.                                                       #
#                                                                         #
# You should have received a copy of the GNU General Public License       #
# along with metamap. If not, see <http://www.gnu.org/licenses/>.         #
#                                                                         #
###########################################################################

#
# Last modified: October, 19th 2026
#

from collections import namedtuple
from logging import getLogger
from math import isnan
from multiprocessing import Pool
from pickle import PicklingError, dumps
from time import time

from numpy import dot, float64, zeros

from metamap.errors import DegeneracyError, DomainError, MetamapError
from metamap.model.interval_map import Interval
from metamap.model.perturbation import instantiate
from metamap.transfer.density import indicator, integrate, l1_distance, sup_norm
from metamap.transfer.ulam import build_ulam
from metamap.transfer.lasota_yorke import lasota_yorke_constants
from metamap.spectral.power import DEFAULT_TOL, invariant_density, second_eigenpair
from metamap.spectral.escape import escape_rate, hole_cell_fractions, restrict, sub_domain_cells
from metamap.bv.postcritical import postcritical_hierarchy
from metamap.bv.saltus import saltus_decompose, total_variation
from metamap.bv.jump_decay import jump_decay_profile
from metamap.metastability.holes import compute_holes, hole_measures, flux_balance
from metamap.metastability.mixture import analytic_lhr, predict_mixture
from metamap.utils.caching import cache2densities, densities2cache, family_key

log = getLogger(__name__)

RATIO_SPREAD = 0.05   # Empirical ratios spreading more than this: no single alpha

NAN = float('nan')

DEFAULT_OPTIONS = {
	'spectral': True,
	'escape': True,
	'saltus': True,
	'depth': 8,
	'saltus_depth': 6,
	'lip_bound': 1.0,
	'decay_m': 4,
	'closed_form_reference': None,
	'tol': DEFAULT_TOL,
}


SweepRow = namedtuple('SweepRow', 'eps lhr_emp alpha_pred l1_phi_vs_mixture l1_psi_vs_half_diff rho flux_gap '
								  'escape_ratio_l escape_ratio_r mass_left tv_phi lip_reg flux_bound '
								  'l1_phi_vs_phi_r mu_l_Hl mu_r_Hr leading_simple failed message')

RowDetail = namedtuple('RowDetail', 'eps phi psi mixture holes saltus decay warnings seconds')

SweepResult = namedtuple('SweepResult', 'rows details lhr alpha abstained ratio_spread phi_l phi_r')


def merged_options(options):
	plan = dict(DEFAULT_OPTIONS)
	if options:
		plan.update(options)
	return plan


def halves(family):
	b = family.boundary_b
	return Interval(0.0, b), Interval(b, 1.0)


def reference_densities(family, n, closed_form=None, tol=DEFAULT_TOL, cachepath=None):
	"""Invariant densities phi_l, phi_r of the two halves at eps = 0.

	Parameters
	----------
	family : PerturbationFamily
		The family; its base map must leave both halves invariant.
	n : int
		Grid size.
	closed_form : string, optional
		'lebesgue' when the halves are full-branch affine Markov maps: the
		densities are then Lebesgue restricted and normalized. Otherwise the
		Ulam matrix of T_0 is restricted to each half and solved.
	cachepath : string, optional
		Folder caching the computed densities between runs.

	"""
	I_l, I_r = halves(family)
	b = family.boundary_b
	if closed_form == 'lebesgue':
		return indicator(n, 0.0, b, 1.0 / b), indicator(n, b, 1.0, 1.0 / (1.0 - b))
	if closed_form is not None:
		raise DomainError("unknown closed-form reference %r" % closed_form)

	key = family_key(family)
	if cachepath is not None:
		cached = cache2densities(key, n, cachepath)
		if cached is not None:
			log.debug("reference densities of %s read from cache" % family.name)
			return cached

	P0 = build_ulam(family.base, n)
	out = []
	for half in (I_l, I_r):
		cells = sub_domain_cells(n, half)
		closed = restrict(P0, cells)
		phi = zeros(n, dtype=float64)
		phi[cells] = invariant_density(closed, tol).phi * (float(n) / len(cells))
		out.append(phi)

	if cachepath is not None:
		densities2cache(out[0], out[1], key, cachepath)
	return out[0], out[1]


def empirical_ratios(family, eps_list, phi_l, phi_r):
	"""Hole ratio mu_r(H_r) / mu_l(H_l) for every eps (nan where undefined)."""
	out = []
	for eps in eps_list:
		try:
			rep = hole_measures(compute_holes(instantiate(family, eps), family.boundary_b), phi_l, phi_r)
			out.append(rep.ratio)
		except MetamapError as e:
			log.warning("eps = %g: no hole ratio (%s)" % (eps, e))
			out.append(NAN)
	return out


def _sweep_row(args):
	"""Full pipeline for one eps. Returns (SweepRow, RowDetail)."""
	family, eps, n, alpha, phi_l, phi_r, P0, plan = args
	t0 = time()
	b = family.boundary_b
	I_l, I_r = halves(family)
	tol = plan['tol']

	v = dict((f, NAN) for f in SweepRow._fields)
	v.update(eps=eps, alpha_pred=alpha, leading_simple=False, failed=False, message='')
	phi = psi = mixture = holes = dec = decay = None
	warnings = []

	try:
		teps = instantiate(family, eps)
		P = build_ulam(teps, n)
		fixed = invariant_density(P, tol, split=b)
		phi = fixed.phi
		v['leading_simple'] = fixed.leading_simple
		v['mass_left'] = integrate(phi, 0.0, b)
		v['tv_phi'] = total_variation(phi)
		v['l1_phi_vs_phi_r'] = l1_distance(phi, phi_r)
		v['flux_bound'] = 2.0 * sup_norm(phi) / n

		if not isnan(alpha):
			mixture = alpha * phi_l + (1.0 - alpha) * phi_r
			v['l1_phi_vs_mixture'] = l1_distance(phi, mixture)

		holes = hole_measures(compute_holes(teps, b), phi_l, phi_r)
		v['lhr_emp'] = holes.ratio
		v['mu_l_Hl'] = holes.mu_l_Hl
		v['mu_r_Hr'] = holes.mu_r_Hr
		v['flux_gap'] = flux_balance(phi, holes)

		if plan['spectral']:
			if not fixed.leading_simple:
				raise DegeneracyError("leading eigenvalue not simple at eps = %g" % eps)
			rho, psi = second_eigenpair(P, phi, I_l, tol)
			v['rho'] = rho
			v['l1_psi_vs_half_diff'] = l1_distance(psi, 0.5 * phi_l - 0.5 * phi_r)
			if dot(psi, phi_l - phi_r) <= 0.0:
				warnings.append("psi is not aligned with phi_l - phi_r")

		if plan['escape']:
			for side, H, half, ref in (('l', holes.H_l, I_l, phi_l), ('r', holes.H_r, I_r, phi_r)):
				cells, frac = hole_cell_fractions([(iv.lo, iv.hi) for iv in H], n)
				rep = escape_rate(P0, cells, half, frac, ref, tol)
				v['escape_ratio_' + side] = rep.ratio

		if plan['saltus']:
			hier = postcritical_hierarchy(teps, plan['saltus_depth'])
			dec = saltus_decompose(phi, hier, plan['lip_bound'])
			v['lip_reg'] = dec.lipschitz_estimate
			if dec.unmatched:
				warnings.append("%d jumps match no postcritical point up to depth %d"
								% (dec.unmatched, plan['saltus_depth']))
			try:
				ly = lasota_yorke_constants(teps, base_map=family.base)
				decay = jump_decay_profile(dec, hier, ly, plan['decay_m'])
			except MetamapError as e:
				warnings.append("jump decay skipped: %s" % e)

	except MetamapError as e:
		v['failed'] = True
		v['message'] = "%s: %s" % (e.__class__.__name__, e)
		log.error("eps = %g: row failed (%s)" % (eps, v['message']))

	for line in warnings:
		log.warning("eps = %g: %s" % (eps, line))
	if holes is not None:
		warnings = holes.warnings + warnings

	row = SweepRow(**v)
	return row, RowDetail(eps, phi, psi, mixture, holes, dec, decay, warnings, time() - t0)


def _picklable(obj):
	try:
		dumps(obj)
	except (PicklingError, AttributeError, TypeError):
		return False
	return True


def sweep(family, eps_list, n, options=None, jobs=1, reference=None, cachepath=None):
	"""Convergence study of a family along a decreasing sequence of eps.

	Parameters
	----------
	family : PerturbationFamily
		The family under study.
	eps_list : list of double
		Strictly decreasing positive perturbation sizes.
	n : int
		Grid size of every Ulam matrix.
	options : dict, optional
		Overrides of DEFAULT_OPTIONS.
	jobs : int
		Number of worker processes; rows come back in eps_list order.
		Families that cannot be pickled, such as ones with smooth branches
		built from lambdas, are swept serially.
	reference : (phi_l, phi_r), optional
		Reference densities at eps = 0, computed when None.

	Returns
	-------
	A SweepResult. alpha is taken from the analytic hole ratio when the family
	declares hole coefficients, otherwise from the empirical ratio at the
	smallest eps; it is nan (abstained) when those empirical ratios spread
	by more than RATIO_SPREAD.

	"""
	eps_list = [float(e) for e in eps_list]
	for k, e in enumerate(eps_list):
		if not e > 0.0:
			raise DomainError("eps values must be positive, got %r" % e)
		if k > 0 and not e < eps_list[k - 1]:
			raise DomainError("eps values must be strictly decreasing (%r after %r)" % (e, eps_list[k - 1]))

	plan = merged_options(options)
	if reference is None:
		reference = reference_densities(family, n, plan['closed_form_reference'], plan['tol'], cachepath)
	phi_l, phi_r = reference

	if not eps_list:
		return SweepResult([], [], NAN, NAN, False, NAN, phi_l, phi_r)

	ratios = empirical_ratios(family, eps_list, phi_l, phi_r)
	finite = [r for r in ratios if not isnan(r)]
	spread = (max(finite) - min(finite)) if finite else NAN
	abstained = False
	if family.hole_coefficients:
		lhr = analytic_lhr(family, phi_l, phi_r)
	else:
		lhr = ratios[-1]
		if isnan(spread) or spread > RATIO_SPREAD:
			abstained = True
			log.warning("empirical hole ratios spread by %.3g: no single alpha is reported" % spread)
	if abstained or isnan(lhr):
		alpha = NAN
	else:
		alpha = predict_mixture(lhr, phi_l, phi_r)[0]

	P0 = build_ulam(family.base, n) if plan['escape'] else None
	args = [(family, e, n, alpha, phi_l, phi_r, P0, plan) for e in eps_list]
	if jobs > 1 and len(args) > 1 and not _picklable(args[0]):
		log.warning("%s cannot be sent to worker processes (smooth branches); sweeping serially" % family.name)
		jobs = 1
	if jobs > 1 and len(args) > 1:
		pool = Pool(processes=min(jobs, len(args)))
		try:
			results = pool.map(_sweep_row, args)
		finally:
			pool.close()
			pool.join()
	else:
		results = [_sweep_row(a) for a in args]

	rows = [r for r, _ in results]
	details = [d for _, d in results]
	return SweepResult(rows, details, lhr, alpha, abstained, spread, phi_l, phi_r)


def convergence_study(family, eps_list, n, options=None, jobs=1):
	"""The SweepRow table of sweep()."""
	return sweep(family, eps_list, n, options, jobs).rows

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
from math import log as ln

from numpy import dot, float64, zeros
from numpy.random import RandomState

from metamap.errors import DegeneracyError, DomainError, SolverError, UnsupportedRegimeError
from metamap.transfer.density import (cell_fractions, l1_distance, l1_norm, mass, integrate,
									  normalize_mass)
from metamap.transfer.ulam import apply_transfer, transfer_power
from metamap.spectral.dense import DENSE_CAP, dense_second_eigenpair

log = getLogger(__name__)

DEFAULT_TOL = 1e-10
SIMPLE_FACTOR = 10.0     # Independent-start limits further apart than this * tol: not simple
SEED = 0x5EED
OSC_WINDOW = 50          # Iterations inspected for sign oscillation
ROUNDING_FLOOR = 1e-14   # Step size treated as converged regardless of the rate
MIN_ITER = 10000         # Floor of the default iteration cap


FixedDensity = namedtuple('FixedDensity', 'phi leading_simple other residual iterations')

SpectralReport = namedtuple('SpectralReport', 'phi rho psi leading_simple residuals')


def default_max_iter(n):
	return max(int(10 * n * max(ln(n), 1.0)), MIN_ITER)


def converged_step(step, prev, tol):
	"""Error estimate step / (1 - r) of a linearly converging iteration against tol."""
	if step <= max(ROUNDING_FLOOR, 1e-4 * tol):
		return True
	if prev is None or prev == 0.0:
		return False
	r = min(step / prev, 0.9999)
	return step / (1.0 - r) < tol


def _fixed_point(P, d, tol, max_iter):
	prev = None
	for it in range(1, max_iter + 1):
		d1 = normalize_mass(apply_transfer(P, d))
		step = l1_distance(d1, d)
		d = d1
		if converged_step(step, prev, tol):
			return d, it
		prev = step
	res = l1_distance(apply_transfer(P, d), d)
	raise SolverError("power iteration did not converge in %d steps (residual %.3g)" % (max_iter, res), res)


def invariant_density(P, tol=DEFAULT_TOL, split=None, max_iter=None):
	"""Leading fixed density of the transfer operator, with a simplicity check.

	Parameters
	----------
	P : UlamMatrix
		Row-stochastic discretized operator.
	tol : double
		Target L1 accuracy of the fixed density.
	split : double, optional
		The second start is the indicator of [0, split], rescaled to mass 1.
		Defaults to the first half of the cells.
	max_iter : int, optional
		Iteration cap, 10 n log n by default.

	Returns
	-------
	A FixedDensity: phi from the uniform start, leading_simple, the second
	limit in other (None when simple), the residual |L phi - phi|_1 and the
	number of iterations of the main run.

	"""
	n = P.n
	if max_iter is None:
		max_iter = default_max_iter(n)

	phi, its = _fixed_point(P, zeros(n, dtype=float64) + 1.0, tol, max_iter)

	if split is None:
		start = zeros(n, dtype=float64)
		start[:max(n // 2, 1)] = 1.0
	else:
		start = cell_fractions([(0.0, split)], n)
	if mass(start) == 0.0:
		raise DomainError("split %r leaves an empty second start" % (split,))
	alt, _ = _fixed_point(P, normalize_mass(start), tol, max_iter)

	gap = l1_distance(phi, alt)
	simple = gap <= SIMPLE_FACTOR * tol
	residual = l1_distance(apply_transfer(P, phi), phi)
	if not simple:
		log.info("leading eigenvalue not simple: independent starts differ by %.3g in L1" % gap)
	return FixedDensity(phi, simple, None if simple else alt, residual, its)


def project_mean_zero(v):
	"""Remove the constant component: v - mean(v). Constants map to zero."""
	return v - v.mean()


def _seeded_start(n):
	return project_mean_zero(RandomState(SEED).standard_normal(n))


def second_eigenpair(P, phi, I_l, tol=DEFAULT_TOL, max_iter=None):
	"""Second eigenvalue rho and eigenvector psi of the transfer operator.

	Power iteration on the mean-zero subspace, which the operator leaves
	invariant; the constant component is projected out at every step to
	remove rounding drift. Iterates that keep flipping sign (a dominant
	negative or complex pair) switch to the dense eigensolve.

	Parameters
	----------
	P : UlamMatrix
		The discretized operator, with a simple leading eigenvalue.
	phi : ndarray
		Its invariant density, on the grid of P.
	I_l : Interval
		Left half, fixing the sign: the integral of psi over I_l is positive.
	tol : double
		L1 accuracy target of psi.
	max_iter : int, optional
		Iteration cap, 10 n log n by default.

	Returns
	-------
	(rho, psi) with psi of mean zero and L1 norm 1.

	"""
	n = P.n
	if phi.shape != (n,):
		raise DomainError("density of shape %r does not match matrix dimension %d" % (phi.shape, n))
	if max_iter is None:
		max_iter = default_max_iter(n)

	v = project_mean_zero(cell_fractions([(I_l.lo, I_l.hi)], n))
	if l1_norm(v) <= 1e-12:
		v = _seeded_start(n)
	v = v / l1_norm(v)

	prev = None
	signs = []
	converged = False
	for it in range(1, max_iter + 1):
		w = project_mean_zero(apply_transfer(P, v))
		nrm = l1_norm(w)
		if nrm <= 1e-300:
			log.debug("iterate annihilated, restarting from seeded noise")
			v = _seeded_start(n)
			v = v / l1_norm(v)
			prev = None
			continue
		w = w / nrm
		corr = dot(w, v)
		signs.append(corr < 0.0)
		if len(signs) >= OSC_WINDOW and sum(signs[-OSC_WINDOW:]) > OSC_WINDOW // 2:
			log.info("second eigenpair: oscillating iterates after %d steps" % it)
			break
		step = l1_distance(w, v)
		v = w
		if converged_step(step, prev, tol):
			converged = True
			break
		prev = step

	if not converged:
		if n > DENSE_CAP:
			raise UnsupportedRegimeError("second eigenpair did not settle and n = %d exceeds the "
										 "dense fallback cap %d" % (n, DENSE_CAP))
		log.info("second eigenpair: dense fallback at n = %d" % n)
		rho, psi = dense_second_eigenpair(P, I_l)
	else:
		w = apply_transfer(P, v)
		rho = float(dot(w, v) / dot(v, v))
		psi = project_mean_zero(v)
		psi = psi / l1_norm(psi)
		if integrate(psi, I_l.lo, I_l.hi) < 0.0:
			psi = -psi

	if not rho > 0.0:
		raise DegeneracyError("second eigenvalue %r is not positive" % rho)
	return rho, psi


def spectral_report(P, I_l, tol=DEFAULT_TOL, split=None):
	"""Leading density and second eigenpair bundled with their residuals.

	When the leading eigenvalue is not simple rho and psi are None.
	"""
	fixed = invariant_density(P, tol, split=split)
	if not fixed.leading_simple:
		return SpectralReport(fixed.phi, None, None, False, (fixed.residual, None))
	rho, psi = second_eigenpair(P, fixed.phi, I_l, tol)
	res_psi = l1_norm(apply_transfer(P, psi) - rho * psi)
	return SpectralReport(fixed.phi, rho, psi, True, (fixed.residual, res_psi))


def relaxation_alignment(P, f, phi, psi, k):
	"""L1 distance between the normalized deviation L^k f - (mass f) phi and +-psi.

	Small values show that the slow relaxation towards phi happens along psi.
	"""
	g = transfer_power(P, f, k) - mass(f) * phi
	nrm = l1_norm(g)
	if nrm == 0.0:
		return 0.0
	g = g / nrm
	return min(l1_distance(g, psi), l1_distance(g, -psi))

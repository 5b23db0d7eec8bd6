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

from numpy import asarray, float64, nonzero, zeros
from scipy.sparse import diags, issparse

from metamap.errors import DegeneracyError, DomainError, SolverError
from metamap.transfer.density import cell_centers, cell_fractions
from metamap.transfer.ulam import UlamMatrix
from metamap.spectral.power import DEFAULT_TOL, default_max_iter, invariant_density, converged_step

log = getLogger(__name__)


EscapeReport = namedtuple('EscapeReport', 'rate hole_measure ratio open_eigenvalue')


def hole_cell_fractions(intervals, n):
	"""Cells met by a union of hole intervals and the covered fraction of each.

	Returns
	-------
	(cells, fractions): the indices of the partially or fully covered cells and
	the length-n array of covered fractions.

	"""
	frac = cell_fractions(intervals, n)
	return nonzero(frac > 0.0)[0], frac


def sub_domain_cells(n, sub_domain):
	"""Indices of the cells whose centre lies in sub_domain."""
	x = cell_centers(n)
	return nonzero((x >= sub_domain.lo) & (x <= sub_domain.hi))[0]


def restrict(P, cells):
	"""Rows and columns of P on the given cells, as a new UlamMatrix."""
	if issparse(P.matrix):
		mat = P.matrix[cells, :][:, cells]
	else:
		mat = P.matrix[cells][:, cells]
	return UlamMatrix(len(cells), mat)


def escape_rate(P, hole_cells, sub_domain, fractions=None, phi=None, tol=DEFAULT_TOL, max_iter=None):
	"""Exponential escape rate of Lebesgue measure from an open system.

	Parameters
	----------
	P : UlamMatrix
		Operator of the closed system; sub_domain must be invariant under it.
	hole_cells : array_like of int
		Cells forming the hole (subset of the sub_domain cells).
	sub_domain : Interval
		The invariant half the orbits live in.
	fractions : ndarray, optional
		Covered fraction of every one of the n cells. Mass entering a cell is
		killed in proportion to its fraction (fraction 1 zeroes the column).
		When None the hole cells are fully covered.
	phi : ndarray, optional
		Invariant probability density of the closed system on sub_domain, as a
		length-n grid vanishing outside it. Computed from P if None.

	Returns
	-------
	EscapeReport with rate = -log of the leading eigenvalue of the open
	operator, the hole measure under the closed invariant measure of the
	sub_domain and their ratio.

	"""
	n = P.n
	cells = sub_domain_cells(n, sub_domain)
	if len(cells) == 0:
		raise DomainError("sub-domain [%r, %r] contains no cell" % (sub_domain.lo, sub_domain.hi))

	if fractions is None:
		fractions = zeros(n, dtype=float64)
		fractions[asarray(hole_cells, dtype=int)] = 1.0
	else:
		fractions = asarray(fractions, dtype=float64).copy()
		mask = zeros(n, dtype=bool)
		mask[asarray(hole_cells, dtype=int)] = True
		fractions[~mask] = 0.0

	keep = 1.0 - fractions[cells]
	if not (fractions[cells] > 0.0).any():
		return EscapeReport(0.0, 0.0, float('nan'), 1.0)
	if not (keep > 0.0).any():
		raise DegeneracyError("the hole covers the whole sub-domain: escape rate undefined")

	closed = restrict(P, cells)
	m = len(cells)
	if phi is None:
		phi = zeros(n, dtype=float64)
		phi[cells] = invariant_density(closed, tol).phi * (float(n) / m)
	hole_measure = float((asarray(phi, dtype=float64) * fractions).sum()) / n

	if issparse(closed.matrix):
		opened = closed.matrix.dot(diags(keep))
	else:
		opened = closed.matrix * keep[None, :]

	if max_iter is None:
		max_iter = default_max_iter(m)
	v = zeros(m, dtype=float64) + 1.0
	lam = 1.0
	prev = None
	for it in range(1, max_iter + 1):
		w = asarray(opened.T.dot(v), dtype=float64).ravel()
		s = w.sum()
		if s <= 0.0:
			raise DegeneracyError("all mass escapes in one step")
		lam_new = s / v.sum()
		w = w / s * m
		step = abs(lam_new - lam)
		v = w
		lam = lam_new
		if converged_step(step, prev, tol):
			break
		prev = step
	else:
		raise SolverError("open-system power iteration did not converge in %d steps" % max_iter, step)

	rate = -ln(lam)
	ratio = hole_measure / rate if rate > 0.0 else float('nan')
	log.debug("escape from [%r, %r]: lambda_open = %.15g, rate = %.6g, hole measure = %.6g"
			  % (sub_domain.lo, sub_domain.hi, lam, rate, hole_measure))
	return EscapeReport(rate, hole_measure, ratio, lam)

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

from numpy import (abs as npabs, arange, asarray, ceil, clip, concatenate, diff, float64, floor, int64,
				   zeros, add, sort, array)
from scipy.sparse import coo_matrix, issparse

from metamap.errors import DomainError, ModelError
from metamap.model.interval_map import branch_value, branch_image, branch_preimage

log = getLogger(__name__)

IMAGE_TOL = 1e-12    # Allowed excursion of a branch image outside [0,1]
MERGE_TOL = 1e-14    # Breakpoints closer than this are merged
DENSE_BELOW = 512    # Dense storage for n below this size


UlamMatrix = namedtuple('UlamMatrix', 'n matrix')


def _branch_breakpoints(br, index, n):
	"""Sorted points of the branch domain between which source and target cells are fixed."""
	img = branch_image(br)
	if (img.lo < -IMAGE_TOL) or (img.hi > 1.0 + IMAGE_TOL):
		raise ModelError("branch %d image [%r, %r] escapes [0,1]" % (index, img.lo, img.hi))

	k0 = int(floor(br.lo * n)) + 1
	k1 = int(ceil(br.hi * n))
	cells = arange(k0, k1, dtype=float64) / n

	j0 = int(floor(img.lo * n)) + 1
	j1 = int(ceil(img.hi * n))
	targets = arange(j0, j1, dtype=float64) / n
	if br.kind == 'affine':
		pre = (targets - br.intercept) / br.slope
	else:
		pre = array([branch_preimage(br, y, index) for y in targets], dtype=float64)

	x = sort(concatenate(([br.lo, br.hi], cells, pre)))
	x = x[(x >= br.lo) & (x <= br.hi)]
	keep = concatenate(([True], diff(x) > MERGE_TOL))
	x = x[keep]
	x[0] = br.lo
	if len(x) < 2:
		return asarray([br.lo, br.hi])
	x[-1] = br.hi
	return x


def build_ulam(pmap, n):
	"""Ulam discretization of the transfer operator of a map.

	Parameters
	----------
	pmap : PiecewiseMap
		The map. Its images must stay within [0,1].
	n : int
		Number of uniform cells, at least 1.

	Returns
	-------
	An UlamMatrix with P[i][j] = Leb(A_i and T^{-1} A_j) / Leb(A_i). Each branch
	domain is cut at cell boundaries and at the preimages of cell boundaries;
	every piece then lies in one source cell and maps into one target cell.

	"""
	n = int(n)
	if n < 1:
		raise DomainError("grid n = %d must be positive" % n)

	rows = []
	cols = []
	vals = []
	for i, br in enumerate(pmap.branches):
		x = _branch_breakpoints(br, i, n)
		mid = 0.5 * (x[1:] + x[:-1])
		src = clip(floor(mid * n), 0, n - 1).astype(int64)
		tgt = clip(floor(asarray(branch_value(br, mid), dtype=float64) * n), 0, n - 1).astype(int64)
		rows.append(src)
		cols.append(tgt)
		vals.append(diff(x) * n)

	rows = concatenate(rows)
	cols = concatenate(cols)
	vals = concatenate(vals)

	if n < DENSE_BELOW:
		mat = zeros((n, n), dtype=float64)
		add.at(mat, (rows, cols), vals)
	else:
		mat = coo_matrix((vals, (rows, cols)), shape=(n, n)).tocsr()
		mat.sum_duplicates()

	P = UlamMatrix(n, mat)
	defect = ulam_row_sum_defect(P)
	log.debug("Ulam matrix n = %d, %d pieces, row-sum defect %.3g" % (n, len(vals), defect))
	return P


def from_dense(mat):
	"""Wrap a row-stochastic array (e.g. a Markov chain) as an UlamMatrix."""
	mat = asarray(mat, dtype=float64)
	if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
		raise DomainError("a transition matrix must be square, got shape %r" % (mat.shape,))
	return UlamMatrix(mat.shape[0], mat)


def row_sums(P):
	return asarray(P.matrix.sum(axis=1), dtype=float64).ravel()


def ulam_row_sum_defect(P):
	"""max_i |sum_j P[i][j] - 1|."""
	return float(npabs(row_sums(P) - 1.0).max())


def dense(P):
	if issparse(P.matrix):
		return P.matrix.toarray()
	return P.matrix


def apply_transfer(P, d):
	"""Push a density forward: (L d)_j = sum_i d_i P[i][j]."""
	d = asarray(d, dtype=float64)
	if d.shape != (P.n,):
		raise DomainError("density of shape %r does not match matrix dimension %d" % (d.shape, P.n))
	return asarray(P.matrix.T.dot(d), dtype=float64).ravel()


def transfer_power(P, d, k):
	"""k-fold application of the transfer operator."""
	for _ in range(int(k)):
		d = apply_transfer(P, d)
	return d


def cesaro_density(P, n_terms):
	"""Cesaro average (1/N) sum_{k<N} L^k 1 of the transfer operator iterates.

	Parameters
	----------
	P : UlamMatrix
		The discretized operator.
	n_terms : int
		Number of terms N >= 1.

	"""
	if n_terms < 1:
		raise DomainError("n_terms must be >= 1, got %r" % n_terms)
	f = zeros(P.n, dtype=float64) + 1.0
	acc = zeros(P.n, dtype=float64)
	for _ in range(int(n_terms)):
		acc += f
		f = apply_transfer(P, f)
	return acc / n_terms


def to_triplets(P):
	"""Row, column and value arrays of the nonzero entries, in row-major order."""
	coo = coo_matrix(P.matrix)
	order = (coo.row.astype(int64) * P.n + coo.col).argsort(kind='mergesort')
	keep = coo.data[order] != 0.0
	return coo.row[order][keep], coo.col[order][keep], coo.data[order][keep]

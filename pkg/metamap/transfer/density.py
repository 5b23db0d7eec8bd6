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

"""Piecewise-constant densities on the uniform n-cell partition of [0,1].

A density grid is a float64 numpy array of length n holding cell averages;
the cell width 1/n is implicit.
"""

from numpy import (abs as npabs, arange, asarray, ceil, clip, floor, float64, maximum, minimum,
				   ones, zeros)

from metamap.errors import DomainError


def as_grid(values):
	d = asarray(values, dtype=float64)
	if d.ndim != 1 or d.size < 1:
		raise DomainError("a density grid is a non-empty 1-D array, got shape %r" % (d.shape,))
	return d


def uniform(n):
	"""Lebesgue density on n cells."""
	return ones(n, dtype=float64)


def cell_edges(n):
	return arange(n + 1, dtype=float64) / n


def cell_centers(n):
	return (arange(n, dtype=float64) + 0.5) / n


def cell_of(x, n):
	"""Index of the cell containing x (the last cell for x = 1)."""
	return int(min(max(floor(x * n), 0), n - 1))


def mass(d):
	"""Integral of the grid density over [0,1]."""
	return float(d.sum()) / d.size


def l1_norm(d):
	return float(npabs(d).sum()) / d.size


def l1_distance(d1, d2):
	if d1.size != d2.size:
		raise DomainError("grids of different size (%d vs %d)" % (d1.size, d2.size))
	return l1_norm(d1 - d2)


def sup_norm(d):
	return float(npabs(d).max())


def normalize_mass(d):
	m = mass(d)
	if m == 0.0:
		raise DomainError("cannot normalize a density of zero mass")
	return d / m


def cell_fractions(intervals, n):
	"""Fraction of every cell covered by a union of disjoint intervals.

	Parameters
	----------
	intervals : list of (lo, hi)
		Disjoint subintervals of [0,1].
	n : int
		Number of cells.

	Returns
	-------
	An array of n overlap fractions in [0,1], exact up to rounding.

	"""
	frac = zeros(n, dtype=float64)
	for lo, hi in intervals:
		if hi <= lo:
			continue
		k0 = int(max(floor(lo * n), 0))
		k1 = int(min(ceil(hi * n), n))
		ks = arange(k0, k1)
		left = maximum(ks / float(n), lo)
		right = minimum((ks + 1) / float(n), hi)
		frac[k0:k1] += clip(right - left, 0.0, None) * n
	return clip(frac, 0.0, 1.0)


def integrate(d, lo, hi):
	"""Integral of the grid density over [lo, hi] with exact partial cells."""
	return integrate_intervals(d, [(lo, hi)])


def integrate_intervals(d, intervals):
	frac = cell_fractions(intervals, d.size)
	return float((d * frac).sum()) / d.size


def indicator(n, lo, hi, height=1.0):
	"""Cell averages of height * 1_[lo,hi]."""
	return height * cell_fractions([(lo, hi)], n)


def point_value(d, x, lo=0.0, hi=1.0):
	"""Value of the density near x: the containing cell averaged with its neighbours.

	Only cells lying inside [lo, hi] take part, so that values next to the
	boundary of a half are not mixed with the other half.
	"""
	n = d.size
	k = cell_of(x, n)
	a = max(k - 1, 0, int(ceil(lo * n - 1e-9)))
	b = min(k + 2, n, int(floor(hi * n + 1e-9)))
	if b <= a:
		a, b = k, k + 1
	return float(d[a:b].mean())

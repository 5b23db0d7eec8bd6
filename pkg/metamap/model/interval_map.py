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

from numpy import abs as npabs, amin, amax, asarray, finfo, linspace, sign, isfinite
from scipy.optimize import brentq

from metamap.errors import DomainError, ModelError, NumericalError

log = getLogger(__name__)

ENDPOINT_TOL = 1e-12 # Endpoint comparisons between branch domains
ROOT_TOL = 1e-13     # Absolute tolerance of the preimage bracketing
ROOT_RTOL = 4 * finfo(float).eps  # Smallest relative tolerance brentq accepts
SAMPLES = 2049       # Dense sampling of smooth branches (refined once)


Interval = namedtuple('Interval', 'lo hi')

# kind is 'affine' (slope, intercept) or 'smooth' (func, dfunc, d2func):
Branch = namedtuple('Branch', 'lo hi kind slope intercept func dfunc d2func')

PiecewiseMap = namedtuple('PiecewiseMap', 'branches critical_set')


def make_interval(lo, hi):
	"""Return a validated subinterval [lo, hi] of [0,1].

	Parameters
	----------
	lo, hi : double
		Endpoints, with 0 <= lo <= hi <= 1 (up to ENDPOINT_TOL).

	"""
	lo = float(lo)
	hi = float(hi)
	if (lo > hi) or (lo < -ENDPOINT_TOL) or (hi > 1.0 + ENDPOINT_TOL):
		raise DomainError("[%r, %r] is not a subinterval of [0,1]" % (lo, hi))
	return Interval(max(lo, 0.0), min(hi, 1.0))


def affine_branch(lo, hi, slope, intercept):
	"""Branch x -> slope * x + intercept on [lo, hi]."""
	return Branch(float(lo), float(hi), 'affine', float(slope), float(intercept), None, None, None)


def smooth_branch(lo, hi, func, dfunc, d2func):
	"""Branch given by a C2 function with user supplied first and second derivatives."""
	return Branch(float(lo), float(hi), 'smooth', None, None, func, dfunc, d2func)


def branch_value(br, x):
	if br.kind == 'affine':
		return br.slope * x + br.intercept
	return br.func(x)


def branch_derivative(br, x):
	if br.kind == 'affine':
		return br.slope + 0.0 * asarray(x)
	return br.dfunc(x)


def branch_second_derivative(br, x):
	if br.kind == 'affine':
		return 0.0 * asarray(x)
	return br.d2func(x)


def branch_orientation(br):
	"""Return +1 for increasing and -1 for decreasing branches."""
	if br.kind == 'affine':
		return int(sign(br.slope))
	return int(sign(br.dfunc(0.5 * (br.lo + br.hi))))


def branch_image(br):
	"""Closed image [min, max] of a monotone branch."""
	a = float(branch_value(br, br.lo))
	b = float(branch_value(br, br.hi))
	return Interval(min(a, b), max(a, b))


def _branch_samples(br, num=SAMPLES):
	return linspace(br.lo, br.hi, num)


def make_map(branches):
	"""Assemble and validate a piecewise map from its ordered branches.

	Parameters
	----------
	branches : list of Branch
		Branches ordered from left to right. Their domains must tile [0,1],
		consecutive domains sharing exactly one endpoint.

	Returns
	-------
	A PiecewiseMap whose critical set is the set of all branch endpoints.

	"""
	branches = tuple(branches)
	if len(branches) < 1:
		raise ModelError("a map needs at least one branch")

	problems = []
	if abs(branches[0].lo) > ENDPOINT_TOL:
		problems.append("branch 0 starts at %r instead of 0" % branches[0].lo)
	if abs(branches[-1].hi - 1.0) > ENDPOINT_TOL:
		problems.append("branch %d ends at %r instead of 1" % (len(branches) - 1, branches[-1].hi))
	for i, br in enumerate(branches):
		if not (br.hi > br.lo):
			problems.append("branch %d has empty domain [%r, %r]" % (i, br.lo, br.hi))
		if i > 0 and abs(br.lo - branches[i - 1].hi) > ENDPOINT_TOL:
			problems.append("branches %d and %d do not share an endpoint (%r vs %r)"
							% (i - 1, i, branches[i - 1].hi, br.lo))
	if problems:
		raise ModelError("; ".join(problems))

	for i, br in enumerate(branches):
		img = branch_image(br)
		if (img.lo < -ENDPOINT_TOL) or (img.hi > 1.0 + ENDPOINT_TOL):
			raise ModelError("branch %d image [%r, %r] escapes [0,1]" % (i, img.lo, img.hi))
		if br.kind == 'affine':
			if abs(br.slope) <= 1.0:
				raise ModelError("branch %d has slope %r, not expanding" % (i, br.slope))
		else:
			der = asarray(br.dfunc(_branch_samples(br)), dtype=float)
			if not isfinite(der).all():
				raise ModelError("branch %d derivative is not finite on its domain" % i)
			if (amin(der) > 0) == (amax(der) < 0):
				raise ModelError("branch %d is not strictly monotone" % i)
			if amin(npabs(der)) <= 1.0:
				raise ModelError("branch %d is not expanding (min |T'| = %r)" % (i, amin(npabs(der))))

	# Snap shared endpoints so that the critical set is exact:
	snapped = []
	for i, br in enumerate(branches):
		lo = 0.0 if i == 0 else snapped[i - 1].hi
		hi = 1.0 if i == len(branches) - 1 else br.hi
		snapped.append(br._replace(lo=lo, hi=hi))
	critical = tuple([b.lo for b in snapped] + [1.0])

	return PiecewiseMap(tuple(snapped), critical)


def critical_index(pmap, x, tol=ENDPOINT_TOL):
	"""Index of the critical point within tol of x, or -1."""
	for k, c in enumerate(pmap.critical_set):
		if abs(x - c) <= tol:
			return k
	return -1


def evaluate_branches(pmap, x):
	"""One-sided branch values at x, with the index of the branch providing each.

	Parameters
	----------
	pmap : PiecewiseMap
		The map.
	x : double
		A point of [0,1].

	Returns
	-------
	A list of (value, branch index). Interior points give one entry, shared
	critical points give the left and right limits (in this order).

	"""
	x = float(x)
	if (x < -ENDPOINT_TOL) or (x > 1.0 + ENDPOINT_TOL):
		raise DomainError("x = %r is outside [0,1]" % x)

	k = critical_index(pmap, x)
	if k >= 0:
		c = pmap.critical_set[k]
		out = []
		if k > 0:
			out.append((float(branch_value(pmap.branches[k - 1], c)), k - 1))
		if k < len(pmap.branches):
			out.append((float(branch_value(pmap.branches[k], c)), k))
		return out

	for i, br in enumerate(pmap.branches):
		if br.lo < x < br.hi:
			return [(float(branch_value(br, x)), i)]

	raise DomainError("x = %r is not covered by any branch" % x)


def evaluate(pmap, x):
	"""Evaluate the (bi-valued) map at x.

	Returns
	-------
	A sorted tuple with one value at interior points and the distinct one-sided
	limits {T(c-), T(c+)} at critical points.

	"""
	vals = []
	for v, _ in evaluate_branches(pmap, x):
		if not any(abs(v - w) <= ENDPOINT_TOL for w in vals):
			vals.append(v)
	return tuple(sorted(vals))


def min_expansion(pmap):
	"""Minimum expansion inf |T'| over all branches.

	Affine branches contribute |slope| exactly. For smooth branches |T'| is
	sampled densely; since the branch is monotone and C2 the sampled minimum is
	refined by a local bracket search around the smallest sample.

	"""
	lam = float('inf')
	for br in pmap.branches:
		if br.kind == 'affine':
			lam = min(lam, abs(br.slope))
			continue
		x = _branch_samples(br)
		der = npabs(asarray(br.dfunc(x), dtype=float))
		k = int(der.argmin())
		lo = x[max(k - 1, 0)]
		hi = x[min(k + 1, len(x) - 1)]
		fine = linspace(lo, hi, SAMPLES)
		lam = min(lam, float(amin(der)), float(amin(npabs(asarray(br.dfunc(fine), dtype=float)))))
	return lam


def distortion(pmap):
	"""Distortion sup |T''| / |T'| over all branches (0 for affine maps).

	The supremum over smooth branches is estimated on a dense grid that is
	doubled until the estimate changes by less than 1e-9 (relative).

	"""
	dist = 0.0
	for br in pmap.branches:
		if br.kind == 'affine':
			continue
		num = SAMPLES
		prev = -1.0
		while True:
			x = _branch_samples(br, num)
			ratio = npabs(asarray(br.d2func(x), dtype=float)) / npabs(asarray(br.dfunc(x), dtype=float))
			est = float(amax(ratio))
			if abs(est - prev) <= 1e-9 * max(est, 1.0) or num > 2 ** 20:
				break
			prev = est
			num = 2 * num - 1
		dist = max(dist, est)
	return dist


def branch_preimage(br, y, index=-1):
	"""Unique preimage of y under a single branch, or None if y is not in its closed image."""
	img = branch_image(br)
	if (y < img.lo - ENDPOINT_TOL) or (y > img.hi + ENDPOINT_TOL):
		return None

	if br.kind == 'affine':
		x = (y - br.intercept) / br.slope
		return min(max(x, br.lo), br.hi)

	g = lambda t: float(br.func(t)) - y
	glo = g(br.lo)
	ghi = g(br.hi)
	if abs(glo) <= ENDPOINT_TOL:
		return br.lo
	if abs(ghi) <= ENDPOINT_TOL:
		return br.hi
	try:
		return brentq(g, br.lo, br.hi, xtol=ROOT_TOL, rtol=ROOT_RTOL, maxiter=200)
	except (ValueError, RuntimeError) as e:
		raise NumericalError("preimage of %r on branch %d did not converge: %s" % (y, index, e))


def branch_preimages(pmap, y):
	"""All branch preimages of y.

	Parameters
	----------
	pmap : PiecewiseMap
		The map.
	y : double
		A point of [0,1].

	Returns
	-------
	A list of (x, branch index), one entry per branch whose closed image
	contains y. Shared endpoints therefore appear once per branch.

	"""
	y = float(y)
	if (y < -ENDPOINT_TOL) or (y > 1.0 + ENDPOINT_TOL):
		raise DomainError("y = %r is outside [0,1]" % y)

	out = []
	for i, br in enumerate(pmap.branches):
		x = branch_preimage(br, y, i)
		if x is not None:
			out.append((x, i))
	return out

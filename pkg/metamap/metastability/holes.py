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

from numpy import linspace

from metamap.errors import DomainError, NoPerturbationError
from metamap.model.interval_map import (ENDPOINT_TOL, Interval, branch_value, branch_preimage)
from metamap.transfer.density import integrate_intervals

log = getLogger(__name__)

MIN_HOLE = 1e-15     # Shorter hole pieces are dropped
CHECK_POINTS = 1000  # Sample size of the hole geometry check


HoleReport = namedtuple('HoleReport', 'H_l H_r leb_l leb_r mu_l_Hl mu_r_Hr ratio warnings')


def _pieces(pmap, b):
	"""Branch domains cut at b, tagged with their side: (branch, lo, hi, is_left)."""
	out = []
	for br in pmap.branches:
		if br.hi <= b + ENDPOINT_TOL:
			out.append((br, br.lo, min(br.hi, b), True))
		elif br.lo >= b - ENDPOINT_TOL:
			out.append((br, max(br.lo, b), br.hi, False))
		else:
			out.append((br, br.lo, b, True))
			out.append((br, b, br.hi, False))
	return out


def _crossing_set(br, lo, hi, b, above):
	"""Subinterval of [lo, hi] where the branch is above b (or below b if not above)."""
	v_lo = float(branch_value(br, lo))
	v_hi = float(branch_value(br, hi))
	if above:
		in_lo, in_hi = v_lo > b + ENDPOINT_TOL, v_hi > b + ENDPOINT_TOL
	else:
		in_lo, in_hi = v_lo < b - ENDPOINT_TOL, v_hi < b - ENDPOINT_TOL
	if in_lo and in_hi:
		return Interval(lo, hi)
	if not in_lo and not in_hi:
		return None
	x = branch_preimage(br._replace(lo=lo, hi=hi), b)
	if x is None:
		x = lo if in_hi else hi
	return Interval(x, hi) if in_hi else Interval(lo, x)


def _merge(intervals):
	intervals = sorted(intervals)
	out = []
	for iv in intervals:
		if iv.hi - iv.lo <= MIN_HOLE:
			continue
		if out and iv.lo <= out[-1].hi + ENDPOINT_TOL:
			out[-1] = Interval(out[-1].lo, max(out[-1].hi, iv.hi))
		else:
			out.append(iv)
	return out


def compute_holes(map_eps, b):
	"""Geometry of the holes of a perturbed map.

	Parameters
	----------
	map_eps : PiecewiseMap
		The perturbed map T_eps.
	b : double
		Boundary between I_l = [0,b] and I_r = [b,1].

	Returns
	-------
	A HoleReport with H_l = I_l and T^{-1}(I_r), H_r = I_r and T^{-1}(I_l) as
	lists of disjoint intervals and their Lebesgue measures. The measure
	fields are None until hole_measures fills them. A hole touching b is
	reported in warnings: orbits leaving through it land next to the boundary.

	"""
	b = float(b)
	if not (0.0 < b < 1.0):
		raise DomainError("boundary b = %r is not in (0,1)" % b)

	left = []
	right = []
	for br, lo, hi, is_left in _pieces(map_eps, b):
		iv = _crossing_set(br, lo, hi, b, above=is_left)
		if iv is not None:
			(left if is_left else right).append(iv)
	H_l = _merge(left)
	H_r = _merge(right)

	warnings = []
	for side, holes in (('H_l', H_l), ('H_r', H_r)):
		for iv in holes:
			if abs(iv.lo - b) <= ENDPOINT_TOL or abs(iv.hi - b) <= ENDPOINT_TOL:
				msg = ("boundary violation: hole %s piece [%.12g, %.12g] touches b = %r; "
					   "ejected orbits land next to the boundary" % (side, iv.lo, iv.hi, b))
				log.warning(msg)
				warnings.append(msg)

	warnings.extend(check_hole_geometry(map_eps, b, H_l, H_r))

	leb_l = float(sum(iv.hi - iv.lo for iv in H_l))
	leb_r = float(sum(iv.hi - iv.lo for iv in H_r))
	return HoleReport(H_l, H_r, leb_l, leb_r, None, None, None, warnings)


def _evaluate(pmap, x):
	for br in pmap.branches:
		if br.lo <= x <= br.hi:
			return float(branch_value(br, x))
	raise DomainError("x = %r is not covered by any branch" % x)


def check_hole_geometry(map_eps, b, H_l, H_r, samples=CHECK_POINTS):
	"""Sample the holes (and their complements) and check where they are sent.

	Returns
	-------
	A list of findings, empty when points of H_l land in I_r, points of H_r
	in I_l and all other points stay in their half.

	"""
	problems = []
	eps = 1e-9
	for x in linspace(eps, 1.0 - eps, samples):
		if abs(x - b) <= eps:
			continue
		y = _evaluate(map_eps, x)
		if x < b:
			in_hole = any(iv.lo < x < iv.hi for iv in H_l)
			crosses = y > b
		else:
			in_hole = any(iv.lo < x < iv.hi for iv in H_r)
			crosses = y < b
		near_edge = any(min(abs(x - iv.lo), abs(x - iv.hi)) <= 1e-9 for iv in H_l + H_r)
		if in_hole != crosses and not near_edge:
			problems.append("hole geometry: T(%.12g) = %.12g disagrees with the hole lists" % (x, y))
	for line in problems[:5]:
		log.warning(line)
	return problems


def hole_measures(report, phi_l, phi_r):
	"""Complete a HoleReport with the reference measures of the holes.

	Parameters
	----------
	report : HoleReport
		Output of compute_holes.
	phi_l, phi_r : ndarray
		Invariant densities of the two halves at eps = 0, on a common grid.

	Returns
	-------
	The HoleReport with mu_l(H_l), mu_r(H_r) and ratio = mu_r(H_r) / mu_l(H_l).
	When only the right hole carries mass the ratio is +inf (alpha = 1).

	"""
	mu_l = integrate_intervals(phi_l, [(iv.lo, iv.hi) for iv in report.H_l])
	mu_r = integrate_intervals(phi_r, [(iv.lo, iv.hi) for iv in report.H_r])
	if mu_l == 0.0 and mu_r == 0.0:
		raise NoPerturbationError("both holes have zero reference measure")
	if mu_l == 0.0:
		log.warning("left hole has zero reference measure: hole ratio is +inf")
		ratio = float('inf')
	else:
		ratio = mu_r / mu_l
	return report._replace(mu_l_Hl=mu_l, mu_r_Hr=mu_r, ratio=ratio)


def flux_balance(phi_eps, report):
	"""|mu_eps(H_l) - mu_eps(H_r)| for the invariant density phi_eps of T_eps."""
	a = integrate_intervals(phi_eps, [(iv.lo, iv.hi) for iv in report.H_l])
	c = integrate_intervals(phi_eps, [(iv.lo, iv.hi) for iv in report.H_r])
	return abs(a - c)

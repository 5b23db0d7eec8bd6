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

from bisect import bisect_left
from collections import namedtuple
from logging import getLogger

from metamap.errors import DomainError
from metamap.model.interval_map import ENDPOINT_TOL, evaluate_branches, branch_value

log = getLogger(__name__)

VERIFY_TOL = 1e-9


# points: sorted list of (u, depth); origins[k]: (critical point, branch path) of points[k]
PostcriticalHierarchy = namedtuple('PostcriticalHierarchy', 'points origins depth')


class _PointSet(object):
	"""Sorted set of reals with tolerance-based membership."""

	def __init__(self, tol=ENDPOINT_TOL):
		self.keys = []
		self.tol = tol

	def find(self, x):
		k = bisect_left(self.keys, x - self.tol)
		if k < len(self.keys) and abs(self.keys[k] - x) <= self.tol:
			return k
		return -1

	def add(self, x):
		k = bisect_left(self.keys, x)
		self.keys.insert(k, x)


def postcritical_hierarchy(pmap, depth):
	"""Breadth-first forward images of the one-sided critical values.

	Parameters
	----------
	pmap : PiecewiseMap
		The map whose critical set generates the hierarchy.
	depth : int
		Number of iterates (>= 1).

	Returns
	-------
	A PostcriticalHierarchy: every point u found within depth iterates with
	its minimal generation #(u), plus the critical point and the sequence of
	branch indices that produced it.

	"""
	if depth < 1:
		raise DomainError("hierarchy depth must be >= 1, got %r" % depth)

	seen = _PointSet()
	found = {}

	frontier = []
	for c in pmap.critical_set:
		for v, i in evaluate_branches(pmap, c):
			if seen.find(v) < 0:
				seen.add(v)
				found[v] = (1, c, (i,))
				frontier.append(v)

	for k in range(2, depth + 1):
		nxt = []
		for u in frontier:
			_, c, path = found[u]
			for v, i in evaluate_branches(pmap, min(max(u, 0.0), 1.0)):
				if seen.find(v) < 0:
					seen.add(v)
					found[v] = (k, c, path + (i,))
					nxt.append(v)
		frontier = nxt
		if not frontier:
			break

	points = []
	origins = []
	for u in sorted(found):
		k, c, path = found[u]
		points.append((u, k))
		origins.append((c, path))

	log.debug("postcritical hierarchy: %d points up to depth %d" % (len(points), depth))
	return PostcriticalHierarchy(points, origins, depth)


def follow_path(pmap, c, path):
	"""Apply the branches listed in path, starting from the critical point c."""
	x = c
	for i in path:
		x = float(branch_value(pmap.branches[i], x))
	return x


def verify_hierarchy(pmap, hier, tol=VERIFY_TOL):
	"""Recompute every hierarchy point from its generating critical point.

	Returns
	-------
	The list of (u, recomputed value) pairs that disagree by more than tol,
	empty when the hierarchy is sound.

	"""
	bad = []
	for (u, k), (c, path) in zip(hier.points, hier.origins):
		x = follow_path(pmap, c, path)
		if len(path) != k or abs(x - u) > tol:
			bad.append((u, x))
	return bad


def depth_of(hier, x, tol):
	"""Depth of the hierarchy point nearest to x when it lies within tol, else None.

	Among equally near points the smallest depth wins.
	"""
	best = None
	for u, k in hier.points:
		dist = abs(u - x)
		if dist > tol:
			continue
		if best is None or dist < best[0] or (dist == best[0] and k < best[1]):
			best = (dist, k)
	return None if best is None else best[1]


def periodic_critical_points(pmap, depth):
	"""Critical points c with c in T^k(c) for some 1 <= k <= depth.

	Both one-sided values are followed at every critical point hit, so
	the result is an over-approximation at bi-valued points.

	"""
	out = []
	for c in pmap.critical_set:
		frontier = [c]
		visited = _PointSet()
		hit = None
		for k in range(1, depth + 1):
			nxt = []
			for u in frontier:
				for v, _ in evaluate_branches(pmap, min(max(u, 0.0), 1.0)):
					if abs(v - c) <= VERIFY_TOL:
						hit = k
						break
					if visited.find(v) < 0:
						visited.add(v)
						nxt.append(v)
				if hit is not None:
					break
			if hit is not None:
				break
			frontier = nxt
			if not frontier:
				break
		if hit is not None:
			out.append((c, hit))
	return out

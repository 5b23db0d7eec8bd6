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

from numpy import abs as npabs, asarray, cumsum, diff, float64, nonzero, where, zeros

from metamap.errors import DomainError
from metamap.transfer.density import l1_norm, sup_norm

log = getLogger(__name__)

KAPPA = 5.0    # Jump threshold kappa * lip_bound / n
RING_GAP = 2   # Quiet boundaries bridged inside one jump


# jumps: list of (u, s_u); depths[k] is the hierarchy depth of jumps[k], None if unmatched
SaltusDecomposition = namedtuple('SaltusDecomposition', 'jumps depths regular saltus lipschitz_estimate '
														'threshold unmatched')


def total_variation(d):
	"""Sum of the absolute differences across interior cell boundaries."""
	d = asarray(d, dtype=float64)
	if d.size < 2:
		return 0.0
	return float(npabs(diff(d)).sum())


def sup_norm_bound(d):
	"""(|d|_inf, |d|_1 + TV(d)); the first never exceeds the second."""
	return sup_norm(d), l1_norm(d) + total_variation(d)


def _clusters(weak, strong, gap=RING_GAP):
	"""Groups of weak boundaries at most gap boundaries apart, kept when one of them is strong.

	Returns a list of index arrays.
	"""
	idx = nonzero(weak)[0]
	groups = []
	current = []
	for k in idx:
		if current and k - current[-1] > gap + 1:
			groups.append(current)
			current = []
		current.append(k)
	if current:
		groups.append(current)
	return [asarray(g) for g in groups if strong[g].any()]


def _match(hierarchy, lo, hi, u):
	"""Smallest depth among hierarchy points in [lo, hi], nearest to u on ties; None if there is none."""
	best = None
	for p, k in hierarchy.points:
		if p < lo or p > hi:
			continue
		key = (k, abs(p - u))
		if best is None or key < best:
			best = key
	return None if best is None else best[0]


def saltus_decompose(d, hierarchy, lip_bound, kappa=KAPPA):
	"""Split a grid density into Lipschitz regular part and step functions.

	Parameters
	----------
	d : ndarray
		Density grid on n cells.
	hierarchy : PostcriticalHierarchy
		Points the jumps are matched against.
	lip_bound : double
		Expected Lipschitz bound of the regular part, > 0. A boundary is a
		jump when its difference exceeds kappa * lip_bound / n.
	kappa : double
		Threshold factor.

	Returns
	-------
	A SaltusDecomposition. A jump is the cluster of boundaries around a
	flagged one whose differences exceed lip_bound / n, of either sign and
	bridging up to RING_GAP quiet boundaries: Ulam projection smears a step
	over several cells and rings next to it. The size is the summed
	difference, the location the boundary of largest difference. The
	cluster is matched to the shallowest hierarchy point it covers (within
	half a cell of its ends). The saltus part vanishes on the last cell, so
	d = regular + saltus holds exactly on the grid.

	"""
	if not lip_bound > 0.0:
		raise DomainError("lip_bound must be positive, got %r" % lip_bound)
	d = asarray(d, dtype=float64)
	n = d.size

	threshold = kappa * lip_bound / n
	dd = diff(d)
	strong = npabs(dd) > threshold
	weak = npabs(dd) > lip_bound / n
	clusters = _clusters(weak, strong)

	in_jump = zeros(dd.size, dtype=bool)
	for g in clusters:
		in_jump[g] = True

	# Cell j carries minus the jump differences at boundaries k >= j:
	detected = zeros(n, dtype=float64)
	detected[:-1][in_jump] = dd[in_jump]
	saltus = -cumsum(detected[::-1])[::-1]
	regular = d - saltus

	half = 0.5 / n + 1e-12
	jumps = []
	depths = []
	unmatched = 0
	for g in clusters:
		sizes = dd[g]
		u = float(g[npabs(sizes).argmax()] + 1) / n
		s = float(sizes.sum())
		lo = float(g[0] + 1) / n - half
		hi = float(g[-1] + 1) / n + half
		k = _match(hierarchy, lo, hi, u) if hierarchy is not None else None
		if k is None:
			unmatched += 1
			log.debug("jump of size %.3g at %.12g matches no postcritical point" % (s, u))
		jumps.append((u, s))
		depths.append(k)

	# Slopes of the regular part, taken from the differences outside the jumps:
	rest = where(in_jump, 0.0, dd)
	lip = float(npabs(rest).max()) * n if rest.size else 0.0
	return SaltusDecomposition(jumps, depths, regular, saltus, lip, threshold, unmatched)


def saltus_variation(dec):
	return float(sum(abs(s) for _, s in dec.jumps))


def local_saltus_variation(dec, center, delta):
	"""Sum of |s_u| over the jumps with |u - center| <= delta."""
	return float(sum(abs(s) for u, s in dec.jumps if abs(u - center) <= delta))


def reconstruction_error(d, dec):
	"""L1 distance between d and regular + saltus."""
	return l1_norm(asarray(d, dtype=float64) - dec.regular - dec.saltus)

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

from numpy import asarray

from metamap.errors import DomainError, MetamapError
from metamap.model.interval_map import (ENDPOINT_TOL, min_expansion, distortion, evaluate_branches,
										branch_image, critical_index)
from metamap.model.perturbation import instantiate, infinitesimal_holes
from metamap.bv.postcritical import postcritical_hierarchy, periodic_critical_points
from metamap.transfer.density import point_value

log = getLogger(__name__)

ORBIT_TOL = 1e-9    # Distance below which an orbit point counts as hitting H_0
DEFAULT_DEPTH = 8
CHECK_EPS = 1e-3    # Perturbation size at which b is checked against C_eps


HypothesisReport = namedtuple('HypothesisReport', 'min_expansion distortion passes_I2 I2_depth passes_I3 '
											   'passes_I4a passes_P2 halves_invariant holes periodic_critical '
											   'assumed diagnostics')


def _halves_invariant(pmap, b):
	"""True when every branch maps into the half of [0,1] holding its domain."""
	for br in pmap.branches:
		img = branch_image(br)
		if br.hi <= b + ENDPOINT_TOL:
			if img.hi > b + ENDPOINT_TOL:
				return False
		elif br.lo >= b - ENDPOINT_TOL:
			if img.lo < b - ENDPOINT_TOL:
				return False
		else:
			return False
	return True


def validate_hypotheses(family, depth=DEFAULT_DEPTH, phi_l=None, phi_r=None):
	"""Check the standing assumptions on a perturbation family.

	Parameters
	----------
	family : PerturbationFamily
		The family; checks concern its base map T_0 and boundary b.
	depth : int
		Orbit depth of the no-return check on the critical set.
	phi_l, phi_r : array_like, optional
		Reference densities of the two halves at eps = 0. When both are given
		the positivity at the infinitesimal holes is decided, otherwise
		passes_I3 is None.

	Returns
	-------
	A HypothesisReport. Failures are reported through diagnostics, nothing
	is raised for a failing predicate.

	"""
	if depth < 1:
		raise DomainError("hypothesis depth must be >= 1, got %r" % depth)

	t0 = family.base
	b = family.boundary_b
	diag = []

	lam = min_expansion(t0)
	dist = distortion(t0)

	halves = _halves_invariant(t0, b)
	if not halves:
		diag.append("[0,b] and [b,1] are not both T_0-invariant for b = %r" % b)

	try:
		holes = infinitesimal_holes(t0, b)
	except MetamapError as e:
		holes = []
		diag.append("infinitesimal holes: %s" % e)

	# No return of the critical set to the infinitesimal holes:
	hier = postcritical_hierarchy(t0, depth)
	passes_I2 = True
	for u, k in hier.points:
		for h in holes:
			if abs(u - h) <= ORBIT_TOL:
				passes_I2 = False
				diag.append("(I2) fails: T_0^%d of the critical set hits the infinitesimal hole %r" % (k, h))
	if passes_I2:
		log.debug("(I2) holds up to depth %d (finite-depth check)" % depth)

	# Positivity of the reference densities at the holes:
	passes_I3 = None
	if phi_l is not None and phi_r is not None:
		passes_I3 = True
		for h in holes:
			if h < b:
				val = point_value(asarray(phi_l, dtype=float), h, 0.0, b)
			else:
				val = point_value(asarray(phi_r, dtype=float), h, b, 1.0)
			if not val > 0.0:
				passes_I3 = False
				diag.append("(I3) fails: reference density vanishes at the infinitesimal hole %r" % h)

	passes_I4a = lam > 2.0
	if not passes_I4a:
		diag.append("(I4a) fails: minimum expansion %r is not > 2 ((I4b) regime is not supported)" % lam)

	periodic = periodic_critical_points(t0, depth)
	for c, k in periodic:
		if c in (0.0, 1.0):
			continue
		diag.append("critical point %r is periodic with period dividing %d" % (c, k))

	# Boundary condition:
	kb = critical_index(t0, b)
	if kb >= 0:
		vals = evaluate_branches(t0, b)
		left, right = vals[0][0], vals[-1][0]
		passes_P2 = (left < b - ENDPOINT_TOL) and (b + ENDPOINT_TOL < right)
		if not passes_P2:
			diag.append("(P2b) fails: need T_0(b-) < b < T_0(b+), got T_0(b-) = %r, T_0(b+) = %r" % (left, right))
		try:
			teps = instantiate(family, CHECK_EPS)
			if critical_index(teps, b) < 0:
				passes_P2 = False
				diag.append("(P2b) fails: b is not a critical point of T_eps at eps = %r" % CHECK_EPS)
		except MetamapError as e:
			passes_P2 = False
			diag.append("(P2b) could not be checked at eps = %r: %s" % (CHECK_EPS, e))
	else:
		vals = evaluate_branches(t0, b)
		passes_P2 = abs(vals[0][0] - b) <= ENDPOINT_TOL
		if not passes_P2:
			diag.append("(P2a) fails: b is not a critical point and T_0(b) = %r != b" % vals[0][0])
		try:
			teps = instantiate(family, CHECK_EPS)
			if abs(evaluate_branches(teps, b)[0][0] - b) > ENDPOINT_TOL:
				passes_P2 = False
				diag.append("(P2a) fails: T_eps(b) != b at eps = %r" % CHECK_EPS)
		except MetamapError as e:
			passes_P2 = False
			diag.append("(P2a) could not be checked at eps = %r: %s" % (CHECK_EPS, e))

	assumed = ["(I1) unique ACIM on each half: assumed; verify via spectral simplicity",
			   "(P1) unique ACIM for eps > 0: assumed; verify via spectral simplicity"]

	for line in diag:
		log.warning(line)

	return HypothesisReport(lam, dist, passes_I2, depth, passes_I3, passes_I4a, passes_P2, halves,
							holes, periodic, assumed, diag)


def report_as_dict(rep):
	"""Plain dictionary view of a HypothesisReport (JSON friendly)."""
	out = dict(rep._asdict())
	out['periodic_critical'] = [[c, k] for c, k in rep.periodic_critical]
	return out

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

from metamap.errors import DomainError, HypothesisViolationError, ModelError
from metamap.model.interval_map import (ENDPOINT_TOL, Branch, make_map, branch_preimages,
										critical_index)

log = getLogger(__name__)


# Per branch: ('affine', slope_eps, intercept_eps) or ('smooth', g, dg, d2g).
# hole_coefficients maps an infinitesimal hole h to (a_h, b_h), or is None.
PerturbationFamily = namedtuple('PerturbationFamily', 'base eps_coefficients boundary_b hole_coefficients name')


def affine_eps(slope_eps=0.0, intercept_eps=0.0):
	return ('affine', float(slope_eps), float(intercept_eps))


def smooth_eps(g, dg, d2g):
	return ('smooth', g, dg, d2g)


def make_family(base, eps_coefficients, boundary_b, hole_coefficients=None, name='family'):
	"""Bundle a base map with its linear-in-epsilon perturbation.

	Parameters
	----------
	base : PiecewiseMap
		The unperturbed map T_0.
	eps_coefficients : list
		One entry per branch of base, built with affine_eps or smooth_eps.
		None stands for an unperturbed branch.
	boundary_b : double
		The point splitting [0,1] into the initially invariant halves.
	hole_coefficients : dict, optional
		Maps each infinitesimal hole h to (a_h, b_h) >= 0, so that the hole
		opening near h is (h - a_h eps, h + b_h eps) to first order.

	"""
	if len(eps_coefficients) != len(base.branches):
		raise ModelError("%d perturbation entries for %d branches" % (len(eps_coefficients), len(base.branches)))

	coeffs = []
	for i, (br, c) in enumerate(zip(base.branches, eps_coefficients)):
		if c is None:
			c = affine_eps() if br.kind == 'affine' else None
		elif c[0] == 'affine' and br.kind != 'affine':
			raise ModelError("branch %d is smooth but carries affine perturbation coefficients" % i)
		coeffs.append(c)

	b = float(boundary_b)
	if not (0.0 < b < 1.0):
		raise DomainError("boundary b = %r is not in (0,1)" % b)

	if hole_coefficients is not None:
		holes = {}
		for h, (a_h, b_h) in hole_coefficients.items():
			if a_h < 0 or b_h < 0:
				raise ModelError("hole coefficients at %r must be nonnegative, got (%r, %r)" % (h, a_h, b_h))
			holes[float(h)] = (float(a_h), float(b_h))
		hole_coefficients = holes

	return PerturbationFamily(base, tuple(coeffs), b, hole_coefficients, name)


def _perturb_branch(br, c, eps):
	if c is None or eps == 0.0:
		return br
	if c[0] == 'affine':
		return br._replace(slope=br.slope + eps * c[1], intercept=br.intercept + eps * c[2])

	g, dg, d2g = c[1], c[2], c[3]
	if br.kind == 'affine':
		s, q = br.slope, br.intercept
		func = lambda x: s * x + q + eps * g(x)
		dfunc = lambda x: s + eps * dg(x)
		d2func = lambda x: eps * d2g(x)
	else:
		f0, df0, d2f0 = br.func, br.dfunc, br.d2func
		func = lambda x: f0(x) + eps * g(x)
		dfunc = lambda x: df0(x) + eps * dg(x)
		d2func = lambda x: d2f0(x) + eps * d2g(x)
	return Branch(br.lo, br.hi, 'smooth', None, None, func, dfunc, d2func)


def instantiate(family, eps):
	"""The perturbed map T_eps of a family.

	At eps = 0 the base map itself is returned, so every branch coefficient
	is reproduced exactly.

	"""
	eps = float(eps)
	if eps < 0.0:
		raise DomainError("eps = %r must be nonnegative" % eps)
	if eps == 0.0:
		return family.base
	branches = [_perturb_branch(br, c, eps) for br, c in zip(family.base.branches, family.eps_coefficients)]
	return make_map(branches)


def infinitesimal_holes(pmap, b):
	"""Preimages of the boundary point b other than b itself.

	Parameters
	----------
	pmap : PiecewiseMap
		The unperturbed map.
	b : double
		Boundary point in (0,1).

	Returns
	-------
	Sorted list of distinct points of the critical set mapped onto b.

	"""
	b = float(b)
	if not (0.0 < b < 1.0):
		raise DomainError("boundary b = %r is not in (0,1)" % b)

	holes = []
	for x, i in branch_preimages(pmap, b):
		if abs(x - b) <= ENDPOINT_TOL:
			continue
		k = critical_index(pmap, x)
		if k < 0:
			raise HypothesisViolationError("preimage %r of b on branch %d is not a critical point: "
										   "[0,b] and [b,1] cannot both be invariant" % (x, i))
		c = pmap.critical_set[k]
		if not any(abs(c - h) <= ENDPOINT_TOL for h in holes):
			holes.append(c)
	return sorted(holes)

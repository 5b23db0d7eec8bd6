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

from logging import getLogger
from math import isinf

from numpy import array, float64

from metamap.errors import DegeneracyError, DomainError, ModelError
from metamap.transfer.density import point_value

log = getLogger(__name__)


def analytic_lhr(family, phi_l, phi_r):
	"""First-order limiting hole ratio from the hole expansion coefficients.

	Each infinitesimal hole h opens as (h - a_h eps, h + b_h eps), so its
	measure is phi(h) (a_h + b_h) eps to first order. The ratio sums the right
	holes over the left holes:

		l.h.r. = sum_right phi_r(h) (a_h + b_h) / sum_left phi_l(h) (a_h + b_h)

	Parameters
	----------
	family : PerturbationFamily
		Family with hole_coefficients.
	phi_l, phi_r : ndarray
		Reference densities of the halves, continuous at the holes.

	"""
	if not family.hole_coefficients:
		raise ModelError("family %r declares no hole coefficients" % family.name)
	b = family.boundary_b
	num = 0.0
	den = 0.0
	for h, (a_h, b_h) in sorted(family.hole_coefficients.items()):
		if h < b:
			den += point_value(phi_l, h, 0.0, b) * (a_h + b_h)
		else:
			num += point_value(phi_r, h, b, 1.0) * (a_h + b_h)
	if den == 0.0:
		raise DegeneracyError("left holes have zero first-order size: limiting hole ratio undefined")
	return num / den


def alpha_from_lhr(lhr):
	"""alpha with alpha / (1 - alpha) = lhr; alpha = 1 for lhr = +inf."""
	if lhr < 0.0:
		raise DomainError("limiting hole ratio must be nonnegative, got %r" % lhr)
	if isinf(lhr):
		return 1.0
	return lhr / (1.0 + lhr)


def predict_mixture(lhr, phi_l, phi_r):
	"""Limit of the invariant densities: alpha phi_l + (1 - alpha) phi_r.

	Returns
	-------
	(alpha, mixture)

	"""
	alpha = alpha_from_lhr(lhr)
	return alpha, alpha * phi_l + (1.0 - alpha) * phi_r


def markov_matrix(eps_lr, eps_rl):
	"""Transition matrix of the two-state chain with switching rates eps_lr, eps_rl."""
	return array([[1.0 - eps_lr, eps_lr], [eps_rl, 1.0 - eps_rl]], dtype=float64)


def markov_stationary(eps_lr, eps_rl):
	"""Stationary weight of the left state and second eigenvalue of the chain.

	Returns
	-------
	(alpha, rho) with alpha / (1 - alpha) = eps_rl / eps_lr and
	rho = 1 - eps_lr - eps_rl.

	"""
	eps_lr = float(eps_lr)
	eps_rl = float(eps_rl)
	if eps_lr < 0.0 or eps_rl < 0.0:
		raise DomainError("switching rates must be nonnegative, got (%r, %r)" % (eps_lr, eps_rl))
	if eps_lr + eps_rl > 1.0:
		raise DomainError("switching rates sum to %r > 1" % (eps_lr + eps_rl))
	if eps_lr == 0.0 and eps_rl == 0.0:
		raise DegeneracyError("both switching rates vanish: every distribution is stationary")
	return eps_rl / (eps_lr + eps_rl), 1.0 - eps_lr - eps_rl

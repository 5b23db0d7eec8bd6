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

from metamap.errors import UnsupportedRegimeError
from metamap.model.interval_map import min_expansion, distortion

log = getLogger(__name__)


LYConstants = namedtuple('LYConstants', 'lam distortion C_eps beta C_LY')


def ly_coefficient(pmap):
	"""C = D / lambda + 2 / (shortest branch domain) for a single map."""
	lam = min_expansion(pmap)
	dist = distortion(pmap)
	width = min(br.hi - br.lo for br in pmap.branches)
	return lam, dist, dist / lam + 2.0 / width


def lasota_yorke_constants(pmap, base_map=None):
	"""Constants of the inequality Var(L f) <= beta Var(f) + C_eps |f|_1.

	Parameters
	----------
	pmap : PiecewiseMap
		The (perturbed) map T_eps.
	base_map : PiecewiseMap, optional
		The unperturbed map T_0 whose coefficient C_0 enters the iterated
		constant C_LY = 2 C_0 / (1 - beta). Defaults to pmap itself.

	Returns
	-------
	LYConstants with beta = 2 / lambda.

	"""
	lam, dist, c_eps = ly_coefficient(pmap)
	if not lam > 2.0:
		raise UnsupportedRegimeError("minimum expansion %r <= 2: the uniform constants need the "
									 "(I4b) route (no periodic critical points), which is not implemented" % lam)
	if base_map is None:
		c0 = c_eps
	else:
		c0 = ly_coefficient(base_map)[2]
	beta = 2.0 / lam
	return LYConstants(lam, dist, c_eps, beta, 2.0 * c0 / (1.0 - beta))


def var_bound(ly, var_f, l1_f, k):
	"""Iterated bound on Var(L^k f): C_LY beta^k Var f + C_LY |f|_1."""
	return ly.C_LY * (ly.beta ** k) * var_f + ly.C_LY * l1_f

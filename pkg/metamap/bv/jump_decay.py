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

from metamap.bv.postcritical import depth_of

DECAY_SLACK = 1.1


DecayRow = namedtuple('DecayRow', 'm tail bound passed')


def jump_decay_profile(dec, hier, ly, m_max, slack=DECAY_SLACK):
	"""Tail sums of the jump sizes against the exponential bound lambda^-m C_LY.

	Parameters
	----------
	dec : SaltusDecomposition
		Decomposition of an invariant density.
	hier : PostcriticalHierarchy
		Hierarchy placing the jumps the decomposition left unmatched (within
		half a cell). Jumps without a depth count in every tail.
	ly : LYConstants
		Constants of the map (lam and C_LY are used).
	m_max : int
		Largest m inspected.

	Returns
	-------
	A list of DecayRow(m, sum over #(u) > m of |s_u|, lambda^-m C_LY, passed)
	for m = 0, ..., m_max.

	"""
	n = dec.regular.size
	tol = 0.5 / n + 1e-12
	depths = [k if k is not None else depth_of(hier, u, tol) for (u, _), k in zip(dec.jumps, dec.depths)]

	rows = []
	for m in range(int(m_max) + 1):
		tail = sum(abs(s) for (u, s), k in zip(dec.jumps, depths) if k is None or k > m)
		bound = ly.lam ** (-m) * ly.C_LY
		rows.append(DecayRow(m, float(tail), float(bound), tail <= slack * bound))
	return rows

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

from fractions import Fraction
from math import ceil, gcd

RESOLUTION = 12    # Cells per unit of eps_min asked by the grid rule


def upperMultiple(v, m):
	"""Return the smallest multiple of m not below v

	Parameters
	----------
	v : int
		A positive integer value

	m : int
		A positive integer modulus

	Return value
	----------
	An integer value

	"""
	v = int(v)
	m = int(m)
	return ((v + m - 1) // m) * m


def alignmentModulus(points):
	"""Least common denominator of a set of rational points

	Parameters
	----------
	points : iterable of Fraction (or anything Fraction accepts)
		The critical points to align with cell boundaries.

	Return value
	----------
	The smallest q such that every point is a multiple of 1/q; any grid n
	divisible by q puts all points on cell boundaries.

	"""
	q = 1
	for p in points:
		d = Fraction(p).denominator
		q = q * d // gcd(q, d)
	return q


def isAligned(n, points):
	return n % alignmentModulus(points) == 0


def resolutionFloor(eps_min):
	"""Smallest n with n >= RESOLUTION / eps_min."""
	return int(ceil(RESOLUTION / float(eps_min) - 1e-9))


def suggestGrid(eps_min, points):
	"""Grid meeting both parts of the rule: resolution floor, rounded up to alignment."""
	return upperMultiple(resolutionFloor(eps_min), alignmentModulus(points))

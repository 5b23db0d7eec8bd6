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

from hashlib import sha1
from os import listdir, makedirs
from os.path import exists, join

from numpy import float64, fromfile


KEY_DIGITS = 12  # Hex digits of the family fingerprint kept in file names


def _callable_key(f):
	code = getattr(f, '__code__', None)
	if code is None:
		return repr(f)
	cells = tuple(c.cell_contents for c in (f.__closure__ or ()))
	return (code.co_code, code.co_consts, code.co_names, repr(cells))


def _item_key(item):
	return _callable_key(item) if callable(item) else item


def family_key(family):
	"""Cache key of a perturbation family: its name plus a fingerprint.

	The fingerprint hashes the branch coefficients (the code and captured
	values of smooth branches), the eps coefficients, b and the holes, so two
	families sharing a name never share cached densities.
	"""
	branches = [tuple(_item_key(v) for v in br) for br in family.base.branches]
	coeffs = [c if c is None else tuple(_item_key(v) for v in c) for c in family.eps_coefficients]
	holes = sorted((family.hole_coefficients or {}).items())
	digest = sha1(repr((branches, coeffs, family.boundary_b, holes)).encode('utf-8')).hexdigest()
	return '%s_%s' % (family.name, digest[:KEY_DIGITS])


def _name(key, side, n):
	return key + '_phi' + side + '#' + str(n)


def cache2densities(key, n, cachepath):
	"""Read from cache the reference densities of a scenario.

	Parameters
	----------
	key : string
		Scenario name (plus anything else identifying the base map).

	n : int
		Grid size.

	cachepath : string
		Cache folder.

	Returns
	-------
	(phi_l, phi_r) as float64 arrays, or None when either file is missing or
	has the wrong size.

	"""
	if cachepath is None or not exists(cachepath):
		return None

	files = listdir(cachepath)
	out = []
	for side in ('l', 'r'):
		fname = _name(key, side, n)
		if fname not in files:
			return None
		d = fromfile(join(cachepath, fname), dtype=float64)
		if d.size != n:
			return None
		out.append(d)
	return out[0], out[1]


def densities2cache(phi_l, phi_r, key, cachepath):
	"""Write to cache the reference densities of a scenario.

	Parameters
	----------
	phi_l, phi_r : array_like
		Reference densities on a common grid.

	key : string
		Scenario name.

	cachepath : string
		Cache folder, created if needed.

	Returns
	-------
	No return value.

	"""
	if not exists(cachepath):
		makedirs(cachepath)
	n = phi_l.size
	phi_l.astype(float64).tofile(join(cachepath, _name(key, 'l', n)))
	phi_r.astype(float64).tofile(join(cachepath, _name(key, 'r', n)))

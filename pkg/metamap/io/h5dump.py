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

#
# Debug dump of Ulam matrices and densities.
#
# Layout of the file (one group per eps, named by its repr):
#
#   /<eps>/ulam/row, /<eps>/ulam/col, /<eps>/ulam/val   triplets, row-major
#   /<eps>/density/phi, psi, mixture                     grids (when present)
#
# Attributes: the scenario name and n on the root, eps on each group.
#

import h5py
from numpy import asarray, float64, int64

from metamap.transfer.ulam import to_triplets

CHUNK = 65536 # Largest chunk length of the 1-D datasets


def get_dset_chunks(size):
	"""Chunk shape for a 1-D dataset of the given length."""
	return (max(1, min(int(size), CHUNK)),)


def _write_vector(group, name, data, dtype):
	data = asarray(data, dtype=dtype)
	if data.size == 0:
		return group.create_dataset(name, shape=(0,), dtype=dtype)
	return group.create_dataset(name, data=data, chunks=get_dset_chunks(data.size), compression='gzip')


def open_dump(path, name, n):
	"""Create (truncate) the dump file and tag it with the scenario."""
	f = h5py.File(path, 'w')
	f.attrs['scenario'] = name
	f.attrs['n'] = int(n)
	return f


def write_eps(f, eps, P, densities):
	"""Store the Ulam triplets and the given densities of one eps.

	Parameters
	----------
	f : HDF5 file
		As returned by open_dump.
	eps : double
		The perturbation size.
	P : UlamMatrix
		The matrix of T_eps.
	densities : dict
		Name -> grid; None values are skipped.

	"""
	grp = f.create_group(repr(float(eps)))
	grp.attrs['eps'] = float(eps)
	rows, cols, vals = to_triplets(P)
	ulam = grp.create_group('ulam')
	_write_vector(ulam, 'row', rows, int64)
	_write_vector(ulam, 'col', cols, int64)
	_write_vector(ulam, 'val', vals, float64)
	dens = grp.create_group('density')
	for key in sorted(densities):
		if densities[key] is not None:
			_write_vector(dens, key, densities[key], float64)


def read_triplets(f, eps):
	"""(row, col, val) arrays of the matrix stored for eps."""
	grp = f[repr(float(eps))]['ulam']
	return grp['row'][()], grp['col'][()], grp['val'][()]


def read_density(f, eps, key):
	return f[repr(float(eps))]['density'][key][()]

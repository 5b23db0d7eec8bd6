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

from numpy import abs as npabs, argmin, argsort, delete, real, imag, float64, asarray
from scipy.linalg import eig

from metamap.errors import DegeneracyError, UnsupportedRegimeError
from metamap.transfer.density import l1_norm, mass, integrate
from metamap.transfer.ulam import dense

log = getLogger(__name__)

DENSE_CAP = 4096    # Largest n accepted by the dense eigensolve
IMAG_TOL = 1e-10


def dense_second_eigenpair(P, I_l):
	"""Second eigenpair of the transfer operator by a full dense eigensolve.

	LAPACK reduces L = P^T to Hessenberg form and runs shifted QR. The
	eigenvalue nearest to 1 is taken as the Perron eigenvalue and dropped;
	the remaining eigenvalue of largest modulus is returned.

	Parameters
	----------
	P : UlamMatrix
		The discretized operator, n <= DENSE_CAP.
	I_l : Interval
		Left half, used to fix the sign of the eigenvector.

	Returns
	-------
	(rho, psi) with psi of mean zero, L1 norm 1 and positive integral over I_l.

	"""
	if P.n > DENSE_CAP:
		raise UnsupportedRegimeError("dense eigensolve capped at n = %d, got n = %d" % (DENSE_CAP, P.n))
	if P.n < 2:
		raise DegeneracyError("a 1-cell operator has no second eigenvalue")

	w, v = eig(dense(P).T)
	k1 = int(argmin(npabs(w - 1.0)))
	rest = delete(w, k1)
	vrest = delete(v, k1, axis=1)
	k2 = int(argsort(-npabs(rest), kind='mergesort')[0])
	lam = rest[k2]
	if abs(imag(lam)) > IMAG_TOL * max(1.0, abs(lam)):
		raise DegeneracyError("second eigenvalue %r is complex" % (lam,))

	psi = asarray(real(vrest[:, k2]), dtype=float64)
	psi = psi - mass(psi)
	nrm = l1_norm(psi)
	if nrm == 0.0:
		raise DegeneracyError("second eigenvector is constant")
	psi = psi / nrm
	if integrate(psi, I_l.lo, I_l.hi) < 0.0:
		psi = -psi

	log.debug("dense eigensolve n = %d: second eigenvalue %.15g" % (P.n, real(lam)))
	return float(real(lam)), psi

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
# Prints, for family_a, the ratio between hole measure and escape rate of
# the left and right open systems along a sequence of eps.
#
# Usage: python tools_escape.py [n]
#

from sys import argv

from metamap.io.builtins import BUILTINS
from metamap.io.scenario import parse_scenario
from metamap.metastability.holes import compute_holes
from metamap.model.interval_map import Interval
from metamap.model.perturbation import instantiate
from metamap.spectral.escape import escape_rate, hole_cell_fractions
from metamap.transfer.density import indicator
from metamap.transfer.ulam import build_ulam


def main(argv):
	n = int(argv[0]) if argv else 1200
	family = parse_scenario(BUILTINS['family_a'], 'builtin:family_a', grid=n).family
	b = family.boundary_b
	P0 = build_ulam(family.base, n)

	for eps in (0.02, 0.01, 0.005):
		holes = compute_holes(instantiate(family, eps), b)
		out = []
		for H, half in ((holes.H_l, Interval(0.0, b)), (holes.H_r, Interval(b, 1.0))):
			cells, frac = hole_cell_fractions([(iv.lo, iv.hi) for iv in H], n)
			ref = indicator(n, half.lo, half.hi, 1.0 / (half.hi - half.lo))
			out.append(escape_rate(P0, cells, half, frac, ref).ratio)
		print("eps = %g: left %.4f, right %.4f" % (eps, out[0], out[1]))
	return 0


if __name__ == "__main__":
	raise SystemExit(main(argv[1:]))

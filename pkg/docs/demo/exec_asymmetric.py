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
# Sweep of a family whose right hole is twice as long as in family_a.
#
# Usage: python exec_asymmetric.py <outdir> [n]
#

from sys import argv

from metamap.exec_metamap import run
from metamap.io.builtins import FAMILY_A
from metamap.io.scenario import parse_scenario


def main(argv):
	outdir = argv[0]
	n = int(argv[1]) if len(argv) > 1 else 1920

	obj = dict(FAMILY_A, name='asymmetric', eps=["0.02", "0.01", "0.005"])
	obj['branches'] = [dict(b) for b in FAMILY_A['branches']]
	obj['branches'][4]['intercept_eps'] = "-2"
	obj['holes'] = [{"at": "1/3", "a": "1", "b": "0"}, {"at": "2/3", "a": "0", "b": "2/3"}]

	scenario = parse_scenario(obj, 'exec_asymmetric', grid=n, output=outdir)
	return run(scenario)


if __name__ == "__main__":
	raise SystemExit(main(argv[1:]))

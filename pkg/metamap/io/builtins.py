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

"""Built-in scenarios, written in the same form as a scenario file.

family_a  compliant family: both halves are three-branch full affine maps,
          holes open at 1/3 (to the left of it) and at 2/3 (to the right).
family_b  boundary violation: the left half leaks through a hole touching
          b = 1/2, so ejected orbits come straight back.
markov2   the two-state chain with switching rates (eps_lr, eps_rl).
"""

DEFAULT_EPS = ["0.02", "0.01", "0.005", "0.0025"]
DEFAULT_GRID = 3840


def _branch(lo, hi, slope, intercept, slope_eps="0", intercept_eps="0"):
	return {"domain": [lo, hi], "slope": slope, "intercept": intercept,
			"slope_eps": slope_eps, "intercept_eps": intercept_eps}


FAMILY_A = {
	"name": "family_a",
	"kind": "map",
	"boundary": "1/2",
	"branches": [
		_branch("0", "1/6", "3", "0"),
		_branch("1/6", "1/3", "3", "-1/2", intercept_eps="3"),
		_branch("1/3", "1/2", "-3", "3/2"),
		_branch("1/2", "2/3", "-3", "5/2"),
		_branch("2/3", "5/6", "3", "-3/2", intercept_eps="-1"),
		_branch("5/6", "1", "3", "-2"),
	],
	"holes": [
		{"at": "1/3", "a": "1", "b": "0"},
		{"at": "2/3", "a": "0", "b": "1/3"},
	],
	"eps": DEFAULT_EPS,
	"grid": DEFAULT_GRID,
	"options": {"closed_form_reference": "lebesgue"},
}

# [(3x mod 1/2) + 3 eps] on x < 1/2, [(-3x mod 1/2) + 1/2 - eps] on x > 1/2
FAMILY_B = {
	"name": "family_b",
	"kind": "map",
	"boundary": "1/2",
	"branches": [
		_branch("0", "1/6", "3", "0", intercept_eps="3"),
		_branch("1/6", "1/3", "3", "-1/2", intercept_eps="3"),
		_branch("1/3", "1/2", "3", "-1", intercept_eps="3"),
		_branch("1/2", "2/3", "-3", "5/2", intercept_eps="-1"),
		_branch("2/3", "5/6", "-3", "3", intercept_eps="-1"),
		_branch("5/6", "1", "-3", "7/2", intercept_eps="-1"),
	],
	"eps": DEFAULT_EPS,
	"grid": DEFAULT_GRID,
	"options": {"closed_form_reference": "lebesgue"},
}

MARKOV2 = {
	"name": "markov2",
	"kind": "markov",
	"eps": [["0.01", "0.03"], ["0.005", "0.015"], ["0.0025", "0.0075"]],
}

BUILTINS = {
	"family_a": FAMILY_A,
	"family_b": FAMILY_B,
	"markov2": MARKOV2,
}

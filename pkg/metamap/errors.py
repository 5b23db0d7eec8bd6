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

"""Exceptions raised by the metamap library.

Library functions raise; reports (hypothesis checks, sweep rows) collect
diagnostics instead.
"""


class MetamapError(Exception):
	"""Base error for the package."""


class DomainError(MetamapError, ValueError):
	"""An argument lies outside the domain of the operation."""


class ModelError(MetamapError, ValueError):
	"""A map or family violates a structural invariant (tiling, image, expansion)."""


class HypothesisViolationError(MetamapError):
	"""A standing hypothesis on the unperturbed map does not hold."""


class NumericalError(MetamapError, ArithmeticError):
	"""A numerical sub-step (root bracketing, normalization) failed."""


class SolverError(NumericalError):
	"""An iterative eigensolver did not converge.

	The residual reached when the iteration stopped is kept in ``residual``.
	"""

	def __init__(self, message, residual=None):
		MetamapError.__init__(self, message)
		self.residual = residual


class DegeneracyError(NumericalError):
	"""The requested spectral object is not real/simple, or a hole swallows its domain."""


class UnsupportedRegimeError(MetamapError):
	"""The input is outside the regime the implementation covers."""


class NoPerturbationError(MetamapError):
	"""Both holes carry zero measure: the perturbation does not couple the halves."""


class ScenarioError(MetamapError):
	"""A scenario file or builtin could not be turned into a valid scenario.

	``problems`` lists one message per offending field, each starting with
	the field path (e.g. ``branches[2].domain``).
	"""

	def __init__(self, problems):
		if isinstance(problems, str):
			problems = [problems]
		self.problems = list(problems)
		MetamapError.__init__(self, "; ".join(self.problems))

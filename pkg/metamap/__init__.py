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

from metamap.errors import *
from metamap.model.interval_map import *
from metamap.model.perturbation import *
from metamap.model.hypotheses import *
from metamap.transfer.density import *
from metamap.transfer.ulam import *
from metamap.transfer.lasota_yorke import *
from metamap.spectral.power import *
from metamap.spectral.escape import *
from metamap.bv.postcritical import *
from metamap.bv.saltus import *
from metamap.bv.jump_decay import *
from metamap.metastability.holes import *
from metamap.metastability.mixture import *
from metamap.metastability.sweep import *
from metamap.io.scenario import *

import logging
logging.basicConfig()

try:
	import pkg_resources
	__version__ = pkg_resources.working_set.require("metamap")[0].version
except:
	pass

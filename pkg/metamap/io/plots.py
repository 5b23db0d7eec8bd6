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
# SVG line plots of a sweep, drawn with matplotlib on the Agg backend.
#
# Only data also written to the CSV reports is plotted.
#

import matplotlib
matplotlib.use('Agg')
matplotlib.rcParams['svg.hashsalt'] = 'metamap'
from matplotlib import pyplot as plt

from math import isnan
from os.path import join

from metamap.transfer.density import cell_centers

DENSITIES_SVG = 'densities.svg'
DISTANCE_SVG = 'l1_distance.svg'
RHO_SVG = 'rho.svg'


def _finite(xs, ys):
	pts = [(x, y) for x, y in zip(xs, ys) if not (isnan(x) or isnan(y)) and x > 0 and y > 0]
	return [p[0] for p in pts], [p[1] for p in pts]


def _save(fig, path):
	# Fixed metadata keeps the SVG free of dates:
	fig.savefig(path, format='svg', metadata={'Date': None})
	plt.close(fig)
	return path


def plot_densities(outdir, result, n):
	"""phi_eps for every eps plus the predicted mixture (when one is reported)."""
	x = cell_centers(n)
	fig, ax = plt.subplots(figsize=(7, 4))
	for det in result.details:
		if det.phi is not None:
			ax.plot(x, det.phi, linewidth=0.8, label='eps = %g' % det.eps)
	mixtures = [d.mixture for d in result.details if d.mixture is not None]
	if mixtures:
		ax.plot(x, mixtures[0], 'k--', linewidth=1.0, label='mixture')
	ax.set_xlabel('x')
	ax.set_ylabel('density')
	ax.set_xlim(0.0, 1.0)
	ax.legend(loc='best', fontsize='small')
	fig.tight_layout()
	return _save(fig, join(outdir, DENSITIES_SVG))


def plot_distance(outdir, rows):
	"""L1 distance of phi_eps to the mixture against eps, log-log."""
	eps, dist = _finite([r.eps for r in rows], [r.l1_phi_vs_mixture for r in rows])
	fig, ax = plt.subplots(figsize=(5, 4))
	if eps:
		ax.loglog(eps, dist, 'o-')
	ax.set_xlabel('eps')
	ax.set_ylabel('L1(phi_eps, mixture)')
	fig.tight_layout()
	return _save(fig, join(outdir, DISTANCE_SVG))


def plot_rho(outdir, rows):
	eps = [r.eps for r in rows if not isnan(r.rho)]
	rho = [r.rho for r in rows if not isnan(r.rho)]
	fig, ax = plt.subplots(figsize=(5, 4))
	if eps:
		ax.semilogx(eps, rho, 'o-')
	ax.set_xlabel('eps')
	ax.set_ylabel('rho_eps')
	fig.tight_layout()
	return _save(fig, join(outdir, RHO_SVG))


def plot_sweep(outdir, result, n):
	"""All plots of a sweep; returns the written paths."""
	return [plot_densities(outdir, result, n), plot_distance(outdir, result.rows), plot_rho(outdir, result.rows)]

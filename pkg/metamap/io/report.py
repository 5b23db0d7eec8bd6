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
# Report writers of a run: sweep table, per-eps density grids, saltus
# decompositions and Markov tables as CSV, plus a JSON mirror.
#
# Every float goes through %.17g so two runs of the same scenario produce the
# same bytes. CSV files use LF line endings whatever the platform.
#

import csv
import json
from math import isinf, isnan
from os.path import join

from numpy import bool_, floating, integer, ndarray

from metamap.metastability.sweep import SweepRow
from metamap.transfer.density import cell_centers

SWEEP_CSV = 'sweep.csv'
SWEEP_JSON = 'sweep.json'
SALTUS_CSV = 'saltus.csv'
MARKOV_CSV = 'markov.csv'
DENSITY_CSV = 'density_%d.csv'

MARKOV_FIELDS = ('eps_lr', 'eps_rl', 'alpha', 'rho', 'alpha_power', 'rho_power')


def format_value(v):
	"""Text of one CSV cell."""
	if isinstance(v, (bool, bool_)):
		return 'true' if v else 'false'
	if v is None:
		return ''
	if isinstance(v, (integer,)):
		return str(int(v))
	if isinstance(v, (float, floating)):
		v = float(v)
		if isnan(v):
			return 'nan'
		if isinf(v):
			return 'inf' if v > 0 else '-inf'
		return '%.17g' % v
	return str(v)


def _write_csv(path, header, rows):
	with open(path, 'w', newline='') as f:
		w = csv.writer(f, lineterminator='\n')
		w.writerow(header)
		for row in rows:
			w.writerow([format_value(v) for v in row])


def write_sweep_csv(outdir, rows):
	"""One line per SweepRow, its fields as columns."""
	path = join(outdir, SWEEP_CSV)
	_write_csv(path, SweepRow._fields, rows)
	return path


def write_density_csv(outdir, k, detail, n):
	"""Grid of the k-th eps: x (cell centres), phi, mixture, psi.

	Missing curves (a failed row, spectral stage off) are written as nan.
	"""
	path = join(outdir, DENSITY_CSV % k)
	x = cell_centers(n)
	cols = []
	for d in (detail.phi, detail.mixture, detail.psi):
		cols.append(d if d is not None else [float('nan')] * n)
	_write_csv(path, ('x', 'phi', 'mixture', 'psi'), zip(x, *cols))
	return path


def write_saltus_csv(outdir, details):
	"""All detected jumps: eps, location, size, postcritical depth (empty if unmatched)."""
	path = join(outdir, SALTUS_CSV)
	rows = []
	for det in details:
		if det.saltus is None:
			continue
		for (u, s), k in zip(det.saltus.jumps, det.saltus.depths):
			rows.append((det.eps, u, s, k))
	_write_csv(path, ('eps', 'location', 'size', 'depth'), rows)
	return path


def write_markov_csv(outdir, rows):
	path = join(outdir, MARKOV_CSV)
	_write_csv(path, MARKOV_FIELDS, rows)
	return path


def plain(obj):
	"""Recursively turn a result into JSON-compatible values.

	nan becomes null and infinities become the strings "inf" / "-inf";
	namedtuples become objects, arrays become lists.
	"""
	if isinstance(obj, bool_):
		return bool(obj)
	if isinstance(obj, bool) or obj is None or isinstance(obj, str):
		return obj
	if isinstance(obj, (integer, int)):
		return int(obj)
	if isinstance(obj, (float, floating)):
		obj = float(obj)
		if isnan(obj):
			return None
		if isinf(obj):
			return 'inf' if obj > 0 else '-inf'
		return obj
	if hasattr(obj, '_asdict'):
		return dict((k, plain(v)) for k, v in obj._asdict().items())
	if isinstance(obj, dict):
		return dict((str(k), plain(v)) for k, v in obj.items())
	if isinstance(obj, ndarray):
		return [plain(v) for v in obj.tolist()]
	if isinstance(obj, (list, tuple)):
		return [plain(v) for v in obj]
	return str(obj)


def _detail_dict(det):
	out = {'eps': det.eps, 'seconds': det.seconds, 'warnings': list(det.warnings)}
	if det.holes is not None:
		out['holes'] = {
			'H_l': [[iv.lo, iv.hi] for iv in det.holes.H_l],
			'H_r': [[iv.lo, iv.hi] for iv in det.holes.H_r],
			'leb_l': det.holes.leb_l,
			'leb_r': det.holes.leb_r,
		}
	if det.saltus is not None:
		out['saltus'] = {
			'jumps': len(det.saltus.jumps),
			'unmatched': det.saltus.unmatched,
			'threshold': det.saltus.threshold,
			'lipschitz_estimate': det.saltus.lipschitz_estimate,
		}
	if det.decay is not None:
		out['jump_decay'] = [r._asdict() for r in det.decay]
	return out


def sweep_document(scenario, result, hypotheses=None, simplicity=None, warnings=()):
	"""The JSON mirror of a sweep run as a dictionary."""
	return plain({
		'scenario': scenario.name,
		'source': scenario.source,
		'n': scenario.n,
		'eps': list(scenario.eps_list),
		'options': scenario.options,
		'lhr': result.lhr,
		'alpha': result.alpha,
		'abstained': result.abstained,
		'ratio_spread': result.ratio_spread,
		'rows': [r._asdict() for r in result.rows],
		'details': [_detail_dict(d) for d in result.details],
		'hypotheses': hypotheses,
		'eps0_simplicity': simplicity,
		'warnings': list(warnings),
	})


def write_json(path, document):
	with open(path, 'w', newline='') as f:
		json.dump(plain(document), f, sort_keys=True, indent=1, allow_nan=False)
		f.write('\n')
	return path


def write_sweep_report(outdir, scenario, result, hypotheses=None, simplicity=None, warnings=()):
	"""Write sweep.csv, density_<k>.csv, saltus.csv and sweep.json.

	Returns
	-------
	The list of written paths.

	"""
	paths = [write_sweep_csv(outdir, result.rows)]
	for k, det in enumerate(result.details):
		paths.append(write_density_csv(outdir, k, det, scenario.n))
	if scenario.options.get('saltus'):
		paths.append(write_saltus_csv(outdir, result.details))
	doc = sweep_document(scenario, result, hypotheses, simplicity, warnings)
	paths.append(write_json(join(outdir, SWEEP_JSON), doc))
	return paths

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

"""Command-line driver of metamap.

	metamap run --scenario <path|builtin:name> [--eps 0.02,0.01] [--grid n]
	            [--jobs k] [--out dir] [--tol t] [--dump]
	metamap validate --scenario <path|builtin:name> [--depth d] [--grid n]
	metamap markov --eps-lr x --eps-rl y [--out dir]

Exit codes: 0 success, 2 the run completed with failed rows (or, for
validate, a failing hypothesis), 1 fatal error.
"""

import argparse
import json
import sys
from logging import getLogger
from os import linesep, makedirs
from os.path import exists, isdir, join
from time import time

from metamap.errors import MetamapError
from metamap.io.scenario import load_scenario
from metamap.io.report import (format_value, plain, write_json, write_markov_csv, write_sweep_report,
							   MARKOV_FIELDS)
from metamap.io.plots import plot_sweep
from metamap.io.h5dump import open_dump, write_eps
from metamap.metastability.mixture import markov_matrix, markov_stationary
from metamap.metastability.sweep import reference_densities, sweep
from metamap.model.hypotheses import report_as_dict, validate_hypotheses
from metamap.model.interval_map import Interval
from metamap.model.perturbation import instantiate
from metamap.spectral.power import invariant_density, second_eigenpair
from metamap.transfer.ulam import build_ulam, from_dense

log = getLogger(__name__)

LOGFILE = 'metamap.log'
DUMPFILE = 'ulam_dump.h5'

EXIT_OK = 0
EXIT_FATAL = 1
EXIT_DEGRADED = 2


def write_log(logfilename, line):
	"""Append a tab-indented line to the run log."""
	with open(logfilename, "a") as f:
		f.write(linesep + "\t" + line)


def _prepare_outdir(outdir):
	if not exists(outdir):
		makedirs(outdir)
	if not isdir(outdir):
		raise IOError("%s is not a directory" % outdir)
	return join(outdir, LOGFILE)


def _eps_arg(text):
	return [s.strip() for s in text.split(',') if s.strip()]


def eps0_simplicity(family, n, tol):
	"""Simplicity check of the leading eigenvalue of T_0 (two invariant halves: expected False)."""
	fixed = invariant_density(build_ulam(family.base, n), tol, split=family.boundary_b)
	return {'leading_simple': fixed.leading_simple, 'residual': fixed.residual}


def _markov_row(eps_lr, eps_rl, tol):
	alpha, rho = markov_stationary(eps_lr, eps_rl)
	P = from_dense(markov_matrix(eps_lr, eps_rl))
	fixed = invariant_density(P, tol)
	rho_power, _ = second_eigenpair(P, fixed.phi, Interval(0.0, 0.5), tol)
	# phi holds densities on two cells of width 1/2:
	return (eps_lr, eps_rl, alpha, rho, 0.5 * fixed.phi[0], rho_power)


def run_markov(pairs, outdir, tol):
	logfilename = _prepare_outdir(outdir)
	rows = [_markov_row(lr, rl, tol) for lr, rl in pairs]
	write_markov_csv(outdir, rows)
	write_json(join(outdir, 'markov.json'), {'rows': [dict(zip(MARKOV_FIELDS, r)) for r in rows]})
	for r in rows:
		write_log(logfilename, "eps_lr = %s, eps_rl = %s: alpha = %s, rho = %s"
				  % tuple(format_value(v) for v in r[:4]))
	return EXIT_OK


def run(scenario, outdir=None, jobs=1, tol=None, dump=False):
	"""Run the full sweep of a scenario and write every report.

	Parameters
	----------
	scenario : Scenario
		As returned by load_scenario.
	outdir : string, optional
		Output folder, the scenario's by default.
	jobs : int
		Worker processes of the sweep.
	tol : double, optional
		Solver tolerance overriding the scenario option.
	dump : boolean
		Also write the HDF5 debug dump of every Ulam matrix.

	Returns
	-------
	The exit code (0 or 2). Fatal errors propagate.

	"""
	outdir = outdir or scenario.output
	if scenario.kind == 'markov':
		return run_markov(scenario.pairs, outdir, tol or scenario.options['tol'])

	logfilename = _prepare_outdir(outdir)
	t0 = time()
	options = dict(scenario.options)
	if tol is not None:
		options['tol'] = tol
	family = scenario.family
	n = scenario.n

	write_log(logfilename, "%s: n = %d, eps = %s" % (scenario.name, n, ", ".join(repr(e) for e in scenario.eps_list)))
	warnings = list(scenario.warnings)

	reference = reference_densities(family, n, options['closed_form_reference'], options['tol'],
									cachepath=join(outdir, 'cache'))
	hyp = validate_hypotheses(family, options['depth'], reference[0], reference[1])
	warnings.extend(hyp.diagnostics)
	simple0 = eps0_simplicity(family, n, options['tol'])

	result = sweep(family, scenario.eps_list, n, options, jobs, reference)

	for row, det in zip(result.rows, result.details):
		status = "FAILED (%s)" % row.message if row.failed else "done"
		write_log(logfilename, "eps = %r %s (CPU: %0.3f sec)." % (row.eps, status, det.seconds))
		for w in det.warnings:
			write_log(logfilename, "eps = %r warning: %s" % (row.eps, w))
	for w in warnings:
		write_log(logfilename, "warning: %s" % w)

	write_sweep_report(outdir, scenario, result, report_as_dict(hyp), simple0, warnings)
	plot_sweep(outdir, result, n)

	if dump:
		f = open_dump(join(outdir, DUMPFILE), scenario.name, n)
		try:
			for det in result.details:
				P = build_ulam(instantiate(family, det.eps), n)
				write_eps(f, det.eps, P, {'phi': det.phi, 'psi': det.psi, 'mixture': det.mixture})
		finally:
			f.close()

	failed = sum(1 for r in result.rows if r.failed)
	write_log(logfilename, "%s completed in %0.3f sec, %d failed rows." % (scenario.name, time() - t0, failed))
	return EXIT_DEGRADED if failed else EXIT_OK


def validate(scenario, depth=None, out=None):
	"""Print the hypothesis report of a scenario as JSON. Returns the exit code."""
	out = out or sys.stdout
	if scenario.kind == 'markov':
		raise MetamapError("validate needs a map scenario, %s is a Markov chain" % scenario.name)
	options = scenario.options
	reference = reference_densities(scenario.family, scenario.n, options['closed_form_reference'], options['tol'])
	rep = validate_hypotheses(scenario.family, depth or options['depth'], reference[0], reference[1])
	json.dump(plain(report_as_dict(rep)), out, sort_keys=True, indent=1)
	out.write('\n')
	checks = (rep.passes_I2, rep.passes_I3, rep.passes_I4a, rep.passes_P2, rep.halves_invariant)
	return EXIT_OK if all(c is not False for c in checks) else EXIT_DEGRADED


def _parser():
	p = argparse.ArgumentParser(prog='metamap', description='Metastability studies of piecewise expanding '
							   'interval maps through Ulam discretizations.')
	sub = p.add_subparsers(dest='command')

	r = sub.add_parser('run', help='sweep a scenario and write the reports')
	r.add_argument('--scenario', required=True, help='scenario file or builtin:<name>')
	r.add_argument('--eps', type=_eps_arg, default=None, help='comma-separated eps values (decreasing)')
	r.add_argument('--grid', type=int, default=None, help='number of Ulam cells')
	r.add_argument('--jobs', type=int, default=1, help='worker processes')
	r.add_argument('--out', default=None, help='output folder')
	r.add_argument('--tol', type=float, default=None, help='solver tolerance')
	r.add_argument('--dump', action='store_true', help='write the HDF5 dump of the Ulam matrices')

	v = sub.add_parser('validate', help='hypothesis report only')
	v.add_argument('--scenario', required=True)
	v.add_argument('--grid', type=int, default=None)
	v.add_argument('--depth', type=int, default=None)

	m = sub.add_parser('markov', help='the two-state chain')
	m.add_argument('--eps-lr', type=float, required=True)
	m.add_argument('--eps-rl', type=float, required=True)
	m.add_argument('--out', default=None, help='also write markov.csv there')
	return p


def main(argv=None):
	args = _parser().parse_args(argv)
	if args.command is None:
		_parser().print_usage()
		return EXIT_FATAL

	try:
		if args.command == 'markov':
			if args.out is not None:
				return run_markov([(args.eps_lr, args.eps_rl)], args.out, 1e-10)
			alpha, rho = markov_stationary(args.eps_lr, args.eps_rl)
			sys.stdout.write("alpha = %s\nrho = %s\n" % (format_value(alpha), format_value(rho)))
			return EXIT_OK

		scenario = load_scenario(args.scenario, eps=getattr(args, 'eps', None), grid=args.grid,
								 output=getattr(args, 'out', None))
		if args.command == 'validate':
			return validate(scenario, args.depth)
		return run(scenario, jobs=args.jobs, tol=args.tol, dump=args.dump)

	except MetamapError as e:
		log.error("%s: %s" % (e.__class__.__name__, e))
		return EXIT_FATAL
	except (IOError, OSError) as e:
		log.error("I/O error: %s" % e)
		return EXIT_FATAL


if __name__ == "__main__":
	raise SystemExit(main())

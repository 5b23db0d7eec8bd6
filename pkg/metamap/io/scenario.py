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

"""Scenario loading: JSON files and built-in names.

A scenario file is a JSON object::

	{
	 "name": "my_family",
	 "kind": "map",                       (or "markov")
	 "boundary": "1/2",
	 "branches": [
	  {"domain": ["0", "1/6"], "slope": "3", "intercept": "0",
	   "slope_eps": "0", "intercept_eps": "0"},
	  ...
	 ],
	 "holes": [{"at": "1/3", "a": "1", "b": "0"}, ...],     (optional)
	 "eps": ["0.02", "0.01"],
	 "grid": 3840,                                          (optional)
	 "options": {"spectral": true, "escape": true, "saltus": true,
	             "depth": 8, "closed_form_reference": "lebesgue"},
	 "output": "out/my_family"                              (optional)
	}

Rationals are strings accepted by fractions.Fraction ("1/6", "0.02", "3") or
plain JSON numbers. A markov scenario only carries "name", "kind" and "eps",
the latter as a list of [eps_lr, eps_rl] pairs.
"""

import json
from collections import namedtuple
from fractions import Fraction
from logging import getLogger
from os.path import basename, splitext

from jsonschema import Draft7Validator

from metamap.errors import MetamapError, ScenarioError
from metamap.model.interval_map import affine_branch, make_map
from metamap.model.perturbation import affine_eps, make_family
from metamap.metastability.sweep import DEFAULT_OPTIONS
from metamap.io.builtins import BUILTINS
from metamap.utils.grid import alignmentModulus, resolutionFloor, suggestGrid

log = getLogger(__name__)

BUILTIN_PREFIX = 'builtin:'
KINDS = ('map', 'markov')

# Strings fractions.Fraction parses: "3", "-1/6", "0.02", "1e-3"
RATIONAL_PATTERN = r'^\s*[-+]?(\d+/0*[1-9]\d*|(\d+(\.\d*)?|\.\d+)([eE][-+]?\d+)?)\s*$'
NONNEGATIVE_PATTERN = r'^\s*\+?(\d+/0*[1-9]\d*|(\d+(\.\d*)?|\.\d+)([eE][-+]?\d+)?)\s*$'

RATIONAL = {'anyOf': [
	{'type': 'number'},
	{'type': 'string', 'pattern': RATIONAL_PATTERN},
]}
NONNEGATIVE = {'anyOf': [
	{'type': 'number', 'minimum': 0},
	{'type': 'string', 'pattern': NONNEGATIVE_PATTERN},
]}


def _option_schema(default):
	if isinstance(default, bool):
		return {'type': 'boolean'}
	if isinstance(default, int):
		return {'type': 'integer', 'minimum': 1}
	if isinstance(default, float):
		return {'type': 'number', 'exclusiveMinimum': 0}
	return {'enum': [None, 'lebesgue']}


COMMON_PROPERTIES = {
	'name': {'type': 'string', 'minLength': 1},
	'kind': {'enum': list(KINDS)},
	'output': {'type': 'string'},
}

BRANCH_SCHEMA = {
	'type': 'object',
	'required': ['domain', 'slope', 'intercept'],
	'additionalProperties': False,
	'properties': {
		'domain': {'type': 'array', 'items': RATIONAL, 'minItems': 2, 'maxItems': 2},
		'slope': RATIONAL,
		'intercept': RATIONAL,
		'slope_eps': RATIONAL,
		'intercept_eps': RATIONAL,
	},
}

HOLE_SCHEMA = {
	'type': 'object',
	'required': ['at', 'a', 'b'],
	'additionalProperties': False,
	'properties': {'at': RATIONAL, 'a': NONNEGATIVE, 'b': NONNEGATIVE},
}

MAP_SCHEMA = {
	'type': 'object',
	'required': ['boundary', 'branches'],
	'additionalProperties': False,
	'properties': dict(COMMON_PROPERTIES, **{
		'boundary': RATIONAL,
		'branches': {'type': 'array', 'minItems': 1, 'items': BRANCH_SCHEMA},
		'holes': {'type': 'array', 'items': HOLE_SCHEMA},
		'eps': {'type': 'array', 'items': RATIONAL},
		'grid': {'type': 'integer', 'minimum': 1},
		'options': {
			'type': 'object',
			'additionalProperties': False,
			'properties': dict((k, _option_schema(v)) for k, v in DEFAULT_OPTIONS.items()),
		},
	}),
}

MARKOV_SCHEMA = {
	'type': 'object',
	'required': ['eps'],
	'additionalProperties': False,
	'properties': dict(COMMON_PROPERTIES, **{
		'eps': {
			'type': 'array',
			'minItems': 1,
			'items': {'type': 'array', 'items': NONNEGATIVE, 'minItems': 2, 'maxItems': 2},
		},
	}),
}


Scenario = namedtuple('Scenario', 'name kind family eps_list n options output pairs warnings source')


def field_path(path):
	"""Render a schema error path such as ['branches', 2, 'slope'] as 'branches[2].slope'."""
	out = ''
	for p in path:
		if isinstance(p, int):
			out += '[%d]' % p
		else:
			out += ('.' if out else '') + p
	return out or '(top level)'


def schema_problems(obj, schema):
	"""One 'path: message' line per schema violation."""
	errors = sorted(Draft7Validator(schema).iter_errors(obj),
					key=lambda e: [str(p) for p in e.absolute_path])
	return ["%s: %s" % (field_path(e.absolute_path), e.message) for e in errors]


def _rational(value):
	if isinstance(value, float):
		return Fraction(repr(value))
	return Fraction(value)


def _flagged(problems, field):
	return any(p.startswith(field) for p in problems)


def _tiling(branches, problems):
	"""Check that the branch domains tile [0,1], exactly on the rationals.

	Returns the critical points, 0 and 1 included.
	"""
	doms = [(i, _rational(br['domain'][0]), _rational(br['domain'][1])) for i, br in enumerate(branches)]
	for i, lo, hi in doms:
		if not lo < hi:
			problems.append("branches[%d].domain: empty domain [%s, %s]" % (i, lo, hi))
	if doms[0][1] != 0:
		problems.append("branches[0].domain: must start at 0, starts at %s" % doms[0][1])
	if doms[-1][2] != 1:
		problems.append("branches[%d].domain: must end at 1, ends at %s" % (doms[-1][0], doms[-1][2]))
	for (i, lo, hi), (j, lo2, hi2) in zip(doms[:-1], doms[1:]):
		if lo2 < hi:
			problems.append("branches[%d].domain overlaps branches[%d].domain ([%s, %s] and [%s, %s])"
							% (j, i, lo, hi, lo2, hi2))
		elif lo2 > hi:
			problems.append("branches[%d].domain and branches[%d].domain leave the gap (%s, %s)"
							% (i, j, hi, lo2))
	return [lo for _, lo, _ in doms] + [Fraction(1)]


def _eps_list(raw, problems):
	out = []
	for i, e in enumerate(raw):
		q = _rational(e)
		if not q > 0:
			problems.append("eps[%d]: must be positive" % i)
		elif out and not float(q) < out[-1]:
			problems.append("eps[%d]: eps values must be strictly decreasing" % i)
		out.append(float(q))
	return out


def parse_scenario(obj, source='<dict>', eps=None, grid=None, output=None):
	"""Validate a scenario object and build the Scenario.

	The structure is checked against MAP_SCHEMA or MARKOV_SCHEMA; the
	tiling of [0,1] by the branch domains, the eps ordering and the grid
	rule are checked afterwards.

	Parameters
	----------
	obj : dict
		Decoded JSON object.
	source : string
		Where the object came from, for messages.
	eps, grid, output : optional
		Command-line overrides of the corresponding fields.

	Returns
	-------
	A Scenario. All problems found are raised together as a ScenarioError.

	"""
	if not isinstance(obj, dict):
		raise ScenarioError("%s: top level must be a JSON object" % source)
	obj = dict(obj)
	for key, val in (('eps', eps), ('grid', grid), ('output', output)):
		if val is not None:
			obj[key] = val

	kind = obj.get('kind', 'map')
	if kind not in KINDS:
		raise ScenarioError("kind: expected one of %s, got %r" % (", ".join(KINDS), kind))
	problems = schema_problems(obj, MARKOV_SCHEMA if kind == 'markov' else MAP_SCHEMA)

	name = obj.get('name')
	if _flagged(problems, 'name') or not name:
		name = splitext(basename(source))[0] or 'scenario'
	out_dir = obj.get('output', name)

	if kind == 'markov':
		if problems:
			raise ScenarioError(problems)
		pairs = [(float(_rational(lr)), float(_rational(rl))) for lr, rl in obj['eps']]
		return Scenario(name, kind, None, [], 2, dict(DEFAULT_OPTIONS), out_dir, pairs, [], source)

	eps_list = []
	if not _flagged(problems, 'eps'):
		eps_list = _eps_list(obj.get('eps', []), problems)
	points = None
	if not _flagged(problems, 'branches') and 'branches' in obj:
		points = _tiling(obj['branches'], problems)
	bq = None
	if not _flagged(problems, 'boundary') and 'boundary' in obj:
		bq = _rational(obj['boundary'])
		if not 0 < bq < 1:
			problems.append("boundary: must lie in (0,1), got %s" % bq)
	if problems:
		raise ScenarioError(problems)

	plan = dict(DEFAULT_OPTIONS)
	for key, val in obj.get('options', {}).items():
		plan[key] = float(val) if isinstance(DEFAULT_OPTIONS[key], float) else val
	branches = []
	coeffs = []
	for br in obj['branches']:
		lo, hi = (_rational(v) for v in br['domain'])
		branches.append(affine_branch(lo, hi, _rational(br['slope']), _rational(br['intercept'])))
		coeffs.append(affine_eps(_rational(br.get('slope_eps', 0)), _rational(br.get('intercept_eps', 0))))
	holes = None
	if obj.get('holes'):
		holes = dict((float(_rational(h['at'])), (float(_rational(h['a'])), float(_rational(h['b']))))
					 for h in obj['holes'])

	try:
		base = make_map(branches)
		family = make_family(base, coeffs, float(bq), holes, name)
	except MetamapError as e:
		raise ScenarioError("branches: %s" % e)

	# Grid rule: critical points (and b) on cell boundaries, >= 12 / eps_min cells.
	warnings = []
	align = points + [bq]
	q = alignmentModulus(align)
	n = obj.get('grid')
	if n is None:
		n = suggestGrid(min(eps_list), align) if eps_list else q * max(1, 64 // q)
	n = int(n)
	if n % q:
		raise ScenarioError("grid: n = %d is not a multiple of %d, the common denominator of the "
							"critical points and b" % (n, q))
	if eps_list and n < resolutionFloor(min(eps_list)):
		msg = ("grid: n = %d is below 12 / eps_min = %d; the smallest holes span fewer than 12 cells"
			   % (n, resolutionFloor(min(eps_list))))
		log.warning(msg)
		warnings.append(msg)

	return Scenario(name, kind, family, eps_list, n, plan, out_dir, [], warnings, source)


def load_scenario(path, eps=None, grid=None, output=None):
	"""Load a scenario from a JSON file or from 'builtin:<name>'.

	Raises
	------
	ScenarioError
		With one message per problem; JSON syntax errors cite line and column.

	"""
	if path.startswith(BUILTIN_PREFIX):
		key = path[len(BUILTIN_PREFIX):]
		if key not in BUILTINS:
			raise ScenarioError("unknown builtin %r (known: %s)" % (key, ", ".join(sorted(BUILTINS))))
		return parse_scenario(BUILTINS[key], path, eps, grid, output)

	try:
		with open(path) as f:
			text = f.read()
	except (IOError, OSError) as e:
		raise ScenarioError("%s: cannot read scenario (%s)" % (path, e))
	try:
		obj = json.loads(text)
	except ValueError as e:
		line = getattr(e, 'lineno', None)
		col = getattr(e, 'colno', None)
		if line is not None:
			raise ScenarioError("%s: line %d, column %d: %s" % (path, line, col, getattr(e, 'msg', e)))
		raise ScenarioError("%s: %s" % (path, e))
	return parse_scenario(obj, path, eps, grid, output)

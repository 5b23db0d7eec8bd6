import json

import pytest

from metamap.io.builtins import BUILTINS
from metamap.io.report import format_value, plain, write_sweep_report
from metamap.io.scenario import parse_scenario
from metamap.metastability.sweep import SweepRow, sweep


@pytest.fixture(scope='module')
def scenario():
	return parse_scenario(BUILTINS['family_a'], 'builtin:family_a', eps=["0.02", "0.01"], grid=120)


@pytest.fixture(scope='module')
def result(scenario):
	return sweep(scenario.family, scenario.eps_list, scenario.n, scenario.options)


def test_format_value():
	assert format_value(0.1) == '0.10000000000000001'
	assert format_value(float('nan')) == 'nan'
	assert format_value(float('inf')) == 'inf'
	assert format_value(True) == 'true'
	assert format_value(None) == ''


def test_plain():
	assert plain({'a': float('nan'), 'b': [float('inf'), 1]}) == {'a': None, 'b': ['inf', 1]}


def test_sweep_files(tmp_path, scenario, result):
	paths = write_sweep_report(str(tmp_path), scenario, result, None, {'leading_simple': False})
	names = sorted(p.split('/')[-1] for p in paths)
	assert names == ['density_0.csv', 'density_1.csv', 'saltus.csv', 'sweep.csv', 'sweep.json']

	raw = (tmp_path / 'sweep.csv').read_bytes()
	assert b'\r' not in raw
	lines = raw.decode().splitlines()
	assert lines[0] == ','.join(SweepRow._fields)
	assert len(lines) == 1 + len(scenario.eps_list)

	dens = (tmp_path / 'density_1.csv').read_text().splitlines()
	assert dens[0] == 'x,phi,mixture,psi'
	assert len(dens) == 1 + 120

	saltus = (tmp_path / 'saltus.csv').read_text().splitlines()
	assert saltus[0] == 'eps,location,size,depth'

	doc = json.loads((tmp_path / 'sweep.json').read_text())
	assert doc['alpha'] == pytest.approx(0.25)
	assert doc['eps0_simplicity'] == {'leading_simple': False}
	assert len(doc['rows']) == 2
	assert doc['rows'][0]['failed'] is False


def test_reports_are_reproducible(tmp_path, scenario, result):
	again = sweep(scenario.family, scenario.eps_list, scenario.n, scenario.options)
	(tmp_path / 'a').mkdir()
	(tmp_path / 'b').mkdir()
	write_sweep_report(str(tmp_path / 'a'), scenario, result)
	write_sweep_report(str(tmp_path / 'b'), scenario, again)
	for name in ('sweep.csv', 'density_0.csv', 'saltus.csv'):
		assert (tmp_path / 'a' / name).read_bytes() == (tmp_path / 'b' / name).read_bytes()

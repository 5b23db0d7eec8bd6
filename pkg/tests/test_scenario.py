import json

import pytest

from metamap.errors import ScenarioError
from metamap.io.builtins import BUILTINS
from metamap.io.scenario import load_scenario, parse_scenario


def _write(tmp_path, obj, name='scn.json'):
	path = tmp_path / name
	path.write_text(obj if isinstance(obj, str) else json.dumps(obj))
	return str(path)


def _doubling_like():
	return {
		"name": "quad",
		"boundary": "1/2",
		"branches": [
			{"domain": ["0", "1/4"], "slope": "2", "intercept": "0"},
			{"domain": ["1/4", "1/2"], "slope": "2", "intercept": "-1/2", "intercept_eps": "2"},
			{"domain": ["1/2", "3/4"], "slope": "2", "intercept": "-1/2", "intercept_eps": "-1"},
			{"domain": ["3/4", "1"], "slope": "2", "intercept": "-1"},
		],
		"eps": ["0.01", "0.005"],
		"grid": 400,
	}


def test_builtin_defaults():
	scn = load_scenario('builtin:family_a')
	assert scn.kind == 'map'
	assert scn.n == 3840
	assert scn.eps_list == [0.02, 0.01, 0.005, 0.0025]
	assert scn.options['closed_form_reference'] == 'lebesgue'
	assert scn.family.hole_coefficients == {1 / 3.: (1.0, 0.0), 2 / 3.: (0.0, 1 / 3.)}
	# 3840 < 12 / 0.0025
	assert len(scn.warnings) == 1


def test_builtin_markov():
	scn = load_scenario('builtin:markov2')
	assert scn.kind == 'markov'
	assert scn.pairs[0] == (0.01, 0.03)


def test_unknown_builtin():
	with pytest.raises(ScenarioError) as e:
		load_scenario('builtin:family_z')
	assert 'family_a' in str(e.value)


def test_overrides():
	scn = load_scenario('builtin:family_b', eps=["0.01"], grid=600, output='elsewhere')
	assert scn.eps_list == [0.01]
	assert scn.n == 600
	assert scn.output == 'elsewhere'


def test_file_scenario(tmp_path):
	scn = load_scenario(_write(tmp_path, _doubling_like()))
	assert scn.name == 'quad'
	assert scn.n == 400
	assert len(scn.family.base.branches) == 4
	assert scn.family.hole_coefficients is None


def test_overlapping_branches(tmp_path):
	obj = _doubling_like()
	obj['branches'][1]['domain'] = ["1/5", "1/2"]
	with pytest.raises(ScenarioError) as e:
		load_scenario(_write(tmp_path, obj))
	assert any('branches[1].domain overlaps branches[0].domain' in p for p in e.value.problems)


def test_field_paths_are_collected(tmp_path):
	obj = _doubling_like()
	obj['branches'][2]['slope'] = "two"
	obj['eps'] = ["0.01", "0.02"]
	with pytest.raises(ScenarioError) as e:
		load_scenario(_write(tmp_path, obj))
	problems = e.value.problems
	assert any(p.startswith('branches[2].slope') for p in problems)
	assert any(p.startswith('eps[1]') for p in problems)


def test_json_syntax_error(tmp_path):
	with pytest.raises(ScenarioError) as e:
		load_scenario(_write(tmp_path, '{\n "name": "x",\n "eps": [0.1,]\n}'))
	assert 'line 3' in str(e.value)


def test_unaligned_grid(tmp_path):
	obj = _doubling_like()
	obj['grid'] = 402
	with pytest.raises(ScenarioError) as e:
		load_scenario(_write(tmp_path, obj))
	assert 'multiple of 4' in str(e.value)


def test_image_escape_is_reported(tmp_path):
	obj = _doubling_like()
	obj['branches'][0]['slope'] = "5"
	with pytest.raises(ScenarioError) as e:
		load_scenario(_write(tmp_path, obj))
	assert str(e.value).startswith('branches:')


def test_unknown_option(tmp_path):
	obj = _doubling_like()
	obj['options'] = {'spectral': 'yes', 'colour': True}
	with pytest.raises(ScenarioError) as e:
		load_scenario(_write(tmp_path, obj))
	assert len(e.value.problems) == 2


def test_default_grid_follows_rule():
	obj = dict(BUILTINS['family_a'])
	del obj['grid']
	scn = parse_scenario(obj)
	assert scn.n == 4800
	assert scn.warnings == []


def test_schema_errors_name_the_field(tmp_path):
	obj = _doubling_like()
	obj['colour'] = 'red'
	obj['grid'] = "400"
	obj['holes'] = [{"at": "1/2", "a": "-1", "b": "0"}]
	with pytest.raises(ScenarioError) as e:
		load_scenario(_write(tmp_path, obj))
	problems = e.value.problems
	assert any(p.startswith('(top level):') and 'colour' in p for p in problems)
	assert any(p.startswith('grid:') for p in problems)
	assert any(p.startswith('holes[0].a:') for p in problems)
	assert len(problems) == 3


def test_markov_pairs_are_checked():
	with pytest.raises(ScenarioError) as e:
		parse_scenario({"kind": "markov", "eps": [["0.01"], ["0.01", True]]}, 'pairs.json')
	assert any(p.startswith('eps[0]:') for p in e.value.problems)
	assert any(p.startswith('eps[1][1]:') for p in e.value.problems)


def test_small_grid_is_accepted(tmp_path):
	obj = _doubling_like()
	obj['grid'] = 4
	scn = load_scenario(_write(tmp_path, obj))
	assert scn.n == 4
	assert len(scn.warnings) == 1

import pytest

from metamap.io.builtins import BUILTINS
from metamap.io.scenario import parse_scenario
from metamap.model.interval_map import affine_branch, make_map


@pytest.fixture(scope='session')
def family_a():
	return parse_scenario(BUILTINS['family_a'], 'builtin:family_a').family


@pytest.fixture(scope='session')
def family_b():
	return parse_scenario(BUILTINS['family_b'], 'builtin:family_b').family


@pytest.fixture(scope='session')
def t0_a(family_a):
	return family_a.base


@pytest.fixture(scope='session')
def doubling():
	return make_map([affine_branch(0.0, 0.5, 2.0, 0.0), affine_branch(0.5, 1.0, 2.0, -1.0)])

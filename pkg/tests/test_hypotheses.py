import pytest

from metamap.errors import DomainError
from metamap.model.hypotheses import report_as_dict, validate_hypotheses
from metamap.model.interval_map import affine_branch, make_map
from metamap.model.perturbation import make_family
from metamap.transfer.density import indicator


def _references(n=60):
	return indicator(n, 0.0, 0.5, 2.0), indicator(n, 0.5, 1.0, 2.0)


def test_family_a_passes(family_a):
	phi_l, phi_r = _references()
	rep = validate_hypotheses(family_a, 8, phi_l, phi_r)
	assert rep.min_expansion == 3.0
	assert rep.distortion == 0.0
	assert rep.passes_I2
	assert rep.passes_I3
	assert rep.passes_I4a
	assert rep.passes_P2
	assert rep.halves_invariant
	assert rep.holes == pytest.approx([1 / 6., 1 / 3., 2 / 3., 5 / 6.])
	assert rep.diagnostics == []
	assert len(rep.assumed) == 2


def test_family_a_without_references(family_a):
	rep = validate_hypotheses(family_a)
	assert rep.passes_I3 is None


def test_family_b_fails_boundary_condition(family_b):
	rep = validate_hypotheses(family_b, 8)
	assert not rep.passes_P2
	assert any(line.startswith("(P2b) fails") for line in rep.diagnostics)
	# the critical value T_0(1/2+) = 1 is itself an infinitesimal hole
	assert not rep.passes_I2


def test_slope_two_fails_expansion():
	base = make_map([affine_branch(0.0, 0.25, 2.0, 0.0), affine_branch(0.25, 0.5, -2.0, 1.0),
					 affine_branch(0.5, 0.75, 2.0, -0.5), affine_branch(0.75, 1.0, -2.0, 2.5)])
	rep = validate_hypotheses(make_family(base, [None] * 4, 0.5), 4)
	assert rep.min_expansion == 2.0
	assert not rep.passes_I4a
	assert any("(I4a)" in line for line in rep.diagnostics)


def test_depth_below_one(family_a):
	with pytest.raises(DomainError):
		validate_hypotheses(family_a, 0)


def test_report_as_dict(family_a):
	d = report_as_dict(validate_hypotheses(family_a, 3))
	assert d['I2_depth'] == 3
	assert isinstance(d['periodic_critical'], list)

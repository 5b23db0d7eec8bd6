import pytest
from numpy import ones

from metamap.bv.jump_decay import jump_decay_profile
from metamap.bv.postcritical import postcritical_hierarchy
from metamap.bv.saltus import saltus_decompose
from metamap.transfer.density import indicator
from metamap.transfer.lasota_yorke import lasota_yorke_constants


def test_no_jumps(t0_a):
	hier = postcritical_hierarchy(t0_a, 3)
	rows = jump_decay_profile(saltus_decompose(ones(60), hier, 1.0), hier, lasota_yorke_constants(t0_a), 4)
	assert [r.m for r in rows] == [0, 1, 2, 3, 4]
	assert all(r.tail == 0.0 and r.passed for r in rows)


def test_depth_one_jump_leaves_the_tail(t0_a):
	hier = postcritical_hierarchy(t0_a, 3)
	dec = saltus_decompose(indicator(60, 0.0, 0.5, 2.0), hier, 1.0)
	rows = jump_decay_profile(dec, hier, lasota_yorke_constants(t0_a), 2)
	assert rows[0].tail == pytest.approx(2.0)
	assert rows[0].bound == pytest.approx(72.0)
	assert rows[1].tail == 0.0
	assert rows[2].bound == pytest.approx(8.0)


def test_unmatched_jumps_stay_in_every_tail(t0_a):
	hier = postcritical_hierarchy(t0_a, 3)
	dec = saltus_decompose(indicator(60, 0.0, 0.25, 1.0), hier, 1.0)
	rows = jump_decay_profile(dec, hier, lasota_yorke_constants(t0_a), 3)
	assert all(r.tail == pytest.approx(1.0) for r in rows)

from fractions import Fraction

from metamap.utils.grid import alignmentModulus, isAligned, resolutionFloor, suggestGrid, upperMultiple


def test_upper_multiple():
	assert upperMultiple(10, 6) == 12
	assert upperMultiple(12, 6) == 12


def test_alignment_modulus():
	points = [Fraction(0), Fraction(1, 6), Fraction(1, 3), Fraction(1, 2), Fraction(1)]
	assert alignmentModulus(points) == 6
	assert alignmentModulus(["1/4", "1/6"]) == 12
	assert isAligned(3840, points)
	assert not isAligned(3841, points)


def test_resolution_floor():
	assert resolutionFloor(0.0025) == 4800
	assert resolutionFloor(0.01) == 1200


def test_suggest_grid():
	assert suggestGrid(0.0025, ["1/6"]) == 4800
	assert suggestGrid(0.1, ["1/7"]) == 126

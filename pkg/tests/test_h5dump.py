import h5py
from numpy import allclose, ones

from metamap.io.h5dump import get_dset_chunks, open_dump, read_density, read_triplets, write_eps
from metamap.model.perturbation import instantiate
from metamap.transfer.ulam import build_ulam, dense


def test_chunks():
	assert get_dset_chunks(10) == (10,)
	assert get_dset_chunks(10 ** 6) == (65536,)


def test_dump_and_read_back(tmp_path, family_a):
	P = build_ulam(instantiate(family_a, 0.01), 60)
	path = str(tmp_path / 'dump.h5')
	f = open_dump(path, 'family_a', 60)
	write_eps(f, 0.01, P, {'phi': ones(60), 'psi': None})
	f.close()

	with h5py.File(path, 'r') as f:
		assert f.attrs['n'] == 60
		rows, cols, vals = read_triplets(f, 0.01)
		mat = 0.0 * dense(P)
		mat[rows, cols] = vals
		assert allclose(mat, dense(P))
		assert allclose(read_density(f, 0.01, 'phi'), 1.0)
		assert 'psi' not in f['0.01']['density']

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as hs

from kusub import _kernels, backend_name
from kusub.io import build
from kusub.lattice import SubgroupLattice

BACKENDS = sorted(_kernels.BACKENDS)


def test_compiled_backend_is_default_when_built():
    if "cython" in _kernels.BACKENDS:
        assert backend_name() == "cython"
    else:
        assert backend_name() == "python"


def test_set_backend_round_trip():
    before = backend_name()
    _kernels.set_backend("python")
    assert backend_name() == "python"
    _kernels.set_backend(before)
    assert backend_name() == before
    with pytest.raises(KeyError):
        _kernels.set_backend("fortran")


@pytest.mark.parametrize("expr", ["symmetric(4)", "quaternion(8)", "alternating(5)",
                                  "directProduct(dihedral(6), cyclic(3))"])
def test_backends_build_the_same_lattice(expr):
    G = build(expr)
    lattices = [SubgroupLattice(G, backend=b) for b in BACKENDS]
    for L in lattices[1:]:
        assert L.masks == lattices[0].masks
        assert L.gens == lattices[0].gens


S4 = build("symmetric(4)")


@settings(max_examples=60, deadline=None)
@given(hs.lists(hs.integers(0, S4.order - 1), min_size=1, max_size=3))
def test_kernels_agree_on_random_generators(gens):
    results = []
    for name in BACKENDS:
        k = _kernels.get_backend(name)
        t = k.prepare(S4.table)
        member = np.asarray(k.closure(t, [0], gens, S4.order))
        norm = np.asarray(k.normalizer(t, S4.inverses, member, gens, S4.order))
        results.append((member.tolist(), norm.tolist()))
    assert all(r == results[0] for r in results)
    member = np.array(results[0][0], dtype=bool)
    # closure is closed under the multiplication table
    idx = np.flatnonzero(member)
    assert member[S4.table[np.ix_(idx, idx)]].all()

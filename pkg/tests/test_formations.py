import pytest

import oracles
from conftest import corpus_lattice, lattice
from kusub import formations as fm
from kusub.errors import NotMaximal
from kusub.lattice import SubgroupLattice
from kusub.perm import is_prime, quotient


def oracle_subgroup_sets(L):
    G = L.group
    return {frozenset(G.element(x).af for x in L.elements[i]) for i in range(len(L))}


@pytest.mark.parametrize("name", ["S4", "A4", "SL2_3", "D24", "S3xC2xC2", "Q8xC3", "Dic12", "F21"])
def test_supersolubility_matches_series_search(name):
    L = corpus_lattice(name)
    subs = oracle_subgroup_sets(L)
    G = L.group
    for i in range(len(L)):
        k = frozenset(G.element(x).af for x in L.elements[i])
        assert fm.is_supersoluble(L, i) == oracles.supersoluble(k, subs)


@pytest.mark.parametrize("name, expected", [
    ("C1", True), ("C6", True), ("S3xS3", True), ("D8xC3", True), ("F42", True),
    ("C2xC3xC5xC7", True), ("A4", False), ("S4", False), ("SL2_3", False), ("A5", False),
])
def test_supersoluble_examples(name, expected):
    assert fm.is_supersoluble(corpus_lattice(name)) is expected


@pytest.mark.parametrize("name, order", [("A4", 4), ("S4", 4), ("SL2_3", 8), ("C6", 1),
                                         ("A5", 60), ("A4xC5", 4), ("C7^2_S3", 49)])
def test_u_residual_order(name, order):
    L = corpus_lattice(name)
    assert L.order(fm.u_residual(L)) == order


def test_u_residual_is_least_supersoluble_quotient(corpus):
    for _, L in corpus:
        r = fm.u_residual(L)
        for n in L.normal_subgroups_of(L.top):
            assert fm.section_supersoluble(L, L.top, n) == L.leq(r, n)


@pytest.mark.parametrize("name, mns, sdh, schmidt", [
    ("A4", True, True, True),
    ("SL2_3", True, False, True),
    ("S4", False, False, False),
    ("C5^2_C3", True, True, True),
    ("C7^2_S3", True, True, False),
    ("C6", False, False, False),
])
def test_minimal_nonsupersoluble_families(name, mns, sdh, schmidt):
    L = corpus_lattice(name)
    prof = fm.u_profile(L)
    assert prof.minimal_nonsupersoluble is mns
    assert prof.sdh is sdh
    assert prof.schmidt is schmidt
    assert fm.is_supersoluble_or_sdh(L) is (prof.supersoluble or sdh)


def test_abelian_cyclic_exponent():
    Q8 = lattice("quaternion(8)")
    assert fm.is_miller_moreno(Q8)
    assert not fm.is_abelian(Q8) and fm.exponent(Q8) == 4
    C12 = lattice("cyclic(12)")
    assert fm.is_cyclic(C12) and not fm.is_primary_cyclic(C12)
    assert fm.is_primary_cyclic(lattice("cyclic(9)"))
    assert not fm.is_miller_moreno(lattice("symmetric(4)"))
    assert fm.is_miller_moreno(lattice("symmetric(3)"))


def test_frattini_residual_prime():
    assert fm.frattini_residual_order_prime(corpus_lattice("SL2_3"))
    assert not fm.frattini_residual_order_prime(corpus_lattice("A4"))
    # trivial residual
    assert not fm.frattini_residual_order_prime(corpus_lattice("C6"))


@pytest.mark.parametrize("name", ["S4", "A4", "SL2_3", "GL2_3", "A4xC2"])
def test_u_normal_maximal_against_quotient(name):
    L = corpus_lattice(name)
    for m in L.maximal_in(L.top):
        Q = quotient(L.group, L.elements[L.core(m)])
        expected = fm.is_supersoluble(SubgroupLattice(Q, cap=Q.order))
        assert fm.is_u_normal_maximal(L, m) == expected
        # soluble groups: U-normal exactly when the index is prime
        assert expected == is_prime(L.n // L.order(m))


def test_u_normal_maximal_rejects_non_maximal():
    L = lattice("symmetric(4)")
    with pytest.raises(NotMaximal):
        fm.is_u_normal_maximal(L, 0)


def test_section_needs_normality():
    L = lattice("symmetric(3)")
    t = next(i for i in range(len(L)) if L.order(i) == 2)
    with pytest.raises(ValueError):
        fm.section_supersoluble(L, L.top, t)

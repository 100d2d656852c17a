import pytest

from conftest import corpus_lattice, lattice, sub_by_gens
from kusub import structure as st
from kusub.errors import (BadOrdering, NotNormal, PrimeDoesNotDivide,
                          TrivialGroup)


def orders(L, idx):
    return [L.order(i) for i in idx]


def test_s4_series():
    L = lattice("symmetric(4)")
    assert st.chief_series(L).factor_orders == (4, 3, 2)
    assert orders(L, st.derived_series(L)) == [24, 12, 4, 1]
    assert L.order(st.fitting(L)) == 4
    assert L.order(st.frattini(L)) == 1
    assert L.order(st.center(L)) == 1
    assert L.order(st.o_p(L, 2)) == 4
    assert L.order(st.o_p(L, 3)) == 1
    assert st.is_soluble(L) and not st.is_nilpotent(L)


def test_sl23_characteristic_subgroups():
    L = corpus_lattice("SL2_3")
    assert L.order(st.center(L)) == 2
    assert L.order(st.frattini(L)) == 2
    assert L.order(st.derived_subgroup(L)) == 8
    assert L.order(st.fitting(L)) == 8
    assert orders(L, st.minimal_normal_subgroups(L)) == [2]


def test_gl23():
    L = corpus_lattice("GL2_3")
    assert L.order(st.derived_subgroup(L)) == 24
    assert L.order(st.center(L)) == 2
    assert st.is_soluble(L)


def test_a5_is_insoluble_and_simple():
    L = lattice("alternating(5)")
    assert not st.is_soluble(L)
    assert st.minimal_normal_subgroups(L) == [L.top]
    assert st.derived_subgroup(L) == L.top
    assert st.hall_subgroup(L, (3, 5)) is None
    assert st.chief_series(L).factor_orders == (60,)


def test_nilpotent_groups():
    for expr in ("dihedral(4)", "quaternion(8)", "cyclic(12)",
                 "directProduct(quaternion(8), cyclic(3))"):
        assert st.is_nilpotent(lattice(expr))
    assert L_order_frattini("quaternion(8)") == 2
    assert L_order_frattini("dihedral(4)") == 2


def L_order_frattini(expr):
    L = lattice(expr)
    return L.order(st.frattini(L))


def test_within_argument():
    L = lattice("symmetric(4)")
    a4 = next(i for i in range(len(L)) if L.order(i) == 12)
    assert orders(L, st.minimal_normal_subgroups(L, a4)) == [4]
    assert st.chief_series(L, a4).factor_orders == (4, 3)
    assert st.primes_of(L, a4) == [2, 3]


def test_dispersivity():
    A4 = lattice("alternating(4)")
    assert st.dispersive_orderings(A4) == [(2, 3)]
    assert not st.is_ore_dispersive(A4)
    assert st.dispersive_orderings(lattice("symmetric(4)")) == []
    F21 = corpus_lattice("F21")
    assert st.is_ore_dispersive(F21)
    with pytest.raises(BadOrdering):
        st.is_phi_dispersive(A4, (2, 5))


def test_complements():
    L = lattice("symmetric(4)")
    v4 = st.o_p(L, 2)
    comps = st.complements(L, v4)
    assert len(comps) == 4 and all(L.order(c) == 6 for c in comps)
    with pytest.raises(NotNormal):
        st.complements(L, sub_by_gens(L, "(1 2)"))


def test_chief_factor_check():
    L = lattice("symmetric(4)")
    v4 = st.o_p(L, 2)
    a4 = st.derived_subgroup(L)
    assert st.is_chief_factor(L, v4, 0)
    assert st.is_chief_factor(L, a4, v4)
    assert not st.is_chief_factor(L, a4, 0)


def test_errors():
    L = lattice("symmetric(3)")
    with pytest.raises(PrimeDoesNotDivide):
        st.sylow_subgroup(L, 5)
    with pytest.raises(TrivialGroup):
        st.minimal_normal_subgroups(L, 0)
    with pytest.raises(TrivialGroup):
        st.frattini(L, 0)


def test_solubility_over_corpus(corpus):
    insoluble = sorted(name for name, L in corpus if not st.is_soluble(L))
    assert insoluble == ["A5", "S5"]

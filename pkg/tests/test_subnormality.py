import pytest

import oracles
from conftest import corpus_lattice, lattice, sub_by_gens
from kusub import structure as st
from kusub.subnormality import (StepKind, all_n_maximal_ku_subnormal,
                                is_k_u_subnormal, is_subnormal,
                                is_u_subnormal, n_maximal_ku_failures,
                                validate_chain, witness_chain)


def as_sets(L):
    G = L.group
    return [frozenset(G.element(x).af for x in L.elements[i]) for i in range(len(L))]


def subnormal_oracle(h, group, subs):
    reach = {h}
    frontier = [h]
    while frontier:
        x = frontier.pop()
        for y in subs:
            if x < y and y not in reach and oracles.is_normal(x, y):
                reach.add(y)
                frontier.append(y)
    return group in reach


def test_s3_transposition_example():
    L = lattice("symmetric(3)")
    t = sub_by_gens(L, "(1 2)")
    assert not is_subnormal(L, t)
    assert is_k_u_subnormal(L, t)
    chain = witness_chain(L, t)
    assert chain.chain == (t, L.top)
    assert chain.step_kinds == (StepKind.U_QUOTIENT,)
    assert validate_chain(L, chain)


@pytest.mark.parametrize("name", ["S4", "A4", "SL2_3", "D8", "Dic12", "S3xC3", "C2xC2", "F21",
                                  "Q8xC3", "A4xC2"])
def test_predicates_match_chain_search(name):
    L = corpus_lattice(name)
    subs = as_sets(L)
    top = subs[L.top]
    for i, h in enumerate(subs):
        assert is_k_u_subnormal(L, i) == oracles.ku_subnormal(h, top, subs)
        assert is_u_subnormal(L, i) == oracles.ku_subnormal(h, top, subs, kegel=False)
        assert is_subnormal(L, i) == subnormal_oracle(h, top, subs)


@pytest.mark.parametrize("name", ["S4", "A4", "SL2_3", "A4xC2"])
def test_n_maximal_verdicts_match_oracle(name):
    L = corpus_lattice(name)
    subs = as_sets(L)
    top = subs[L.top]
    for n in (1, 2, 3):
        expected = all(oracles.ku_subnormal(h, top, subs)
                       for h in oracles.n_maximal(top, set(subs), n))
        assert all_n_maximal_ku_subnormal(L, n) == expected


def test_s4_failures_are_the_three_cycles():
    L = lattice("symmetric(4)")
    assert not all_n_maximal_ku_subnormal(L, 1)
    fails = n_maximal_ku_failures(L, 2)
    assert [L.order(h) for h in fails] == [3, 3, 3, 3]
    assert all_n_maximal_ku_subnormal(L, 3)


def test_witness_chains_validate(corpus):
    for name, L in corpus:
        if L.n > 72:
            continue
        for h in range(len(L)):
            chain = witness_chain(L, h)
            assert (chain is not None) == is_k_u_subnormal(L, h)
            if chain is not None:
                assert chain.chain[0] == h and chain.chain[-1] == L.top
                assert validate_chain(L, chain)


def test_within_subgroup():
    L = lattice("symmetric(4)")
    a4 = st.derived_subgroup(L)
    c3 = sub_by_gens(L, "(1 2 3)")
    # C3 is maximal and not normal in A4, and A4 is not supersoluble
    assert not is_k_u_subnormal(L, c3, a4)
    v4 = st.o_p(L, 2)
    assert is_k_u_subnormal(L, v4, a4) and is_subnormal(L, v4, a4)
    outside = sub_by_gens(L, "(1 2)")
    assert not is_k_u_subnormal(L, outside, a4)
    assert witness_chain(L, outside, a4) is None


def test_soluble_equivalence(corpus):
    for name, L in corpus:
        if not st.is_soluble(L):
            continue
        for h in range(len(L)):
            assert is_u_subnormal(L, h) == is_k_u_subnormal(L, h), (name, h)


def test_insoluble_group_separates_the_notions():
    L = lattice("alternating(5)")
    # 1 is normal in A5, but every U-quotient step into A5 fails since A5 is simple
    assert is_k_u_subnormal(L, 0)
    assert not is_u_subnormal(L, 0)

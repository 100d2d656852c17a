import pytest

from conftest import DATA, corpus_lattice, lattice
from kusub.classifier import (NONE, SUPERSOLUBLE, classify, recognize_theorem_a,
                              recognize_theorem_b, recognize_theorem_c,
                              recognize_theorem_d, theorem_b_matches,
                              verify_corpus)
from kusub.errors import PreconditionViolated
from kusub.io import build, load_group_file
from kusub.lattice import SubgroupLattice

# Each witness was built for the type named here.
DESIGNED = {
    "A4": "B-I", "SL2_3": "B-I", "V4_C9": "B-I", "C3^2_C4": "B-I", "Q8_C9": "B-I",
    "C5^2_C3": "B-I", "C2^3_C7": "B-I",
    "C3^2_C8": "B-II", "C3^2_Q8": "B-II", "C3^2_D8": "B-II",
    "A4xC3": "B-III", "C3^2_C16": "B-IV", "A4xC2": "B-V", "C4^2_C3": "B-VI",
    "S4": "B-VII", "V4_D18": "B-VII",
    "C7^2_S3": "C-I", "A4xC5": "C-II", "A4xC7": "C-II", "V4_C9xC5": "C-II",
}
P3_FALSE = ["S4xC2", "S4xC3", "S4xC5", "GL2_3", "A4xS3", "A4xC6", "A4xC2xC2", "A4xC10",
            "A4xC3xC5", "A5", "S5", "C3^2_SD16", "ASL2_3", "AGammaL1_8", "SL2_3xC5"]


def label(report):
    return str(report.labels[-1])


@pytest.mark.parametrize("name, expected", sorted(DESIGNED.items()))
def test_designed_witnesses(name, expected):
    r = classify(corpus_lattice(name), name)
    assert label(r) == expected
    assert r.p3 and r.equivalence_ok


@pytest.mark.parametrize("name", P3_FALSE)
def test_p3_false_groups_get_none(name):
    r = classify(corpus_lattice(name), name)
    assert not r.p3
    assert label(r) == NONE
    assert r.equivalence_ok


def test_a4_report():
    r = classify(lattice("alternating(4)"), "A4")
    assert r.p2 and r.p3
    assert [str(x) for x in r.labels] == ["A", "B-I"]
    assert r.equivalence_ok


def test_s4_falls_under_type_seven():
    L = lattice("symmetric(4)")
    r = classify(L, "S4")
    assert not r.p2 and r.p3
    assert recognize_theorem_b(L).type == "B-VII"
    assert not recognize_theorem_a(L)


def test_sl23_is_type_one_but_not_sdh():
    L = corpus_lattice("SL2_3")
    r = classify(L, "SL2_3")
    assert not r.sdh and not r.p2 and r.p3
    assert recognize_theorem_b(L).type == "B-I"


def test_a5_report():
    r = classify(lattice("alternating(5)"), "A5")
    assert not r.soluble and not r.p3
    assert [str(x) for x in r.labels] == [NONE]
    assert r.equivalence_ok


def test_supersoluble_label():
    r = classify(lattice("cyclic(6)"), "C6")
    assert [str(x) for x in r.labels] == [SUPERSOLUBLE]
    assert r.p2 and r.p3 and r.equivalence_ok
    assert recognize_theorem_a(lattice("cyclic(6)"))


def test_preconditions():
    with pytest.raises(PreconditionViolated):
        recognize_theorem_b(lattice("cyclic(6)"))
    with pytest.raises(PreconditionViolated):
        recognize_theorem_c(lattice("symmetric(4)"))
    with pytest.raises(PreconditionViolated):
        recognize_theorem_c(lattice("alternating(5)"))
    with pytest.raises(PreconditionViolated):
        recognize_theorem_d(corpus_lattice("C2xC3xC5xC7"))


def test_theorem_c_recognizer():
    assert recognize_theorem_c(corpus_lattice("A4xC5")).type == "C-II"
    assert recognize_theorem_c(corpus_lattice("S4xC5")).type == NONE


def test_matches_are_all_recorded():
    L = corpus_lattice("A4")
    assert theorem_b_matches(L)[0] == "I"
    r = classify(L, "A4")
    assert r.matches[0] == "B-I"


def test_four_prime_witness():
    src = load_group_file(DATA / "C7^2_S3xC5.grp")
    L = SubgroupLattice(src.group())
    r = classify(L, src.name)
    assert r.order == 1470 and r.pi_size == 4
    assert not r.supersoluble and r.p3
    assert recognize_theorem_d(L).type == "D-2"
    assert r.equivalence_ok
    # four classes of maximal subgroups
    assert len({L.conjugacy_class(m)[0] for m in L.maximal_in(L.top)}) == 4


def test_large_pi_nonsupersoluble_requires_p3_false():
    # |pi| = 5: the only available verdict is NONE and P_3 must fail
    G = build("directProduct(alternating(4), directProduct(cyclic(5), "
              "directProduct(cyclic(7), cyclic(11))))")
    L = SubgroupLattice(G, cap=5000)
    r = classify(L, "A4xC385")
    assert r.pi_size == 5 and not r.p3 and r.equivalence_ok


def test_verify_empty_corpus():
    s = verify_corpus([], "ALL")
    assert s.ok and s.reports == [] and s.errors == []
    assert "vacuous=yes" in s.lines()[1]


def test_verify_rejects_unknown_theorem():
    with pytest.raises(ValueError):
        verify_corpus([], "E")

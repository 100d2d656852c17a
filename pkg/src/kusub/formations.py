"""The formation of supersoluble groups and predicates built on it."""
from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .errors import NotMaximal
from .lattice import SubgroupLattice
from .perm import is_prime, prime_factors
from .structure import (chief_series, frattini, is_nilpotent,
                        minimal_normal_subgroups)


@dataclass(frozen=True)
class UProfile:
    supersoluble: bool
    u_residual: int
    minimal_nonsupersoluble: bool
    sdh: bool
    schmidt: bool


def _amb(L, within):
    return L.top if within is None else within


def _quotient_table(L: SubgroupLattice, k: int) -> dict[int, bool]:
    """For every normal subgroup N of subgroup k: is k/N supersoluble?

    Walks down from k; the verdict for N follows the canonically least
    minimal normal cover M of N, requiring |M:N| prime and k/M supersoluble.
    """
    memo = L.memo.setdefault("u_quotients", {})
    if k in memo:
        return memo[k]
    normals = L.normal_subgroups_of(k)
    ok = {k: True}
    for n in reversed(normals[:-1]):
        m = next(x for x in normals if L.order(x) > L.order(n) and L.leq(n, x))
        ok[n] = is_prime(L.order(m) // L.order(n)) and ok[m]
    memo[k] = ok
    return ok


def section_supersoluble(L: SubgroupLattice, k: int, n: int) -> bool:
    """Is ``k/n`` supersoluble?  ``n`` must be normal in ``k``."""
    if not L.is_normal_in(n, k):
        raise ValueError(f"subgroup {n} is not normal in subgroup {k}")
    return _quotient_table(L, k)[n]


def is_supersoluble(L: SubgroupLattice, within=None) -> bool:
    return all(is_prime(f) for f in chief_series(L, within).factor_orders)


def u_residual(L: SubgroupLattice, within=None) -> int:
    """Intersection of the normal subgroups with supersoluble quotient."""
    k = _amb(L, within)
    memo = L.memo.setdefault("u_residual", {})
    if k not in memo:
        mask = L.masks[k]
        for n, ok in _quotient_table(L, k).items():
            if ok:
                mask &= L.masks[n]
        res = L.lookup(mask)
        assert _quotient_table(L, k)[res], "supersoluble groups failed to form a formation"
        memo[k] = res
    return memo[k]


def is_u_normal_maximal(L: SubgroupLattice, M: int, within=None) -> bool:
    k = _amb(L, within)
    if M not in L.maximal_in(k):
        raise NotMaximal(f"subgroup {M} is not maximal in subgroup {k}")
    return section_supersoluble(L, k, L.core(M, k))


def is_minimal_nonsupersoluble(L: SubgroupLattice, within=None) -> bool:
    k = _amb(L, within)
    if is_supersoluble(L, k):
        return False
    return all(is_supersoluble(L, m) for m in L.maximal_in(k))


def is_sdh(L: SubgroupLattice, within=None) -> bool:
    k = _amb(L, within)
    if not is_minimal_nonsupersoluble(L, k):
        return False
    return u_residual(L, k) in minimal_normal_subgroups(L, k)


def is_supersoluble_or_sdh(L: SubgroupLattice, within=None) -> bool:
    return is_supersoluble(L, within) or is_sdh(L, within)


def is_schmidt(L: SubgroupLattice, within=None) -> bool:
    k = _amb(L, within)
    if is_nilpotent(L, k):
        return False
    return all(is_nilpotent(L, m) for m in L.maximal_in(k))


def is_abelian(L: SubgroupLattice, within=None) -> bool:
    k = _amb(L, within)
    gens = L.gens[k]
    t = L.table
    return all(t[a, b] == t[b, a] for i, a in enumerate(gens) for b in gens[i + 1:])


def is_cyclic(L: SubgroupLattice, within=None) -> bool:
    k = _amb(L, within)
    return any(L.element_order(x) == L.order(k) for x in L.elements[k])


def is_primary_cyclic(L: SubgroupLattice, within=None) -> bool:
    """Cyclic of prime-power order (the trivial group excluded)."""
    k = _amb(L, within)
    return len(prime_factors(L.order(k))) == 1 and is_cyclic(L, k)


def exponent(L: SubgroupLattice, within=None) -> int:
    return lcm(*(L.element_order(x) for x in L.elements[_amb(L, within)]))


def is_miller_moreno(L: SubgroupLattice, within=None) -> bool:
    k = _amb(L, within)
    if is_abelian(L, k):
        return False
    return all(is_abelian(L, m) for m in L.maximal_in(k))


def frattini_residual_order_prime(L: SubgroupLattice, within=None) -> bool:
    r = u_residual(L, within)
    return L.order(r) > 1 and is_prime(L.order(frattini(L, r)))


def u_profile(L: SubgroupLattice, within=None) -> UProfile:
    k = _amb(L, within)
    return UProfile(
        supersoluble=is_supersoluble(L, k),
        u_residual=u_residual(L, k),
        minimal_nonsupersoluble=is_minimal_nonsupersoluble(L, k),
        sdh=is_sdh(L, k),
        schmidt=is_schmidt(L, k),
    )

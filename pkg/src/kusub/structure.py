"""Classical characteristic subgroups and series, read off a subgroup lattice.

Every function takes an optional ``within`` subgroup index; the subgroup is
then treated as the ambient group.  Omitting it means the whole group.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Sequence

import numpy as np

from .errors import BadOrdering, NotNormal, PrimeDoesNotDivide, TrivialGroup
from .lattice import SubgroupLattice, member_to_mask
from .perm import p_part, prime_factors


@dataclass(frozen=True)
class ChiefSeries:
    chain: tuple[int, ...]
    factor_orders: tuple[int, ...]


def _amb(L: SubgroupLattice, within):
    return L.top if within is None else within


def primes_of(L: SubgroupLattice, within=None) -> list[int]:
    return prime_factors(L.order(_amb(L, within)))


def normal_subgroups(L: SubgroupLattice, within=None) -> list[int]:
    return L.normal_subgroups_of(_amb(L, within))


def minimal_normal_subgroups(L: SubgroupLattice, within=None) -> list[int]:
    k = _amb(L, within)
    if L.order(k) == 1:
        raise TrivialGroup("the trivial group has no minimal normal subgroups")
    normals = [i for i in L.normal_subgroups_of(k) if i != 0]
    return [i for i in normals
            if not any(j != i and L.leq(j, i) for j in normals if L.order(j) < L.order(i))]


def sylow_subgroup(L: SubgroupLattice, p: int, within=None) -> int:
    k = _amb(L, within)
    if L.order(k) % p:
        raise PrimeDoesNotDivide(f"{p} does not divide {L.order(k)}")
    return L.sylow_subgroups(p, k)[0]


def hall_subgroup(L: SubgroupLattice, primes: Iterable[int], within=None) -> int | None:
    found = L.hall_subgroups(primes, _amb(L, within))
    return found[0] if found else None


def frattini(L: SubgroupLattice, within=None) -> int:
    k = _amb(L, within)
    if L.order(k) == 1:
        raise TrivialGroup("the trivial group has no maximal subgroups")
    mask = L.masks[k]
    for m in L.maximal_in(k):
        mask &= L.masks[m]
    return L.lookup(mask)


def center(L: SubgroupLattice, within=None) -> int:
    k = _amb(L, within)
    elems = np.array(L.elements[k], dtype=np.int32)
    t = L.table
    central = np.ones(elems.size, dtype=bool)
    for g in L.gens[k]:
        central &= t[elems, g] == t[g, elems]
    member = np.zeros(L.n, dtype=np.uint8)
    member[elems[central]] = 1
    return L.lookup(member_to_mask(member))


def derived_subgroup(L: SubgroupLattice, within=None) -> int:
    k = _amb(L, within)
    memo = L.memo.setdefault("derived", {})
    if k not in memo:
        e = np.array(L.elements[k], dtype=np.int32)
        t, inv = L.table, L.inv
        comm = t[t[np.ix_(inv[e], inv[e])], t[np.ix_(e, e)]]
        gens = np.unique(comm)
        memo[k] = L.lookup(L._closure([0], gens[gens != 0]))
    return memo[k]


def derived_series(L: SubgroupLattice, within=None) -> list[int]:
    series = [_amb(L, within)]
    while True:
        d = derived_subgroup(L, series[-1])
        if d == series[-1]:
            return series
        series.append(d)


def o_p(L: SubgroupLattice, p: int, within=None) -> int:
    """Largest normal p-subgroup: the join of all normal p-subgroups."""
    k = _amb(L, within)
    found = [i for i in L.normal_subgroups_of(k)
             if L.order(i) == p_part(L.order(i), p)]
    return found[-1] if len(found) == 1 else L.join(*found)


def fitting(L: SubgroupLattice, within=None) -> int:
    k = _amb(L, within)
    parts = [o_p(L, p, k) for p in primes_of(L, k)]
    return L.join(*parts) if parts else 0


def chief_series(L: SubgroupLattice, within=None) -> ChiefSeries:
    """Bottom-up chief series taking the canonically least minimal cover each step."""
    k = _amb(L, within)
    memo = L.memo.setdefault("chief", {})
    if k in memo:
        return memo[k]
    normals = L.normal_subgroups_of(k)
    chain = [0]
    while chain[-1] != k:
        cur = chain[-1]
        nxt = next(i for i in normals if L.order(i) > L.order(cur) and L.leq(cur, i))
        chain.append(nxt)
    factors = tuple(L.order(b) // L.order(a) for a, b in zip(chain, chain[1:]))
    memo[k] = ChiefSeries(tuple(chain), factors)
    return memo[k]


def is_soluble(L: SubgroupLattice, within=None) -> bool:
    k = _amb(L, within)
    by_chief = all(len(prime_factors(f)) == 1 for f in chief_series(L, k).factor_orders)
    by_derived = derived_series(L, k)[-1] == 0
    assert by_chief == by_derived, "solubility tests disagree"
    return by_chief


def is_nilpotent(L: SubgroupLattice, within=None) -> bool:
    k = _amb(L, within)
    return all(L.is_normal_in(sylow_subgroup(L, p, k), k) for p in primes_of(L, k))


def is_p_group(L: SubgroupLattice, within=None) -> bool:
    return len(primes_of(L, within)) <= 1


def complements(L: SubgroupLattice, N: int, within=None) -> list[int]:
    k = _amb(L, within)
    if not L.is_normal_in(N, k):
        raise NotNormal(f"subgroup {N} is not normal")
    size = L.order(k) // L.order(N)
    return [s for s in L.subgroups_of(k)
            if L.order(s) == size and L.masks[s] & L.masks[N] == 1]


def is_phi_dispersive(L: SubgroupLattice, phi: Sequence[int], within=None) -> bool:
    k = _amb(L, within)
    if sorted(phi) != primes_of(L, k):
        raise BadOrdering(f"{list(phi)} is not an ordering of {primes_of(L, k)}")
    sizes = set(L.order(i) for i in L.normal_subgroups_of(k))
    target = 1
    for p in phi:
        target *= p_part(L.order(k), p)
        if target not in sizes:
            return False
    return True


def is_ore_dispersive(L: SubgroupLattice, within=None) -> bool:
    return is_phi_dispersive(L, sorted(primes_of(L, within), reverse=True), within)


def dispersive_orderings(L: SubgroupLattice, within=None) -> list[tuple[int, ...]]:
    """Every ordering of the prime divisors for which the group is dispersive."""
    return [phi for phi in permutations(primes_of(L, within))
            if is_phi_dispersive(L, phi, within)]


def is_chief_factor(L: SubgroupLattice, upper: int, lower: int, within=None) -> bool:
    """``upper/lower`` is a chief factor of the ambient group."""
    k = _amb(L, within)
    if not (L.leq(lower, upper) and lower != upper):
        return False
    if not (L.is_normal_in(upper, k) and L.is_normal_in(lower, k)):
        return False
    return not any(L.leq(lower, x) and L.leq(x, upper) and x not in (lower, upper)
                   for x in L.normal_subgroups_of(k))


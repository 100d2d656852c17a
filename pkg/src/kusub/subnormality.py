"""Subnormality, U-subnormality and K-U-subnormality over a subgroup lattice.

A chain ``H = H_0 <= H_1 <= ... <= H_t = K`` may use any intermediate
subgroups.  A step ``X < Y`` is a U-quotient step when ``Y/core_Y(X)`` is
supersoluble, which happens exactly when the U-residual of ``Y`` lies in
``X``; it is a normal step when ``Y`` normalizes ``X``.  Both tests are
bitmask operations, so reachability is a sweep over the lattice from the
top down.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .formations import section_supersoluble, u_residual
from .lattice import SubgroupLattice, n_maximal_subgroups


class StepKind(str, Enum):
    NORMAL = "NORMAL"
    U_QUOTIENT = "U-QUOTIENT"


@dataclass(frozen=True)
class KUChain:
    chain: tuple[int, ...]
    step_kinds: tuple[StepKind, ...]


def _amb(L, within):
    return L.top if within is None else within


def _edge(L: SubgroupLattice, x: int, y: int, kinds: str) -> StepKind | None:
    """Kind of the step ``x < y`` allowed by ``kinds`` ('ku' or 'u'), or None."""
    if kinds == "ku" and L.masks[y] & ~L.normalizers[x] == 0:
        return StepKind.NORMAL
    r = u_residual(L, y)
    if L.masks[r] & ~L.masks[x] == 0:
        return StepKind.U_QUOTIENT
    return None


def _reachable(L: SubgroupLattice, k: int, kinds: str) -> set[int]:
    """Subgroups of ``k`` joined to ``k`` by a chain of allowed steps."""
    memo = L.memo.setdefault("reach_" + kinds, {})
    if k in memo:
        return memo[k]
    subs = L.subgroups_of(k)
    good = [k]
    good_set = {k}
    for x in reversed(subs[:-1]):
        mx = L.masks[x]
        for y in good:
            if y != x and mx & ~L.masks[y] == 0 and _edge(L, x, y, kinds) is not None:
                good.append(x)
                good_set.add(x)
                break
    memo[k] = good_set
    return good_set


def is_subnormal(L: SubgroupLattice, H: int, within=None) -> bool:
    """Iterate normal closures downward from the ambient group until they stop."""
    x = _amb(L, within)
    L.normal_closure(H, x)
    while x != H:
        nxt = L.normal_closure(H, x)
        if nxt == x:
            return False
        x = nxt
    return True


def is_u_subnormal(L: SubgroupLattice, H: int, within=None) -> bool:
    k = _amb(L, within)
    return L.leq(H, k) and H in _reachable(L, k, "u")


def is_k_u_subnormal(L: SubgroupLattice, H: int, within=None) -> bool:
    k = _amb(L, within)
    return L.leq(H, k) and H in _reachable(L, k, "ku")


def witness_chain(L: SubgroupLattice, H: int, within=None, kinds: str = "ku") -> KUChain | None:
    """Shortest chain from ``H`` up to the ambient group, least indices first."""
    k = _amb(L, within)
    if not L.leq(H, k):
        return None
    subs = L.subgroups_of(k)
    dist = {k: 0}
    for x in reversed(subs[:-1]):
        best = None
        for y, d in dist.items():
            if y != x and L.leq(x, y) and _edge(L, x, y, kinds) is not None:
                if best is None or d + 1 < best:
                    best = d + 1
        if best is not None:
            dist[x] = best
    if H not in dist:
        return None
    chain = [H]
    kinds_out = []
    while chain[-1] != k:
        x = chain[-1]
        want = dist[x] - 1
        y = min(y for y, d in dist.items()
                if d == want and y != x and L.leq(x, y) and _edge(L, x, y, kinds) is not None)
        kinds_out.append(_edge(L, x, y, kinds))
        chain.append(y)
    return KUChain(tuple(chain), tuple(kinds_out))


def validate_chain(L: SubgroupLattice, c: KUChain) -> bool:
    """Check a chain against the step definitions directly (cores and quotients)."""
    for (x, y), kind in zip(zip(c.chain, c.chain[1:]), c.step_kinds):
        if not L.leq(x, y):
            return False
        if kind is StepKind.NORMAL and not L.is_normal_in(x, y):
            return False
        if kind is StepKind.U_QUOTIENT and not section_supersoluble(L, y, L.core(x, y)):
            return False
    return True


def n_maximal_ku_failures(L: SubgroupLattice, n: int, within=None) -> list[int]:
    """The n-maximal subgroups that are not K-U-subnormal."""
    k = _amb(L, within)
    good = _reachable(L, k, "ku")
    return [h for h in n_maximal_subgroups(L, n, k) if h not in good]


def all_n_maximal_ku_subnormal(L: SubgroupLattice, n: int, within=None) -> bool:
    return not n_maximal_ku_failures(L, n, within)

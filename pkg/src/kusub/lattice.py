"""Complete subgroup lattices of small permutation groups.

Subgroups are materialized as explicit sets of element identifiers and held
as Python integer bitmasks, so containment and intersection are single
integer operations.  Enumeration closes the cyclic subgroups of prime-power
order under joins until nothing new appears; every subgroup is a join of
such cyclic subgroups, so the fixpoint is the whole lattice.
"""
from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import GroupTooLarge, NotContained, NotASubgroup
from .perm import Group, p_part, prime_factors

LATTICE_CAP = 2000


def member_to_mask(member: np.ndarray) -> int:
    return int.from_bytes(np.packbits(member.astype(bool), bitorder="little").tobytes(), "little")


def mask_to_elems(mask: int, n: int) -> np.ndarray:
    raw = np.frombuffer(mask.to_bytes((n + 7) // 8, "little"), dtype=np.uint8)
    return np.flatnonzero(np.unpackbits(raw, bitorder="little")[:n]).astype(np.int32)


def _is_prime_power(k: int) -> bool:
    return k > 1 and len(prime_factors(k)) == 1


class SubgroupLattice:
    """All subgroups of ``group`` in canonical order.

    Subgroup ``i`` is addressed by its position in ``(order, element list)``
    order; index 0 is the trivial subgroup and ``top`` the whole group.
    """

    def __init__(self, group: Group, cap: int = LATTICE_CAP,
                 subgroups: Iterable[Sequence[int]] | None = None, backend: str | None = None):
        if group.order > cap:
            raise GroupTooLarge(f"order {group.order} exceeds lattice cap {cap}")
        self.group = group
        self.n = group.order
        self.table = group.table
        self.inv = group.inverses
        self._k = _kernels.get_backend(backend)
        self._ktable = self._k.prepare(self.table)
        if subgroups is None:
            found = self._enumerate()
        else:
            found = {}
            for elems in subgroups:
                arr = np.array(sorted(elems), dtype=np.int32)
                member = np.zeros(self.n, dtype=np.uint8)
                member[arr] = 1
                found[member_to_mask(member)] = None
        keyed = []
        for mask, gens in found.items():
            elems = mask_to_elems(mask, self.n)
            keyed.append((elems.size, tuple(elems.tolist()), mask, gens))
        keyed.sort(key=lambda t: (t[0], t[1]))
        self.masks = [t[2] for t in keyed]
        self.orders = [t[0] for t in keyed]
        self.elements = [t[1] for t in keyed]
        self.index = {m: i for i, m in enumerate(self.masks)}
        self.gens = [t[3] if t[3] is not None else self._generators_of(t[1]) for t in keyed]
        self.top = len(self.masks) - 1
        self.full = self.masks[-1]
        # per-lattice memo tables filled lazily by the predicate modules
        self.memo: dict = {}
        if self.orders[0] != 1 or self.orders[-1] != self.n:
            raise NotASubgroup("subgroup list lacks the trivial group or the whole group")

    # -- construction -----------------------------------------------------
    def _closure(self, start, gens) -> int:
        return member_to_mask(self._k.closure(self._ktable, start, gens, self.n))

    def _enumerate(self) -> dict:
        n = self.n
        atoms = {}
        for x in range(1, n):
            mask = self._closure([0], [x])
            if mask not in atoms:
                atoms[mask] = x
        atoms = [(m, x) for m, x in atoms.items() if _is_prime_power(m.bit_count())]
        found = {1: ()}
        queue = [1]
        for h in queue:
            gens = found[h]
            start = mask_to_elems(h, n)
            for cmask, x in atoms:
                if cmask & ~h == 0:
                    continue
                j = self._closure(start, gens + (x,))
                if j not in found:
                    found[j] = gens + (x,)
                    queue.append(j)
        return found

    def _generators_of(self, elems: Sequence[int]) -> tuple:
        target = self.index[self._mask_of(elems)] if elems else 0
        gens: tuple = ()
        mask = 1
        for x in elems:
            if (mask >> x) & 1:
                continue
            gens += (x,)
            mask = self._closure([0], gens)
            if mask == self.masks[target]:
                break
        return gens

    def _mask_of(self, elems) -> int:
        m = 0
        for x in elems:
            m |= 1 << int(x)
        return m

    # -- basic queries ----------------------------------------------------
    def __len__(self):
        return len(self.masks)

    def __repr__(self):
        return f"SubgroupLattice<order {self.n}, {len(self)} subgroups>"

    @cached_property
    def primes(self) -> list[int]:
        return prime_factors(self.n)

    def order(self, i: int) -> int:
        return self.orders[i]

    def leq(self, i: int, j: int) -> bool:
        return self.masks[i] & ~self.masks[j] == 0

    def lookup(self, mask: int) -> int:
        return self.index[mask]

    def index_of(self, elems: Iterable[int]) -> int:
        try:
            return self.index[self._mask_of(elems)]
        except KeyError:
            raise NotASubgroup("element set is not a subgroup") from None

    def meet(self, i: int, j: int) -> int:
        return self.index[self.masks[i] & self.masks[j]]

    def join(self, *idx: int) -> int:
        gens = tuple(g for i in idx for g in self.gens[i])
        return self.index[self._closure([0], gens)]

    def product(self, i: int, j: int) -> int | None:
        """Index of the set product ``HK`` when it is a subgroup, else None."""
        k = self.join(i, j)
        if self.orders[k] * self.orders[self.meet(i, j)] == self.orders[i] * self.orders[j]:
            return k
        return None

    def element_order(self, x: int) -> int:
        return int(self.group.element_orders[x])

    def conjugate(self, i: int, g: int) -> int:
        """Index of ``g^-1 H g``."""
        elems = np.array(self.elements[i], dtype=np.int32)
        conj = self.table[self.table[self.inv[g], elems], g]
        member = np.zeros(self.n, dtype=np.uint8)
        member[conj] = 1
        return self.index[member_to_mask(member)]

    def as_group(self, i: int) -> Group:
        return self.group.subgroup(self.elements[i])

    # -- derived relations (lazy) -----------------------------------------
    @cached_property
    def normalizers(self) -> list[int]:
        out = []
        for i, elems in enumerate(self.elements):
            member = np.zeros(self.n, dtype=np.uint8)
            member[list(elems)] = 1
            res = self._k.normalizer(self._ktable, self.inv, member, self.gens[i] or (0,), self.n)
            out.append(member_to_mask(res))
        return out

    @cached_property
    def _below(self) -> list[list[int]]:
        masks = self.masks
        out = []
        for j, mj in enumerate(masks):
            out.append([i for i in range(j + 1) if masks[i] & ~mj == 0
                        and self.orders[j] % self.orders[i] == 0])
        return out

    def subgroups_of(self, k: int) -> list[int]:
        """All subgroups contained in subgroup ``k`` (including ``k``)."""
        return self._below[k]

    def overgroups(self, k: int) -> list[int]:
        return [j for j in range(k, len(self)) if self.masks[k] & ~self.masks[j] == 0]

    @cached_property
    def _maximal(self) -> list[list[int]]:
        out = []
        for j in range(len(self)):
            below = self._below[j][:-1]
            found: list[int] = []
            for i in reversed(below):
                mi = self.masks[i]
                if not any(mi & ~self.masks[m] == 0 for m in found):
                    found.append(i)
            out.append(sorted(found))
        return out

    def maximal_in(self, k: int) -> list[int]:
        return self._maximal[k]

    @cached_property
    def maximality_edges(self) -> list[tuple[int, int]]:
        return [(i, j) for j in range(len(self)) for i in self._maximal[j]]

    def is_normal_in(self, h: int, k: int) -> bool:
        if not self.leq(h, k):
            raise NotContained(f"subgroup {h} is not contained in subgroup {k}")
        return self.masks[k] & ~self.normalizers[h] == 0

    def normalizes(self, k: int, h: int) -> bool:
        """True when subgroup ``k`` normalizes subgroup ``h`` (no containment needed)."""
        return self.masks[k] & ~self.normalizers[h] == 0

    def normal_subgroups_of(self, k: int) -> list[int]:
        mk = self.masks[k]
        return [i for i in self._below[k] if mk & ~self.normalizers[i] == 0]

    def core(self, h: int, within: int | None = None) -> int:
        k = self.top if within is None else within
        mk = self.masks[k]
        for i in reversed(self._below[h]):
            if mk & ~self.normalizers[i] == 0:
                return i
        return 0

    def normal_closure(self, h: int, within: int | None = None) -> int:
        k = self.top if within is None else within
        mk = self.masks[k]
        for i in self._below[k]:
            if mk & ~self.normalizers[i] == 0 and self.masks[h] & ~self.masks[i] == 0:
                return i
        raise NotContained(f"subgroup {h} is not contained in subgroup {k}")

    def sylow_subgroups(self, p: int, within: int | None = None) -> list[int]:
        k = self.top if within is None else within
        size = p_part(self.orders[k], p)
        return [i for i in self._below[k] if self.orders[i] == size]

    def hall_subgroups(self, primes: Iterable[int], within: int | None = None) -> list[int]:
        k = self.top if within is None else within
        size = 1
        for p in set(primes):
            size *= p_part(self.orders[k], p)
        return [i for i in self._below[k] if self.orders[i] == size]

    @cached_property
    def _orbits(self) -> list[list[int]]:
        seen = [False] * len(self)
        classes = []
        gens = self.group.generator_indices
        for i in range(len(self)):
            if seen[i]:
                continue
            orbit = [i]
            seen[i] = True
            for h in orbit:
                for g in gens:
                    c = self.conjugate(h, g)
                    if not seen[c]:
                        seen[c] = True
                        orbit.append(c)
            classes.append(sorted(orbit))
        return classes

    def conjugacy_class(self, i: int) -> list[int]:
        for cls in self._orbits:
            if i in cls:
                return cls
        raise KeyError(i)


def all_subgroups(G: Group, cap: int = LATTICE_CAP) -> SubgroupLattice:
    return SubgroupLattice(G, cap=cap)


def maximal_subgroups(L: SubgroupLattice, H: int) -> list[int]:
    return L.maximal_in(H)


def n_maximal_subgroups(L: SubgroupLattice, n: int, within: int | None = None) -> list[int]:
    """Subgroups at the end of some chain of ``n`` successive maximal steps."""
    if n < 1:
        raise ValueError("n must be positive")
    layer = {L.top if within is None else within}
    for _ in range(n):
        layer = {m for h in layer for m in L.maximal_in(h)}
    return sorted(layer)


def core(L: SubgroupLattice, H: int) -> int:
    return L.core(H)


def normalizer(L: SubgroupLattice, H: int) -> int:
    return L.index[L.normalizers[H]]


def conjugacy_classes_of_subgroups(L: SubgroupLattice) -> list[list[int]]:
    return [list(c) for c in L._orbits]


def is_normal_in(L: SubgroupLattice, H: int, K: int) -> bool:
    return L.is_normal_in(H, K)

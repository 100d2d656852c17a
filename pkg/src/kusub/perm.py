"""Permutations and permutation groups.

Points are numbered ``1..degree`` in every public surface; internally a
permutation is stored in 0-based array form.  Products act on the right:
``(x * y)`` first applies ``x`` and then ``y``, so conjugation reads
``g**-1 * h * g``.
"""
from __future__ import annotations

import math
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import (EmptyGenerators, GroupTooLarge, MixedDegree,
                     NotASubgroup, NotNormal)

DEFAULT_CAP = 5000


def _mul(a, b):
    return tuple([b[x] for x in a])


def _inv(a):
    r = [0] * len(a)
    for i, x in enumerate(a):
        r[x] = i
    return tuple(r)


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(n: int) -> bool:
    return n > 1 and prime_factors(n) == [n]


def p_part(n: int, p: int) -> int:
    r = 1
    while n % p == 0:
        n //= p
        r *= p
    return r


class Permutation:
    """An immutable bijection of ``{1..degree}``."""

    __slots__ = ("af", "__weakref__")

    def __init__(self, images: Sequence[int]):
        af = tuple(int(x) - 1 for x in images)
        if sorted(af) != list(range(len(af))) or not af:
            raise ValueError(f"not a bijection on 1..{len(af)}: {tuple(images)}")
        self.af = af

    @classmethod
    def _from_af(cls, af) -> Permutation:
        p = object.__new__(cls)
        p.af = tuple(af)
        return p

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls._from_af(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        af = list(range(degree))
        seen = set()
        for cyc in cycles:
            for pt in cyc:
                if not 1 <= pt <= degree or pt in seen:
                    raise ValueError(f"bad cycle {tuple(cyc)} for degree {degree}")
                seen.add(pt)
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                af[a - 1] = b - 1
        return cls._from_af(af)

    @property
    def degree(self) -> int:
        return len(self.af)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(x + 1 for x in self.af)

    def __call__(self, point: int) -> int:
        return self.af[point - 1] + 1

    def __mul__(self, other: Permutation) -> Permutation:
        if other.degree != self.degree:
            raise MixedDegree("cannot multiply permutations of different degree")
        return Permutation._from_af(_mul(self.af, other.af))

    def __pow__(self, k: int) -> Permutation:
        base = self if k >= 0 else self.inverse()
        result = Permutation.identity(self.degree)
        for _ in range(abs(k)):
            result = result * base
        return result

    def inverse(self) -> Permutation:
        return Permutation._from_af(_inv(self.af))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.af))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for i in range(self.degree):
            if i in seen or self.af[i] == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self.af[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.af[j]
            out.append(tuple(x + 1 for x in cyc))
        return out

    def order(self) -> int:
        return math.lcm(1, *(len(c) for c in self.cycles()))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.af == other.af

    def __lt__(self, other):
        return self.af < other.af

    def __hash__(self):
        return hash(self.af)

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self):
        return f"Permutation<{self}; degree {self.degree}>"


class StabilizerChain:
    """Base and strong generating set built by deterministic Schreier-Sims.

    Base points are chosen as the smallest point moved by the generator that
    forces a new level.
    """

    def __init__(self, degree: int, generators: Sequence[tuple]):
        self.degree = degree
        self.identity = tuple(range(degree))
        self.base: list[int] = []
        self.strong: list[list[tuple]] = []
        self.transversals: list[dict] = []
        self._build([g for g in dict.fromkeys(generators) if g != self.identity])

    @staticmethod
    def _first_moved(g) -> int:
        return next(i for i, x in enumerate(g) if i != x)

    def _orbit(self, level: int) -> dict:
        b = self.base[level]
        trans = {b: self.identity}
        queue = [b]
        for pt in queue:
            u = trans[pt]
            for s in self.strong[level]:
                img = s[pt]
                if img not in trans:
                    trans[img] = _mul(u, s)
                    queue.append(img)
        return trans

    def strip(self, g, start: int = 0):
        """Sift ``g`` down the chain; return the residue and the level reached."""
        for level in range(start, len(self.base)):
            pt = g[self.base[level]]
            u = self.transversals[level].get(pt)
            if u is None:
                return g, level
            g = _mul(g, _inv(u))
        return g, len(self.base)

    def _add_level(self, g):
        self.base.append(self._first_moved(g))
        self.strong.append([])
        self.transversals.append({})

    def _build(self, gens):
        for g in gens:
            if all(g[b] == b for b in self.base):
                self._add_level(g)
        for level in range(len(self.base)):
            self.strong[level] = [g for g in gens
                                  if all(g[b] == b for b in self.base[:level])]
            self.transversals[level] = self._orbit(level)
        i = len(self.base) - 1
        while i >= 0:
            grew = False
            trans = self.transversals[i]
            for pt, u in list(trans.items()):
                for s in list(self.strong[i]):
                    h = _mul(_mul(u, s), _inv(trans[s[pt]]))
                    if h == self.identity:
                        continue
                    res, j = self.strip(h, i + 1)
                    if res == self.identity:
                        continue
                    if j == len(self.base):
                        self._add_level(res)
                    for level in range(i + 1, j + 1):
                        self.strong[level].append(res)
                        self.transversals[level] = self._orbit(level)
                    i = j
                    grew = True
                    break
                if grew:
                    break
            if not grew:
                i -= 1

    @property
    def order(self) -> int:
        return math.prod(len(t) for t in self.transversals)

    def contains(self, g) -> bool:
        res, level = self.strip(g)
        return level == len(self.base) and res == self.identity


class Group:
    """A permutation group given by generators.

    Element enumeration is breadth-first from the identity over the
    generators in input order; each new BFS layer is sorted by image
    sequence.  Element identifiers are positions in that enumeration.
    """

    def __init__(self, generators: Sequence[Permutation], cap: int = DEFAULT_CAP):
        generators = list(generators)
        if not generators:
            raise EmptyGenerators("a group needs at least one generator")
        degrees = {g.degree for g in generators}
        if len(degrees) != 1:
            raise MixedDegree(f"generators have degrees {sorted(degrees)}")
        self.degree = degrees.pop()
        self.generators = tuple(generators)
        self.cap = cap

    def __repr__(self):
        gens = ", ".join(map(str, self.generators))
        return f"Group<degree {self.degree}; {gens}>"

    # -- stabilizer chain -------------------------------------------------
    @cached_property
    def chain(self) -> StabilizerChain:
        return StabilizerChain(self.degree, [g.af for g in self.generators])

    @property
    def order(self) -> int:
        return self.chain.order

    @cached_property
    def prime_set(self) -> list[int]:
        return prime_factors(self.order)

    def contains(self, x: Permutation) -> bool:
        if x.degree != self.degree:
            raise MixedDegree(f"degree {x.degree} element tested against degree {self.degree} group")
        return self.chain.contains(x.af)

    def __contains__(self, x):
        return self.contains(x)

    # -- explicit enumeration ---------------------------------------------
    def _check_cap(self):
        if self.order > self.cap:
            raise GroupTooLarge(f"order {self.order} exceeds enumeration cap {self.cap}")

    @cached_property
    def _enumeration(self):
        self._check_cap()
        gens = [g.af for g in self.generators]
        ident = tuple(range(self.degree))
        index = {ident: 0}
        elems = [ident]
        parent = [None]
        layer = [ident]
        while layer:
            found = {}
            for a in layer:
                ia = index[a]
                for k, g in enumerate(gens):
                    b = _mul(a, g)
                    if b not in index and b not in found:
                        found[b] = (ia, k)
            layer = sorted(found)
            for b in layer:
                index[b] = len(elems)
                elems.append(b)
                parent.append(found[b])
        return elems, index, parent

    def elements(self) -> list[Permutation]:
        return [Permutation._from_af(a) for a in self._enumeration[0]]

    def element_index(self, x: Permutation) -> int:
        try:
            return self._enumeration[1][x.af]
        except KeyError:
            raise NotASubgroup(f"{x} is not an element of the group") from None

    def element(self, i: int) -> Permutation:
        return Permutation._from_af(self._enumeration[0][i])

    @cached_property
    def generator_indices(self) -> list[int]:
        return [self._enumeration[1][g.af] for g in self.generators]

    @cached_property
    def table(self) -> np.ndarray:
        """``table[i, j]`` is the identifier of ``e_i * e_j``."""
        elems, index, parent = self._enumeration
        n = len(elems)
        rmul = np.empty((len(self.generators), n), dtype=np.int32)
        for k, g in enumerate(self.generators):
            rmul[k] = [index[_mul(a, g.af)] for a in elems]
        table = np.empty((n, n), dtype=np.int32)
        table[:, 0] = np.arange(n, dtype=np.int32)
        for j in range(1, n):
            i, k = parent[j]
            table[:, j] = rmul[k][table[:, i]]
        table.setflags(write=False)
        return table

    @cached_property
    def inverses(self) -> np.ndarray:
        inv = np.argmin(self.table, axis=1).astype(np.int32)
        inv.setflags(write=False)
        return inv

    @cached_property
    def element_orders(self) -> np.ndarray:
        return np.array([Permutation._from_af(a).order() for a in self._enumeration[0]],
                        dtype=np.int64)

    def exponent(self) -> int:
        return math.lcm(*map(int, self.element_orders))

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1:])

    def is_cyclic(self) -> bool:
        return int(self.element_orders.max()) == self.order

    # -- subsets of element identifiers -----------------------------------
    def _is_subgroup(self, elems: np.ndarray) -> bool:
        if elems.size == 0 or 0 not in elems:
            return False
        member = np.zeros(self.order, dtype=bool)
        member[elems] = True
        return bool(member[self.table[np.ix_(elems, elems)]].all())

    def is_normal_set(self, elems: np.ndarray) -> bool:
        member = np.zeros(self.order, dtype=bool)
        member[elems] = True
        inv = self.inverses
        for g in self.generator_indices:
            conj = self.table[self.table[inv[g], elems], g]
            if not member[conj].all():
                return False
        return True

    def subgroup(self, elems: Iterable[int]) -> Group:
        """The subgroup on the given identifiers, as a group in its own right."""
        elems = sorted(set(int(e) for e in elems))
        gens = _small_generating_set(self.table, elems)
        perms = [self.element(i) for i in gens] or [Permutation.identity(self.degree)]
        return Group(perms, cap=self.cap)


def _small_generating_set(table: np.ndarray, elems: Sequence[int]) -> list[int]:
    """Greedy generating set: add the least element not yet generated."""
    target = set(elems)
    current = {0}
    gens: list[int] = []
    for x in elems:
        if x in current:
            continue
        gens.append(x)
        queue = list(current)
        current = set(current)
        for a in queue:
            for g in gens:
                b = int(table[a, g])
                if b not in current:
                    current.add(b)
                    queue.append(b)
        if current == target:
            break
    return gens


def group_from_generators(gens: Sequence[Permutation], cap: int = DEFAULT_CAP) -> Group:
    return Group(gens, cap=cap)


def order(G: Group) -> int:
    return G.order


def contains(G: Group, x: Permutation) -> bool:
    return G.contains(x)


def elements(G: Group) -> list[Permutation]:
    return G.elements()


def exponent(G: Group) -> int:
    return G.exponent()


def is_abelian(G: Group) -> bool:
    return G.is_abelian()


def is_cyclic(G: Group) -> bool:
    return G.is_cyclic()


def _as_index_array(G: Group, N) -> np.ndarray:
    arr = np.array(sorted(set(int(x) for x in N)), dtype=np.int32)
    if arr.size and (arr[0] < 0 or arr[-1] >= G.order):
        raise NotASubgroup("element identifier out of range")
    return arr


def quotient_map(G: Group, N) -> tuple[Group, np.ndarray]:
    """Return ``G/N`` acting on the right cosets of ``N`` plus the projection.

    The projection is an array sending each element identifier of ``G`` to
    the identifier of its image in the quotient.
    """
    elems = _as_index_array(G, N)
    if not G._is_subgroup(elems):
        raise NotASubgroup("the given element set is not a subgroup")
    if not G.is_normal_set(elems):
        raise NotNormal("the given subgroup is not normal")
    n = G.order
    table = G.table
    label = np.full(n, -1, dtype=np.int64)
    reps = []
    for i in range(n):
        if label[i] < 0:
            label[table[elems, i]] = len(reps)
            reps.append(i)
    k = len(reps)
    action = label[table[np.array(reps, dtype=np.int32), :]]
    gens = [Permutation._from_af(action[:, g]) for g in G.generator_indices]
    Q = Group(gens, cap=G.cap)
    qindex = Q._enumeration[1]
    proj = np.array([qindex[tuple(action[:, x].tolist())] for x in range(n)], dtype=np.int32)
    assert Q.order * elems.size == n, (Q.order, elems.size, n, k)
    return Q, proj


def quotient(G: Group, N) -> Group:
    return quotient_map(G, N)[0]


def conjugate_set(G: Group, elems, g: int) -> list[int]:
    """Identifiers of ``{g^-1 h g : h in elems}``, sorted."""
    arr = _as_index_array(G, elems)
    return sorted(set(G.table[G.table[G.inverses[g], arr], g].tolist()))

"""Slow reference implementations that share no code with the library.

Everything here works on plain tuples (0-based image lists) and Python
sets, straight from the definitions.
"""
from itertools import combinations


def mul(a, b):
    # apply a, then b
    return tuple(b[x] for x in a)


def inv(a):
    r = [0] * len(a)
    for i, x in enumerate(a):
        r[x] = i
    return tuple(r)


def closure(gens, degree):
    """All products of the generators, by saturation."""
    e = tuple(range(degree))
    found = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in found:
                    found.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(found)


def subgroups(elements, degree):
    """Every subgroup: close all sets of up to three elements, then close
    pairwise joins until nothing new appears."""
    elems = sorted(elements)
    subs = set()
    for k in (1, 2, 3):
        for combo in combinations(elems, k):
            subs.add(closure(combo, degree))
    changed = True
    while changed:
        changed = False
        current = list(subs)
        for a, b in combinations(current, 2):
            if a <= b or b <= a:
                continue
            j = closure(list(a | b), degree)
            if j not in subs:
                subs.add(j)
                changed = True
    return subs


def conj(h, g):
    gi = inv(g)
    return frozenset(mul(mul(gi, x), g) for x in h)


def is_normal(h, k):
    return all(conj(h, g) == h for g in k)


def core(h, k):
    out = set(h)
    for g in k:
        out &= conj(h, g)
    return frozenset(out)


def _is_prime(n):
    return n > 1 and all(n % d for d in range(2, int(n ** 0.5) + 1))


def section_supersoluble(k, n, subs):
    """k/n has a normal series with prime factors (normal in k, through n)."""
    normals = [s for s in subs if n <= s <= k and is_normal(s, k)]
    reach = {n}
    frontier = [n]
    while frontier:
        x = frontier.pop()
        for y in normals:
            if x < y and y not in reach and _is_prime(len(y) // len(x)):
                reach.add(y)
                frontier.append(y)
    return k in reach


def supersoluble(group, subs):
    e = frozenset(x for x in group if x == tuple(range(len(x))))
    return section_supersoluble(group, e, subs)


def ku_subnormal(h, group, subs, kegel=True):
    """Search upward from h for a chain of normal or supersoluble-quotient steps."""
    reach = {h}
    frontier = [h]
    while frontier:
        x = frontier.pop()
        for y in subs:
            if x < y <= group and y not in reach:
                step = (kegel and is_normal(x, y)) or section_supersoluble(y, core(x, y), subs)
                if step:
                    reach.add(y)
                    frontier.append(y)
    return group in reach


def maximal_in(k, subs):
    below = [s for s in subs if s < k]
    return [s for s in below if not any(s < t for t in below)]


def n_maximal(group, subs, n):
    layer = {group}
    for _ in range(n):
        layer = {m for h in layer for m in maximal_in(h, subs)}
    return layer

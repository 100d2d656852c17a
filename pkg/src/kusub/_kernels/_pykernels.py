"""Pure-Python reference implementation of the lattice kernels."""
import numpy as np


def prepare(table):
    return table.tolist()


def closure(table, start, gens, n):
    """Membership vector of the subgroup generated by ``start`` and ``gens``.

    ``start`` must already be closed (a subgroup, or just the identity).
    """
    member = bytearray(n)
    queue = [int(s) for s in start]
    for s in queue:
        member[s] = 1
    gens = [int(g) for g in gens]
    for a in queue:
        row = table[a]
        for g in gens:
            b = row[g]
            if not member[b]:
                member[b] = 1
                queue.append(b)
    return np.frombuffer(bytes(member), dtype=np.uint8)


def normalizer(table, inv, member, gens, n):
    """Membership vector of ``{g : g^-1 x g in X for every generator x of X}``."""
    out = bytearray(n)
    gens = [int(x) for x in gens]
    for g in range(n):
        row_inv = table[int(inv[g])]
        ok = 1
        for x in gens:
            if not member[table[row_inv[x]][g]]:
                ok = 0
                break
        out[g] = ok
    return np.frombuffer(bytes(out), dtype=np.uint8)

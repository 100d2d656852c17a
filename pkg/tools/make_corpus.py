"""Regenerate the bundled corpus under src/kusub/corpus.

Small groups come from builder expressions.  The remaining groups are
written as generator files built here from matrix actions and subdirect
products; each file records the order computed at generation time, and
loading it re-checks that order.

    python3 tools/make_corpus.py
"""
from __future__ import annotations

import itertools
from pathlib import Path

import numpy as np

from kusub.io import build_generators, format_group_file
from kusub.perm import Group, Permutation

OUT = Path(__file__).resolve().parent.parent / "src" / "kusub" / "corpus"


def perm0(af):
    return Permutation._from_af(tuple(int(x) for x in af))


def affine(p, dim, matrices, translations=True):
    """Affine maps of F_p^dim acting on p^dim points (vectors in base-p order)."""
    vecs = list(itertools.product(range(p), repeat=dim))
    idx = {v: i for i, v in enumerate(vecs)}
    gens = []
    if translations:
        for k in range(dim):
            e = [0] * dim
            e[k] = 1
            gens.append(perm0([idx[tuple((v[j] + e[j]) % p for j in range(dim))] for v in vecs]))
    for m in matrices:
        m = np.array(m) % p
        gens.append(perm0([idx[tuple(int(x) for x in (m @ np.array(v)) % p)] for v in vecs]))
    return gens


def linear_on_nonzero(p, matrices):
    """Matrices in GL(2,p) acting on the nonzero vectors of F_p^2."""
    vecs = [v for v in itertools.product(range(p), repeat=2) if any(v)]
    idx = {v: i for i, v in enumerate(vecs)}
    return [perm0([idx[tuple(int(x) for x in (np.array(m) @ np.array(v)) % p)] for v in vecs])
            for m in matrices]


def glue(*parts):
    """Combine per-block permutations (each a tuple over its own points) into one."""
    af, off = [], 0
    for p in parts:
        af += [off + x for x in p.af]
        off += p.degree
    return perm0(af)


def ident(n):
    return Permutation.identity(n)


def cyc(n, k=1):
    return perm0([(i + k) % n for i in range(n)])


def refl(n):
    return perm0([(-i) % n for i in range(n)])


def with_cyclic(gens, n):
    """Direct product with C_n."""
    d = gens[0].degree
    return [glue(g, ident(n)) for g in gens] + [glue(ident(d), cyc(n))]


# generators of GL(2,3) and SL(2,3) used repeatedly
Q8_IN_SL23 = [[[0, 1], [2, 0]], [[1, 1], [1, 2]]]
ORDER3_SL23 = [[1, 1], [0, 1]]


def order8_gl23():
    for a, b, c, d in itertools.product(range(3), repeat=4):
        m = np.array([[a, b], [c, d]])
        if (a * d - b * c) % 3 == 0:
            continue
        x, k = m.copy(), 1
        while not (x % 3 == np.eye(2)).all():
            x, k = (x @ m) % 3, k + 1
        if k == 8:
            return m.tolist()
    raise AssertionError


def sd16_gl23():
    """An order-8 element m and an involution s with s m s = m^3."""
    m = np.array(order8_gl23())
    m3 = np.linalg.matrix_power(m, 3) % 3
    for a, b, c, d in itertools.product(range(3), repeat=4):
        s = np.array([[a, b], [c, d]])
        if (a * d - b * c) % 3 and ((s @ s) % 3 == np.eye(2)).all() \
                and ((s @ m @ s) % 3 == m3).all():
            return [m.tolist(), s.tolist()]
    raise AssertionError


def f8_maps():
    """Multiplication by a primitive element of F_8 and the Frobenius, on F_2^3."""
    mult = [[0, 0, 1], [1, 0, 1], [0, 1, 0]]   # companion matrix of x^3 + x + 1
    frob = [[1, 0, 0], [0, 0, 1], [0, 1, 1]]   # x -> x^2 in the basis 1, a, a^2
    return mult, frob


def generator_groups():
    out = {}
    sl23 = linear_on_nonzero(3, Q8_IN_SL23 + [ORDER3_SL23])
    out["SL2_3"] = sl23
    out["GL2_3"] = linear_on_nonzero(3, Q8_IN_SL23 + [ORDER3_SL23, [[2, 0], [0, 1]]])
    out["SL2_3xC5"] = with_cyclic(sl23, 5)
    out["Dic12"] = [glue(cyc(3), ident(4)), glue(refl(3), cyc(4))]

    v4 = [perm0([1, 0, 3, 2]), perm0([2, 3, 0, 1])]
    c3_on_v4 = perm0([0, 2, 3, 1])
    out["V4_C9"] = [glue(v, ident(9)) for v in v4] + [glue(c3_on_v4, cyc(9))]
    out["V4_C9xC5"] = with_cyclic(out["V4_C9"], 5)
    s4_point_stab = [perm0([0, 2, 3, 1]), perm0([0, 1, 3, 2])]
    out["V4_D18"] = ([glue(v, ident(9)) for v in v4]
                     + [glue(s4_point_stab[0], cyc(9)), glue(s4_point_stab[1], refl(9))])

    q8 = linear_on_nonzero(3, Q8_IN_SL23)
    order3 = linear_on_nonzero(3, [ORDER3_SL23])[0]
    out["Q8_C9"] = [glue(g, ident(9)) for g in q8] + [glue(order3, cyc(9))]

    out["C3^2_C4"] = affine(3, 2, [[[0, 2], [1, 0]]])
    out["C3^2_Q8"] = affine(3, 2, Q8_IN_SL23)
    out["C3^2_D8"] = affine(3, 2, [[[0, 2], [1, 0]], [[1, 0], [0, 2]]])
    out["C3^2_C8"] = affine(3, 2, [order8_gl23()])
    out["C3^2_SD16"] = affine(3, 2, sd16_gl23())
    out["ASL2_3"] = affine(3, 2, Q8_IN_SL23 + [ORDER3_SL23])
    t1, t2, m8 = affine(3, 2, [order8_gl23()])
    out["C3^2_C16"] = [glue(t1, ident(16)), glue(t2, ident(16)), glue(m8, cyc(16))]

    out["C5^2_C3"] = affine(5, 2, [[[0, 4], [1, 4]]])
    out["C7^2_S3"] = affine(7, 2, [[[2, 0], [0, 4]], [[0, 1], [1, 0]]])
    mult, frob = f8_maps()
    out["C2^3_C7"] = affine(2, 3, [mult])
    out["AGammaL1_8"] = affine(2, 3, [mult, frob])

    # (C4 x C4) x| C3 with C3 acting by the order-3 matrix over Z/4
    vecs = list(itertools.product(range(4), repeat=2))
    idx = {v: i for i, v in enumerate(vecs)}
    m = np.array([[0, 3], [1, 3]])
    out["C4^2_C3"] = [
        perm0([idx[((v[0] + 1) % 4, v[1])] for v in vecs]),
        perm0([idx[(v[0], (v[1] + 1) % 4)] for v in vecs]),
        perm0([idx[tuple(int(x) for x in (m @ np.array(v)) % 4)] for v in vecs]),
    ]
    return out


BUILDERS = {
    # supersoluble, small
    **{f"C{n}": f"cyclic({n})" for n in range(1, 25)},
    **{f"D{2 * n}": f"dihedral({n})" for n in range(3, 13)},
    "Q8": "quaternion(8)",
    "C2xC2": "directProduct(cyclic(2), cyclic(2))",
    "C2xC4": "directProduct(cyclic(2), cyclic(4))",
    "C2^3": "directProduct(cyclic(2), directProduct(cyclic(2), cyclic(2)))",
    "C3xC3": "directProduct(cyclic(3), cyclic(3))",
    "C2xC8": "directProduct(cyclic(2), cyclic(8))",
    "C4xC4": "directProduct(cyclic(4), cyclic(4))",
    "C2xC2xC4": "directProduct(cyclic(2), directProduct(cyclic(2), cyclic(4)))",
    "C2xC6": "directProduct(cyclic(2), cyclic(6))",
    "C3xC6": "directProduct(cyclic(3), cyclic(6))",
    "C2xC10": "directProduct(cyclic(2), cyclic(10))",
    "C2xC12": "directProduct(cyclic(2), cyclic(12))",
    "S3xC3": "directProduct(symmetric(3), cyclic(3))",
    "S3xC4": "directProduct(symmetric(3), cyclic(4))",
    "D8xC2": "directProduct(dihedral(4), cyclic(2))",
    "Q8xC2": "directProduct(quaternion(8), cyclic(2))",
    "Q8xC3": "directProduct(quaternion(8), cyclic(3))",
    "D8xC3": "directProduct(dihedral(4), cyclic(3))",
    "S3xC2xC2": "directProduct(symmetric(3), directProduct(cyclic(2), cyclic(2)))",
    "F20": "fromGenerators((1 2 3 4 5), (2 3 5 4))",
    "F21": "fromGenerators((1 2 3 4 5 6 7), (2 3 5)(4 7 6))",
    "F42": "fromGenerators((1 2 3 4 5 6 7), (2 4 3 7 5 6))",
    # supersoluble, larger
    "S3xS3": "directProduct(symmetric(3), symmetric(3))",
    "S3xC5": "directProduct(symmetric(3), cyclic(5))",
    "C2xC3xC5xC7": "directProduct(directProduct(cyclic(2), cyclic(3)), directProduct(cyclic(5), cyclic(7)))",
    "S3xC35": "directProduct(symmetric(3), directProduct(cyclic(5), cyclic(7)))",
    "D10xC21": "directProduct(dihedral(5), directProduct(cyclic(3), cyclic(7)))",
    # nonsupersoluble, soluble
    "A4": "alternating(4)",
    "S4": "symmetric(4)",
    "A4xC2": "directProduct(alternating(4), cyclic(2))",
    "A4xC3": "directProduct(alternating(4), cyclic(3))",
    "A4xC5": "directProduct(alternating(4), cyclic(5))",
    "A4xC7": "directProduct(alternating(4), cyclic(7))",
    "S4xC2": "directProduct(symmetric(4), cyclic(2))",
    "S4xC3": "directProduct(symmetric(4), cyclic(3))",
    "S4xC5": "directProduct(symmetric(4), cyclic(5))",
    "A4xS3": "directProduct(alternating(4), symmetric(3))",
    "A4xC6": "directProduct(alternating(4), cyclic(6))",
    "A4xC2xC2": "directProduct(alternating(4), directProduct(cyclic(2), cyclic(2)))",
    "A4xC10": "directProduct(alternating(4), cyclic(10))",
    "A4xC3xC5": "directProduct(alternating(4), directProduct(cyclic(3), cyclic(5)))",
    # insoluble
    "A5": "alternating(5)",
    "S5": "symmetric(5)",
}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for old in OUT.iterdir():
        if old.suffix in (".grp", ".expr"):
            old.unlink()
    for name, expr in BUILDERS.items():
        order = Group(build_generators(expr)).order
        (OUT / f"{name}.expr").write_text(f"name {name}\nexpr {expr}\norder {order}\n")
    for name, gens in generator_groups().items():
        order = Group(gens).order
        (OUT / f"{name}.grp").write_text(format_group_file(name, gens, order))
    for p in sorted(OUT.iterdir()):
        print(p.name, p.read_text().strip().splitlines()[-1])


if __name__ == "__main__":
    main()

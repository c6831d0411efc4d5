#!/usr/bin/env python3
"""Write the rational irreducible representation fixtures.

Each group is given by permutation generators; each irrep by the images of
those generators (integer matrices written as strings).  The C++ loader
rebuilds every group element in the same breadth-first order as
GroupTable::from_permutations and validates multiplicativity.

Usage: gen_irreps.py OUTPUT_DIR
"""

import json
import sys
from pathlib import Path


def perm_matrix(p):
    n = len(p)
    m = [[0] * n for _ in range(n)]
    for i, j in enumerate(p):
        m[j][i] = 1
    return m


def perm_sign(p):
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def standard_matrix(p):
    """Permutation action on the sum-zero subspace.

    A sum-zero vector is determined by its first n-1 coordinates, which are
    used as the basis coordinates."""
    n = len(p)
    full = perm_matrix(p)
    # Column i is the image of e_i - e_{n-1}, truncated to n-1 coordinates.
    cols = []
    for i in range(n - 1):
        img = [full[r][i] - full[r][n - 1] for r in range(n)]
        cols.append(img[: n - 1])
    return [[cols[c][r] for c in range(n - 1)] for r in range(n - 1)]


def scalar(v):
    return [[v]]


def kron_sign(m, s):
    return [[s * x for x in row] for row in m]


def as_strings(m):
    return [[str(x) for x in row] for row in m]


def irrep(name, images):
    return {"name": name, "dim": len(images[0]), "generator_images": [as_strings(m) for m in images]}


def symmetric(n, name):
    gens = []
    if n >= 2:
        gens.append([1, 0] + list(range(2, n)))
        gens.append(list(range(1, n)) + [0])
    irreps = [irrep("trivial", [scalar(1) for _ in gens]), irrep("sign", [scalar(perm_sign(g)) for g in gens])]
    if n >= 3:
        irreps.append(irrep("standard", [standard_matrix(g) for g in gens]))
    if n == 4:
        irreps.append(irrep("standard_sign", [kron_sign(standard_matrix(g), perm_sign(g)) for g in gens]))
        # S_4 acts on the three pairings {01|23, 02|13, 03|12}; compose with
        # the standard representation of S_3.
        pairings = [frozenset([frozenset([0, 1]), frozenset([2, 3])]),
                    frozenset([frozenset([0, 2]), frozenset([1, 3])]),
                    frozenset([frozenset([0, 3]), frozenset([1, 2])])]

        def on_pairings(g):
            out = []
            for pr in pairings:
                img = frozenset(frozenset(g[x] for x in block) for block in pr)
                out.append(pairings.index(img))
            return out

        irreps.append(irrep("two_dim", [standard_matrix(on_pairings(g)) for g in gens]))
    return {"group": name, "order": factorial(n), "generators": gens, "irreps": irreps}


def factorial(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_div(a, b):
    """Exact division of integer polynomials (coefficients low to high)."""
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = a[k + len(b) - 1] // b[-1]
        q[k] = c
        for j, y in enumerate(b):
            a[k + j] -= c * y
    assert all(x == 0 for x in a), "inexact division"
    return q


def cyclotomic(d, cache={}):
    if d in cache:
        return cache[d]
    poly = [-1] + [0] * (d - 1) + [1]  # x^d - 1
    for k in range(1, d):
        if d % k == 0:
            poly = poly_div(poly, cyclotomic(k))
    cache[d] = poly
    return poly


def companion(poly):
    """Companion matrix of a monic polynomial (coefficients low to high)."""
    n = len(poly) - 1
    m = [[0] * n for _ in range(n)]
    for i in range(1, n):
        m[i][i - 1] = 1
    for i in range(n):
        m[i][n - 1] = -poly[i]
    return m


def cyclic(n):
    gen = list(range(1, n)) + [0]
    irreps = []
    for d in range(1, n + 1):
        if n % d == 0:
            name = "trivial" if d == 1 else f"cyclotomic_{d}"
            irreps.append(irrep(name, [companion(cyclotomic(d))]))
    return {"group": f"Z{n}", "order": n, "generators": [gen], "irreps": irreps}


def affine_line(q):
    """AGL(1, q) for prime q as permutations of F_q."""
    gens = [[(x + 1) % q for x in range(q)]]
    if q > 2:
        # A generator of F_q^*.
        for a in range(2, q):
            if len({pow(a, k, q) for k in range(1, q)}) == q - 1:
                gens.append([(a * x) % q for x in range(q)])
                break
    if q == 2:
        return {"group": "AGL(1,2)", "order": 2, "generators": gens,
                "irreps": [irrep("trivial", [scalar(1)]), irrep("sign", [scalar(-1)])]}
    data = symmetric(3, "AGL(1,3)")
    data["generators"] = gens
    data["irreps"] = [irrep("trivial", [scalar(1) for _ in gens]),
                      irrep("sign", [scalar(perm_sign(g)) for g in gens]),
                      irrep("standard", [standard_matrix(g) for g in gens])]
    return data


def trivial_group():
    return {"group": "trivial", "order": 1, "generators": [[0]], "irreps": [irrep("trivial", [scalar(1)])]}


def main():
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "fixtures/irreps")
    out.mkdir(parents=True, exist_ok=True)
    groups = [trivial_group(), symmetric(2, "S2"), symmetric(3, "S3"), symmetric(4, "S4"),
              affine_line(2), affine_line(3)]
    groups += [cyclic(n) for n in range(2, 7)]
    for g in groups:
        fname = g["group"].replace("(", "_").replace(")", "").replace(",", "_").lower() + ".json"
        (out / fname).write_text(json.dumps(g, indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()

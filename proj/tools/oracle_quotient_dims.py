#!/usr/bin/env python3
"""Independent cross-check of quotient dimension tables.

Recomputes, by direct row reduction over exact rationals at sample parameter
values, the degree-wise quotient dimensions that the C++ test suite freezes:
the quantum 2x2 coordinate algebra, its doubled-coefficient control, the
h-shifted filtered variant, the reflection-equation algebra of the deformed
transposition, and small commutative elimination references.  Everything here
is built from scratch (words as tuples, coefficients as Fractions) so the
numbers do not depend on the C++ implementation.
"""

from fractions import Fraction as F
from itertools import product

NG = 4  # generators a11 a12 a21 a22 -> indices 0 1 2 3


# --- tiny noncommutative polynomials: dict word-tuple -> Fraction -----------

def nc(*pairs):
    d = {}
    for w, c in pairs:
        d[w] = d.get(w, F(0)) + c
        if d[w] == 0:
            del d[w]
    return d


def nc_add(a, b):
    d = dict(a)
    for w, c in b.items():
        d[w] = d.get(w, F(0)) + c
        if d[w] == 0:
            del d[w]
    return d


def nc_scale(a, k):
    return {w: c * k for w, c in a.items()} if k else {}


def nc_mul(a, b):
    d = {}
    for w1, c1 in a.items():
        for w2, c2 in b.items():
            w = w1 + w2
            d[w] = d.get(w, F(0)) + c1 * c2
            if d[w] == 0:
                del d[w]
    return d


def sandwich(rel, x, y):
    return {x + w + y: c for w, c in rel.items()}


# --- exact elimination -------------------------------------------------------

def eliminate(vectors):
    """Row reduce dict-rows keyed by an orderable column id; returns pivots."""
    rows = {}
    for v in vectors:
        v = dict(v)
        while v:
            p = min(v)
            if p in rows:
                c = v.pop(p)
                for k, cv in rows[p].items():
                    if k == p:
                        continue
                    nv = v.get(k, F(0)) - c * cv
                    if nv == 0:
                        v.pop(k, None)
                    else:
                        v[k] = nv
            else:
                c = v[p]
                rows[p] = {k: cv / c for k, cv in v.items()}
                break
    return rows


def words(ng, d):
    return list(product(range(ng), repeat=d))


def graded_dims(rels, ng, dmax):
    dims = [1, ng]
    for d in range(2, dmax + 1):
        vecs = []
        for r in rels:
            for a in range(d - 1):
                for x in words(ng, a):
                    for y in words(ng, d - 2 - a):
                        vecs.append(sandwich(r, x, y))
        dims.append(ng ** d - len(eliminate(vecs)))
    return dims


def filtered_dims(rels, ng, dmax):
    # Column order: longer words first, so a row's pivot length bounds its
    # filtration level.
    def key(w):
        return (-len(w), w)

    vecs = []
    for r in rels:
        rdeg = max(len(w) for w in r)
        for a in range(dmax - rdeg + 1):
            for b in range(dmax - rdeg - a + 1):
                for x in words(ng, a):
                    for y in words(ng, b):
                        vecs.append({key(w): c for w, c in
                                     sandwich(r, x, y).items()})
    pivots = eliminate(vecs)
    dims = []
    ambient = 0
    for d in range(dmax + 1):
        ambient += ng ** d
        inside = sum(1 for (neg, _w) in pivots if -neg <= d)
        dims.append(ambient - inside)
    return dims


# --- relation families on 2x2 matrix coordinates ----------------------------

def rels_quantum_2x2(q, cross_factor=F(1)):
    t = q - 1 / q
    s = cross_factor * t
    return [
        nc(((0, 1), F(1)), ((1, 0), -q)),                  # row 1
        nc(((2, 3), F(1)), ((3, 2), -q)),                  # row 2
        nc(((0, 2), F(1)), ((2, 0), -q)),                  # column 1
        nc(((1, 3), F(1)), ((3, 1), -q)),                  # column 2
        nc(((1, 2), F(1)), ((2, 1), F(-1))),               # antidiagonal
        nc(((0, 3), F(1)), ((3, 0), F(-1)), ((2, 1), -s)),  # diagonal
    ]


def rels_twisted_antidiagonal_2x2(q):
    """Control: antidiagonal pair q-commutes instead of commuting."""
    rels = rels_quantum_2x2(q)
    rels[4] = nc(((1, 2), F(1)), ((2, 1), -q))
    return rels


def rels_twisted_row_2x2(q):
    """Control: first row relation twisted to q^2, everything else intact."""
    rels = rels_quantum_2x2(q)
    rels[0] = nc(((0, 1), F(1)), ((1, 0), -q * q))
    return rels


def rels_shifted_2x2(q, h):
    rels = rels_quantum_2x2(q)
    for idx, tail in ((0, (1,)), (1, (2,)), (2, (2,)), (3, (1,))):
        rels[idx] = nc_add(rels[idx], {tail: -h})
    return rels


def rels_reflection_2x2(q):
    """Entries of S u1 S u1 - u1 S u1 S for the deformed transposition."""
    t = q - 1 / q
    s = [[F(0)] * 4 for _ in range(4)]
    for i, j in product(range(2), repeat=2):
        col = i * 2 + j
        if i == j:
            s[col][col] = q
        else:
            s[j * 2 + i][col] = F(1)
            if i < j:
                s[col][col] = t

    u1 = [[nc() for _ in range(4)] for _ in range(4)]
    for i, j, k in product(range(2), repeat=3):
        u1[i * 2 + k][j * 2 + k] = nc(((i * 2 + j,), F(1)))

    def smul(mat):  # s . mat
        return [[nc_add(nc_scale(mat[0][b], s[a][0]),
                        nc_add(nc_scale(mat[1][b], s[a][1]),
                               nc_add(nc_scale(mat[2][b], s[a][2]),
                                      nc_scale(mat[3][b], s[a][3]))))
                 for b in range(4)] for a in range(4)]

    def muls(mat):  # mat . s
        return [[nc_add(nc_scale(mat[a][0], s[0][b]),
                        nc_add(nc_scale(mat[a][1], s[1][b]),
                               nc_add(nc_scale(mat[a][2], s[2][b]),
                                      nc_scale(mat[a][3], s[3][b]))))
                 for b in range(4)] for a in range(4)]

    def mulnc(x, y):  # x . y, both NC matrices
        return [[tuple_sum([nc_mul(x[a][c], y[c][b]) for c in range(4)])
                 for b in range(4)] for a in range(4)]

    def tuple_sum(ps):
        acc = nc()
        for p in ps:
            acc = nc_add(acc, p)
        return acc

    lhs = mulnc(muls(smul(u1)), u1)
    rhs = muls(mulnc(muls(u1), u1))
    rels = []
    for a in range(4):
        for b in range(4):
            r = nc_add(lhs[a][b], nc_scale(rhs[a][b], F(-1)))
            if r:
                rels.append(r)
    return rels


# --- commutative references ---------------------------------------------------

def cm(*pairs):
    d = {}
    for m, c in pairs:
        d[m] = d.get(m, F(0)) + c
        if d[m] == 0:
            del d[m]
    return d


def monos(ng, d):
    if ng == 1:
        return [(d,)]
    out = []
    for v in range(d, -1, -1):
        out.extend([(v,) + rest for rest in monos(ng - 1, d - v)])
    return out


def cmul_mono(rel, m):
    return {tuple(a + b for a, b in zip(w, m)): c for w, c in rel.items()}


def commutative_filtered_dims(rels, ng, dmax):
    def key(m):
        return (-sum(m), m)

    vecs = []
    for r in rels:
        rdeg = max(sum(m) for m in r)
        for a in range(dmax - rdeg + 1):
            for m in monos(ng, a):
                vecs.append({key(w): c for w, c in cmul_mono(r, m).items()})
    pivots = eliminate(vecs)
    dims = []
    ambient = 0
    for d in range(dmax + 1):
        ambient += len(monos(ng, d))
        inside = sum(1 for (neg, _m) in pivots if -neg <= d)
        dims.append(ambient - inside)
    return dims


def commutative_graded_dims(rels, ng, dmax):
    dims = [1, ng]
    for d in range(2, dmax + 1):
        cols = {m: i for i, m in enumerate(monos(ng, d))}
        vecs = []
        for r in rels:
            for m in monos(ng, d - 2):
                vecs.append({cols[w]: c for w, c in cmul_mono(r, m).items()})
        dims.append(len(cols) - len(eliminate(vecs)))
    return dims


def main():
    print("quantum 2x2 coordinate algebra, per-degree dims 0..3")
    for q in (F(2), F(5), F(5, 3)):
        print(f"  q={q}: {graded_dims(rels_quantum_2x2(q), NG, 3)}")

    print("doubled diagonal-relation control, per-degree dims 0..3")
    for q in (F(2), F(5), F(5, 3)):
        print(f"  q={q}: "
              f"{graded_dims(rels_quantum_2x2(q, cross_factor=F(2)), NG, 3)}")
    print(f"  q=1: "
          f"{graded_dims(rels_quantum_2x2(F(1), cross_factor=F(2)), NG, 3)}")

    print("twisted-antidiagonal control, per-degree dims 0..3")
    for q in (F(2), F(5), F(5, 3), F(1)):
        print(f"  q={q}: {graded_dims(rels_twisted_antidiagonal_2x2(q), NG, 3)}")

    print("twisted-row control, per-degree dims 0..3")
    for q in (F(2), F(5), F(5, 3), F(1)):
        print(f"  q={q}: {graded_dims(rels_twisted_row_2x2(q), NG, 3)}")

    print("h-shifted filtered variant, cumulative dims 0..3")
    for q, h in ((F(3), F(1)), (F(2), F(1, 3))):
        print(f"  q={q},h={h}: {filtered_dims(rels_shifted_2x2(q, h), NG, 3)}")

    print("reflection-equation algebra of the deformed transposition")
    for q in (F(2), F(5, 3)):
        rels = rels_reflection_2x2(q)
        deg2 = len(eliminate([{tuple(w): c for w, c in r.items()}
                              for r in rels]))
        print(f"  q={q}: nonzero entries {len(rels)}, independent deg-2 "
              f"relations {deg2}, dims {graded_dims(rels, NG, 3)}")

    print("commutative references")
    print(f"  x^2 - y^2 graded: "
          f"{commutative_graded_dims([cm(((2, 0), F(1)), ((0, 2), F(-1)))], 2, 3)}")
    print(f"  x^2 - y^2 - 1 filtered: "
          f"{commutative_filtered_dims([cm(((2, 0), F(1)), ((0, 2), F(-1)), ((0, 0), F(-1)))], 2, 3)}")
    quadric = cm(((1, 0, 1), F(2)), ((0, 2, 0), F(1, 2)), ((0, 0, 0), F(-7)))
    print(f"  2uw + v^2/2 - 7 filtered: "
          f"{commutative_filtered_dims([quadric], 3, 3)}")


if __name__ == "__main__":
    main()

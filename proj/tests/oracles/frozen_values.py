"""Independent oracle for the frozen regression values used in the C++ tests.

Pure Python with fractions / modular integers: every word of each length is
enumerated explicitly and ranks are computed by plain Gaussian elimination.
Nothing here shares code with the C++ engine.

    python3 tests/oracles/frozen_values.py
"""
from fractions import Fraction
from itertools import product
from math import gcd


def mat_mul(a, b, mod=None):
    n = len(a)
    out = [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    if mod:
        out = [[x % mod for x in row] for row in out]
    return out


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def rank(vectors, mod=None):
    rows = [list(map(Fraction, v)) if mod is None else [x % mod for x in v] for v in vectors]
    r = 0
    if not rows:
        return 0
    cols = len(rows[0])
    for c in range(cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = (1 / rows[r][c]) if mod is None else pow(rows[r][c], mod - 2, mod)
        rows[r] = [x * inv if mod is None else x * inv % mod for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y if mod is None else (x - f * y) % mod for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def flat(m):
    return [x for row in m for x in row]


def words_of_length(gens, k, mod=None):
    n = len(gens[0])
    for w in product(range(len(gens)), repeat=k):
        m = identity(n)
        for g in w:
            m = mat_mul(m, gens[g], mod)
        yield m


def brute_dims(gens, with_identity, max_len, mod=None):
    vecs = [flat(identity(len(gens[0])))] if with_identity else []
    dims = [rank(vecs, mod)]
    for k in range(1, max_len + 1):
        vecs += [flat(m) for m in words_of_length(gens, k, mod)]
        dims.append(rank(vecs, mod))
    return dims


def length_from_dims(dims):
    for k in range(len(dims) - 1):
        if dims[k] == dims[k + 1]:
            return k
    return None


def J(n):
    return [[1 if j == i + 1 else 0 for j in range(n)] for i in range(n)]


def T(m):
    return [list(r) for r in zip(*m)]


def E(n, i, j):
    m = [[0] * n for _ in range(n)]
    m[i - 1][j - 1] = 1
    return m


def B(n):
    m = E(n, n - 1, 1)
    m[n - 1][1] = -1
    return m


def mpow(m, e):
    out = identity(len(m))
    for _ in range(e):
        out = mat_mul(out, m)
    return out


def exact_length_dim(gens, k):
    return rank([flat(m) for m in words_of_length(gens, k)])


if __name__ == "__main__":
    s = [E(2, 1, 2), E(2, 2, 1), E(2, 2, 2)]
    print("E12,E21,E22 no identity K=3:", brute_dims(s, False, 3))
    print("E12,E21,E22 identity K=3:", brute_dims(s, True, 3))
    print("J3,B3 identity K=5:", brute_dims([J(3), B(3)], True, 5))
    print("J3,B3 no identity K=5:", brute_dims([J(3), B(3)], False, 5))
    print("J4,B4 identity K=6:", brute_dims([J(4), B(4)], True, 6))
    print("J2 identity K=2:", brute_dims([J(2)], True, 2))
    for n, i in [(5, 2), (5, 3), (7, 3), (7, 2), (4, 1), (3, 1), (2, 1)]:
        a, b = mpow(J(n), i), mpow(T(J(n)), n - i)
        print(f"exact-length n-2 span dim n={n} i={i}:", exact_length_dim([a, b], n - 2))

    # M_2(GF(2)): all 2^16 subsets of the 16 matrices. Full word enumeration is too slow
    # for large subsets, so layers are grown as span(L_{k-1} + S * basis(L_{k-1})) with a
    # basis re-extracted by elimination each step.
    mats = [[[(m >> 0) & 1, (m >> 1) & 1], [(m >> 2) & 1, (m >> 3) & 1]] for m in range(16)]
    generating = 0
    max_l = max_l0 = 0

    def layered(sub, with_identity):
        basis = [identity(2)] if with_identity else []
        dims = [len(basis)]
        layer = basis if with_identity else None
        while True:
            cand = [flat(b) for b in basis]
            if layer is None:
                new = list(sub)
            else:
                new = [mat_mul(g, b, 2) for g in sub for b in basis]
            cand += [flat(m) for m in new]
            # independent subset, greedy
            kept = []
            for v in cand:
                if rank(kept + [v], 2) > len(kept):
                    kept.append(v)
            basis = [[v[0:2], v[2:4]] for v in kept]
            layer = basis
            if len(kept) == dims[-1]:
                return dims
            dims.append(len(kept))

    for bits in range(1, 1 << 16):
        sub = [mats[k] for k in range(16) if bits >> k & 1]
        d = layered(sub, True)
        if d[-1] != 4:
            continue
        generating += 1
        d0 = layered(sub, False)
        max_l = max(max_l, len(d) - 1)
        max_l0 = max(max_l0, len(d0) - 1)
    print("M2(GF2) generating subsets:", generating, "max l:", max_l, "max l0:", max_l0)

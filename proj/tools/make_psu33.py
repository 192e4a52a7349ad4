"""Writes generators of PSU(3,3) acting on the 28 isotropic points of GF(9)^3.

The Hermitian form is h(x, y) = x1*y3^3 + x2*y2^3 + x3*y1^3. Matrices of
determinant 1 preserving h are found among upper unitriangular, antidiagonal
and diagonal shapes; their action on isotropic points generates SU(3,3),
which has trivial centre. Two random elements generating the full group of
order 6048 are then written in the group file format.

Usage: python3 make_psu33.py > data/psu33.grp
"""
import itertools
import random
import sys

P = 3
# GF(9) = GF(3)[x]/(x^2 + 2x + 2); element a + b*x encoded as a + 3*b.


def add(u, v):
    return (u % 3 + v % 3) % 3 + 3 * ((u // 3 + v // 3) % 3)


def mul(u, v):
    a, b = u % 3, u // 3
    c, d = v % 3, v // 3
    # (a + b x)(c + d x) = ac + (ad + bc) x + bd x^2, with x^2 = x + 1
    c0 = a * c + b * d
    c1 = a * d + b * c + b * d
    return c0 % 3 + 3 * (c1 % 3)


def frob(u):
    return mul(mul(u, u), u)


F = range(9)


def herm(x, y):
    s = 0
    for i, j in ((0, 2), (1, 1), (2, 0)):
        s = add(s, mul(x[i], frob(y[j])))
    return s


def matvec(m, v):
    out = []
    for i in range(3):
        s = 0
        for j in range(3):
            s = add(s, mul(m[i][j], v[j]))
        out.append(s)
    return tuple(out)


def det(m):
    def neg(u):
        return mul(u, 2)
    t = 0
    for perm, sgn in (((0, 1, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1),
                      ((0, 2, 1), -1), ((2, 1, 0), -1), ((1, 0, 2), -1)):
        prod = 1
        for i in range(3):
            prod = mul(prod, m[i][perm[i]])
        t = add(t, prod if sgn == 1 else neg(prod))
    return t


BASIS = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


def unitary(m):
    cols = [matvec(m, e) for e in BASIS]
    return all(herm(cols[i], cols[j]) == herm(BASIS[i], BASIS[j])
               for i in range(3) for j in range(3))


def normalize(v):
    for c in v:
        if c:
            inv = next(t for t in F if mul(c, t) == 1)
            return tuple(mul(inv, x) for x in v)
    raise ValueError("zero vector")


points = sorted({normalize(v) for v in itertools.product(F, repeat=3)
                 if any(v) and herm(v, v) == 0})
assert len(points) == 28, len(points)
index = {p: i for i, p in enumerate(points)}

mats = []
for a, b, c in itertools.product(F, repeat=3):
    mats.append(((1, a, b), (0, 1, c), (0, 0, 1)))
for x, y, z in itertools.product(range(1, 9), repeat=3):
    mats.append(((0, 0, x), (0, y, 0), (z, 0, 0)))
    mats.append(((x, 0, 0), (0, y, 0), (0, 0, z)))
mats = [m for m in mats if det(m) == 1 and unitary(m)]


def as_perm(m):
    return tuple(index[normalize(matvec(m, p))] for p in points)


gens = sorted({as_perm(m) for m in mats})
identity = tuple(range(28))


def compose(p, q):
    return tuple(p[q[i]] for i in range(len(q)))


def closure(gs, limit=10 ** 5):
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gs:
                k = compose(g, h)
                if k not in seen:
                    seen.add(k)
                    nxt.append(k)
        frontier = nxt
        if len(seen) > limit:
            break
    return seen


G = closure(gens)
assert len(G) == 6048, len(G)

rng = random.Random(20240601)
elements = sorted(G)
while True:
    a, b = rng.choice(elements), rng.choice(elements)
    if len(closure([a, b])) == 6048:
        break


def cycles(p):
    seen, out = set(), []
    for s in range(len(p)):
        if s in seen or p[s] == s:
            continue
        cyc, x = [], s
        while x not in seen:
            seen.add(x)
            cyc.append(x + 1)
            x = p[x]
        out.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(out)


out = sys.stdout
out.write("# PSU(3,3) = U3(3), order 6048, on the 28 isotropic points of the\n")
out.write("# Hermitian form x1*y3^3 + x2*y2^3 + x3*y1^3 over GF(9).\n")
out.write("# Generated by tools/make_psu33.py (seed 20240601).\n")
out.write("name PSU(3,3)\n")
out.write("degree 28\n")
out.write(cycles(a) + "\n")
out.write(cycles(b) + "\n")

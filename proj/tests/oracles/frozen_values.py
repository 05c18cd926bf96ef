"""Brute-force oracle for the expected values frozen into the C++ tests.

Everything here is computed by direct enumeration with Python's Fraction and
itertools, without sharing any code path with the library.  Run it to
regenerate the numbers quoted in tests/*.cpp:

    python3 tests/oracles/frozen_values.py
"""
from fractions import Fraction as F
from itertools import permutations, product, combinations, combinations_with_replacement
from math import comb


def act(sigma, t):
    out = [None] * len(t)
    for i, v in enumerate(t):
        out[sigma[i]] = v
    return tuple(out)


def coinv_product(group, x, y, op):
    """Average of class(x op sigma.y) over the group; classes = min over orbit."""
    def cls(t):
        return min(act(s, t) for s in group)
    out = {}
    for s in group:
        z = tuple(op(a, b) for a, b in zip(x, act(s, y)))
        c = cls(z)
        out[c] = out.get(c, 0) + F(1, len(group))
    return out


def cyclic(m):
    return [tuple((i + r) % m for i in range(m)) for r in range(m)]


def show(label, value):
    print(f"{label}: {value}")


# canonical rep of ([1], {}, [1]) under Z3, labels {}=0 < [1]=1
t = (1, 0, 1)
orbit = {act(s, t) for s in cyclic(3)}
show("canonical (1,0,1) under Z3", (min(orbit), len(orbit)))

# Burnside for Z3 on dim-2 tuples
def cycles(p):
    seen, c = set(), 0
    for i in range(len(p)):
        if i not in seen:
            c += 1
            j = i
            while j not in seen:
                seen.add(j)
                j = p[j]
    return c
show("Z3 dim2 orbits", F(sum(2 ** cycles(s) for s in cyclic(3)), 3))

# cyclic table
uni = lambda a, b: a | b
inter = lambda a, b: a & b
hats = {0: (0, 0, 0), 1: (0, 0, 1), 2: (0, 1, 1), 3: (1, 1, 1)}
for a, b in [(1, 1), (1, 2), (2, 2)]:
    show(f"Z3 {a}u{b}", coinv_product(cyclic(3), hats[a], hats[b], uni))
    show(f"Z3 {a}n{b}", coinv_product(cyclic(3), hats[a], hats[b], inter))

# Sym^2 m-ary union of (1,1,1) by folding
S2 = list(permutations(range(2)))
h1 = (0, 1)
step = coinv_product(S2, h1, h1, uni)
acc = {}
for c, w in step.items():
    for c2, w2 in coinv_product(S2, c, h1, uni).items():
        acc[c2] = acc.get(c2, 0) + w * w2
show("S2 union 1,1,1", acc)

# Sym^2 axiom 6a at (1^,1^): 1^ n (1^ u 1^)
u = coinv_product(S2, h1, h1, uni)
res = {}
for c, w in u.items():
    for c2, w2 in coinv_product(S2, h1, c, inter).items():
        res[c2] = res.get(c2, 0) + w * w2
show("S2 1n(1u1)", res)
# axiom 6a at (1^,0^): 1^ u 0^ = 1^, so the left side is 1^ n 1^
show("S2 1n(1u0)", coinv_product(S2, h1, h1, inter))

# closed forms k=3, a=1, b=2 by direct average over S3 on subsets of [3]
def hat_avg(k, a, b, op):
    out = {}
    A = set(range(a))
    perms = list(permutations(range(k)))
    for s in perms:
        B = {s[i] for i in range(b)}
        c = len(op(A, B))
        out[c] = out.get(c, 0) + F(1, len(perms))
    return dict(sorted(out.items()))
show("closed k3 1u2", hat_avg(3, 1, 2, lambda x, y: x | y))
show("closed k3 1n2", hat_avg(3, 1, 2, lambda x, y: x & y))
show("uncorrected k3 1n2", {l: F(comb(1, l), comb(3, 2)) for l in range(0, min(1, 2) + 1)})

# distribution: (1/2 {} + 1/2 [1]) u same
d = {0: F(1, 2), 1: F(1, 2)}
out = {}
for a, pa in d.items():
    for b, pb in d.items():
        out[a | b] = out.get(a | b, 0) + pa * pb
show("dist union", out)

# classical IE counting measure n=3
sets = [{1, 2}, {2, 3}, {1, 3}]
rhs = 0
for r in range(1, 4):
    for I in combinations(range(3), r):
        inter_set = set.intersection(*[sets[i] for i in I])
        rhs += (-1) ** (r + 1) * len(inter_set)
show("classical IE rhs", rhs)


# symmetric IE instances: e2 and h2 with {a,b}={{1},{2}}, {c,d}={{1},{}}, weights (1,1)
def mu_of(w):
    return lambda s: sum((w[i - 1] for i in s), F(0))


def nfold_union(classes):
    m = len(classes[0])
    perms = list(permutations(range(m)))
    out = {}
    n = len(classes)
    for sig in product(perms, repeat=n - 1):
        sig = (tuple(range(m)),) + sig
        cls = []
        for j in range(m):
            s = frozenset()
            for i in range(n):
                s = s | classes[i][sig[i][j]]
            cls.append(s)
        key = tuple(sorted(cls, key=lambda z: sum(1 << (e - 1) for e in z)))
        out[key] = out.get(key, 0) + F(1, len(perms) ** (n - 1))
    return out


def e_l(vals, l):
    return sum((prod_(c) for c in combinations(vals, l)), F(0))


def h_l(vals, l):
    return sum((prod_(c) for c in combinations_with_replacement(vals, l)), F(0))


def prod_(xs):
    r = F(1)
    for x in xs:
        r *= x
    return r


mu = mu_of([F(1), F(1)])
A = [frozenset({1}), frozenset({2})]
C = [frozenset({1}), frozenset()]
U = nfold_union([A, C])
show("nfold {{1},{2}} u {{1},{}}", U)
show("e2 lhs", sum(w * e_l([mu(s) for s in c], 2) for c, w in U.items()))
show("h2 lhs", sum(w * h_l([mu(s) for s in c], 2) for c, w in U.items()))


def listed_2e2(mu, a, b, c, d):
    M = mu
    return (2 * M(a) * M(b) + 2 * M(c) * M(d) + M(a) * M(d) + M(c) * M(b)
            + M(a) * M(c) + M(d) * M(b) - M(a) * M(b & d) + M(c) * M(b & d)
            + M(b) * M(a & c) + M(d) * M(a & c) + M(a) * M(b & c)
            + M(d) * M(b & c) + M(b) * M(a & d) + M(c) * M(a & d))


def listed_2h2(mu, a, b, c, d):
    M = mu
    return ((M(a) + M(c) - M(a & c)) ** 2 + (M(b) + M(d) - M(b & d)) ** 2
            + (M(a) + M(d) - M(a & d)) ** 2 + (M(b) + M(c) - M(b & c)) ** 2
            + 2 * M(a) * M(b) + 2 * M(c) * M(a) + M(a) * M(d) + M(c) * M(b) + M(a) * M(c)
            + M(d) * M(a) - M(a) * M(b & d) + M(c) * M(b & d) + M(b) * M(a & c)
            + M(d) * M(a & c) + M(a) * M(b & c) + M(d) * M(b & c) + M(b) * M(a & d)
            + M(c) * M(a & d))


show("listed e2", listed_2e2(mu, *A, *C) / 2)
show("listed h2", listed_2h2(mu, *A, *C) / 2)

# richer instance used by acceptance: k=3, weights (2, -1/2, 3/4)
mu3 = mu_of([F(2), F(-1, 2), F(3, 4)])
A3 = [frozenset({1, 2}), frozenset({3})]
C3 = [frozenset({2, 3}), frozenset({1})]
U3 = nfold_union([A3, C3])
show("k3 e2 lhs", sum(w * e_l([mu3(s) for s in c], 2) for c, w in U3.items()))
show("k3 h2 lhs", sum(w * h_l([mu3(s) for s in c], 2) for c, w in U3.items()))
show("k3 listed e2", listed_2e2(mu3, *A3, *C3) / 2)
show("k3 listed h2", listed_2h2(mu3, *A3, *C3) / 2)

# P([1]) x P([2]) atoms
show("product atoms", 1 + 2)

"""Independent reference computations used only by the tests."""

from fractions import Fraction
from functools import reduce
from itertools import combinations, permutations
from math import gcd, prod


def ieo_by_subsets(n):
    """IEO sequences by filtering all subsets of {1..n}."""
    out = []
    for k in range(n + 1):
        for c in combinations(range(1, n + 1), k):
            if all(u % 2 == j % 2 for j, u in enumerate(c, start=1)):
                out.append(c)
    return out


def fib(k):
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def black_box_crossing(x, y, positive=True):
    """One crossing of a two-strand twist: the under-strand leaves as 2*over - in."""
    return (y, 2 * y - x) if positive else (2 * x - y, x)


def simulate_colors(twists, a, b):
    """Crossing-by-crossing color propagation down the three visible strands.

    Even twists act on (l, m); odd twists on (r, m) read right to left.
    """
    l, m, r = b, b, a
    for i, n in enumerate(twists, start=1):
        for _ in range(abs(n)):
            if i % 2 == 0:
                l, m = black_box_crossing(l, m, n > 0)
            else:
                r, m = black_box_crossing(r, m, n > 0)
    return l, m, r


def det_leibniz(m):
    n = len(m)
    total = 0
    for p in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        total += (-1) ** inv * prod(m[i][p[i]] for i in range(n))
    return total


def det_fraction(m):
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    assert det.denominator == 1
    return int(det)


def invariant_factors_by_minors(m):
    """Invariant factors d_k = D_k / D_{k-1}, D_k the gcd of all k x k minors."""
    rows, cols = len(m), len(m[0]) if m else 0
    size = min(rows, cols)
    divisors = [1]
    for k in range(1, size + 1):
        g = 0
        for rs in combinations(range(rows), k):
            for cs in combinations(range(cols), k):
                g = gcd(g, det_fraction([[m[i][j] for j in cs] for i in rs]))
        divisors.append(g)
    out = []
    for k in range(1, size + 1):
        out.append(0 if divisors[k] == 0 else divisors[k] // divisors[k - 1])
    return out


def spanning_trees_by_enumeration(vertex_count, edges):
    """Count edge subsets of size V-1 that form a tree (parallel edges distinct)."""
    if vertex_count <= 1:
        return 1
    count = 0
    for subset in combinations(range(len(edges)), vertex_count - 1):
        parent = list(range(vertex_count))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        ok = True
        for e in subset:
            u, v = (find(x) for x in edges[e])
            if u == v:
                ok = False
                break
            parent[u] = v
        count += ok
    return count


def count_solutions_mod(matrix, r):
    """Plain enumeration of x in (Z/r)^n with matrix @ x = 0."""
    from itertools import product

    n = len(matrix[0])
    return sum(
        1
        for x in product(range(r), repeat=n)
        if all(sum(c * v for c, v in zip(row, x)) % r == 0 for row in matrix)
    )


def gcd_all(values):
    return reduce(gcd, values, 0)

"""Exact integer linear algebra for coloring matrices and checkerboard graphs.

Everything here works on plain Python ints, so nothing overflows.  A matrix
is any sequence of equal-length integer rows.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product
from math import gcd
from typing import Iterable, Sequence

from ratknot.polynomials import TwistVector, determinant

IntMatrix = Sequence[Sequence[int]]

DEFAULT_BRUTE_FORCE_CAP = 10**7


class BruteForceLimitExceeded(RuntimeError):
    """The exhaustive coloring search would exceed its work bound."""


def _rows(m) -> list[list[int]]:
    rows = getattr(m, "entries", m)
    out = [list(r) for r in rows]
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("ragged matrix")
    return out


def _shape(rows: list[list[int]]) -> tuple[int, int]:
    return len(rows), (len(rows[0]) if rows else 0)


def det_exact(m: IntMatrix) -> int:
    """Determinant by Bareiss fraction-free elimination; the 0x0 determinant is 1."""
    a = _rows(m)
    n, c = _shape(a)
    if n != c and n:
        raise ValueError(f"determinant of a non-square {n}x{c} matrix")
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1] if n else 1


def first_minor(m: IntMatrix, drop_row: int, drop_col: int) -> int:
    a = _rows(m)
    n, c = _shape(a)
    if n != c:
        raise ValueError(f"first minor of a non-square {n}x{c} matrix")
    if not (0 <= drop_row < n and 0 <= drop_col < n):
        raise IndexError(f"({drop_row}, {drop_col}) out of range for a {n}x{n} matrix")
    return det_exact(
        [[x for j, x in enumerate(row) if j != drop_col] for i, row in enumerate(a) if i != drop_row]
    )


@dataclass(frozen=True)
class SnfResult:
    """Invariant factors ``d_1 | d_2 | ...`` padded with zeros to ``min(rows, cols)``."""

    diagonal: tuple[int, ...]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)

    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d > 1)


def smith_normal_form(m: IntMatrix) -> SnfResult:
    """Smith normal form by integer row and column operations."""
    a = _rows(m)
    nr, nc = _shape(a)
    size = min(nr, nc)
    for t in range(size):
        # bring a nonzero entry of least absolute value to (t, t)
        while True:
            piv = None
            for i in range(t, nr):
                for j in range(t, nc):
                    if a[i][j] and (piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]])):
                        piv = (i, j)
            if piv is None:
                return _finish([a[i][i] for i in range(t)] + [0] * (size - t))
            i, j = piv
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
            p = a[t][t]
            clean = True
            for i in range(t + 1, nr):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    clean = False
            for j in range(t + 1, nc):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    clean = False
            if not clean:
                continue
            # pivot must divide the rest of the block; otherwise fold a bad row in
            bad = next(
                (i for i in range(t + 1, nr) for j in range(t + 1, nc) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
    return _finish([a[i][i] for i in range(size)])


def _finish(diag: list[int]) -> SnfResult:
    d = [abs(x) for x in diag]
    # restore the divisibility chain: zeros last, then gcd/lcm sweeps
    nz = sorted(x for x in d if x)
    for i in range(len(nz)):
        for j in range(i + 1, len(nz)):
            g = gcd(nz[i], nz[j])
            nz[i], nz[j] = g, nz[i] * nz[j] // g
    return SnfResult(tuple(nz + [0] * (len(d) - len(nz))))


def tree_count_recursion(tw: Iterable[int]) -> int:
    """``T(N)`` from ``T(0) = 1``, ``T(1) = n_1``, ``T(k+1) = n_{k+1} T(k) + T(k-1)``."""
    entries = list(tw.entries if isinstance(tw, TwistVector) else tw)
    for n in entries:
        if n <= 0:
            raise ValueError(f"tree count needs positive twists, got {n}")
    prev, cur = 0, 1  # T(-1) = 0 makes T(1) = n_1
    for n in entries:
        prev, cur = cur, n * cur + prev
    return cur


def laplacian(vertex_count: int, edges: Iterable[tuple[int, int]]) -> list[list[int]]:
    lap = [[0] * vertex_count for _ in range(vertex_count)]
    for u, v in edges:
        if u == v:
            continue
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    return lap


def _connected(vertex_count: int, edges) -> bool:
    if vertex_count == 0:
        return True
    adj = [[] for _ in range(vertex_count)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    todo = deque([0])
    while todo:
        for w in adj[todo.popleft()]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen) == vertex_count


def tree_count_matrix(g) -> int:
    """Spanning trees of a multigraph by the Matrix-Tree theorem.

    *g* needs ``vertex_count``, ``edges`` and ``hub``; the hub row and
    column are deleted from the Laplacian.
    """
    edges = list(g.edges)
    if not _connected(g.vertex_count, edges):
        raise ValueError("graph is disconnected")
    lap = laplacian(g.vertex_count, edges)
    return first_minor(lap, g.hub, g.hub) if g.vertex_count else 1


def _check_modulus(r: int) -> None:
    if isinstance(r, bool) or not isinstance(r, int) or r < 2:
        raise ValueError(f"modulus must be an integer >= 2, got {r!r}")


def count_colorings_formula(tw, r: int) -> int:
    """``r * gcd(det, r)``: the reduced equation leaves ``a`` free and ``det*(b-a) = 0``."""
    _check_modulus(r)
    _, d = determinant(tw)
    return r * gcd(d, r)


def count_colorings_snf(cm: IntMatrix, r: int) -> int:
    """Solutions of ``cm @ x = 0`` over ``Z/r`` from the invariant factors."""
    _check_modulus(r)
    rows = _rows(cm)
    nr, nc = _shape(rows)
    snf = smith_normal_form(rows)
    count = r ** (nc - len(snf.diagonal))
    for d in snf.diagonal:
        count *= gcd(d, r)
    return count


def count_colorings_bruteforce(
    d, r: int, cap: int = DEFAULT_BRUTE_FORCE_CAP, prune: bool = True
) -> int:
    """Count arc colorings mod *r* by exhaustive search.

    *d* is a :class:`~ratknot.diagram.PlatDiagram` (or anything with
    ``arc_count`` and ``crossings`` of ``(over, under_in, under_out)``).

    With ``prune=False`` every one of ``r**arc_count`` assignments is
    tested; this needs ``r**arc_count <= cap``.  With ``prune=True`` arcs
    are assigned in order and a partial assignment is abandoned as soon as
    a crossing whose three arcs are all set fails, which still examines
    every full assignment implicitly.  *cap* then bounds the number of
    candidate values tried.
    """
    _check_modulus(r)
    n = d.arc_count
    rels = [(c.over, c.under_in, c.under_out) for c in d.crossings]

    def ok(x, rel):
        o, u, w = rel
        return (2 * x[o] - x[u] - x[w]) % r == 0

    if not prune:
        if r**n > cap:
            raise BruteForceLimitExceeded(f"{r}^{n} assignments exceed cap {cap}")
        return sum(1 for x in product(range(r), repeat=n) if all(ok(x, rel) for rel in rels))

    due: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
    for rel in rels:
        due[max(rel)].append(rel)
    x = [0] * n
    work = 0
    count = 0
    # iterative DFS over arc index
    stack = [(0, 0)]
    while stack:
        k, v = stack.pop()
        if k == n:
            count += 1
            continue
        if v == r:
            continue
        stack.append((k, v + 1))
        work += 1
        if work > cap:
            raise BruteForceLimitExceeded(f"search exceeded cap {cap}")
        x[k] = v
        if all(ok(x, rel) for rel in due[k]):
            stack.append((k + 1, 0))
    return count

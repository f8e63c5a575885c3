"""Cross-method consistency sweeps.

Each check compares independent routes to the same number and reports the
first disagreement it finds as a :class:`Discrepancy`.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from math import gcd
from typing import Iterator

from ratknot.diagram import build_plat, checkerboard_graph, coloring_matrix
from ratknot.linalg import (
    count_colorings_bruteforce,
    count_colorings_formula,
    count_colorings_snf,
    first_minor,
    tree_count_matrix,
    tree_count_recursion,
)
from ratknot.polynomials import TwistVector, determinant, propagate


@dataclass(frozen=True)
class Discrepancy:
    twist: TwistVector
    check: str
    values: dict

    def __str__(self) -> str:
        vals = " ".join(f"{k}={v}" for k, v in self.values.items())
        return f"R({self.twist}): {self.check} disagree: {vals}"


@dataclass
class SweepReport:
    determinant_cases: int = 0
    coloring_cases: int = 0
    discrepancies: list[Discrepancy] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.discrepancies


def twist_vectors(max_len: int, max_abs: int, signed: bool = True) -> Iterator[TwistVector]:
    """All vectors with ``1 <= N <= max_len`` and ``1 <= |n_i| <= max_abs``, shortest first."""
    values = list(range(1, max_abs + 1))
    if signed:
        values = [-v for v in reversed(values)] + values
    for n in range(1, max_len + 1):
        for entries in product(values, repeat=n):
            yield TwistVector(entries)


def continuant(entries) -> int:
    prev, cur = 0, 1
    for n in entries:
        prev, cur = cur, n * cur + prev
    return cur


def check_determinant(tw: TwistVector) -> list[Discrepancy]:
    """Polynomial value vs color propagation vs continuant vs coloring-matrix minor.

    Positive vectors also go through the tree recursion and Matrix-Tree on
    the checkerboard graph.
    """
    signed, absolute = determinant(tw)
    state = propagate(tw)
    via_state = (state.left if len(tw) % 2 == 0 else state.right).evaluate(tw.entries)
    minor = abs(first_minor(coloring_matrix(build_plat(tw)), 0, 0))
    vals = {"poly": signed, "propagate": via_state, "continuant": continuant(tw)}
    out = []
    if len(set(vals.values())) != 1:
        out.append(Discrepancy(tw, "signed determinant", vals))
    vals = {"poly": absolute, "minor": minor}
    if tw.all_positive:
        vals["recursion"] = tree_count_recursion(tw)
        vals["matrix_tree"] = tree_count_matrix(checkerboard_graph(tw))
    if len(set(vals.values())) != 1:
        out.append(Discrepancy(tw, "absolute determinant", vals))
    return out


def check_colorings(tw: TwistVector, r: int, cap: int | None = None) -> list[Discrepancy]:
    d = build_plat(tw)
    kwargs = {} if cap is None else {"cap": cap}
    brute = count_colorings_bruteforce(d, r, **kwargs)
    vals = {
        "formula": count_colorings_formula(tw, r),
        "snf": count_colorings_snf(coloring_matrix(d), r),
        "brute": brute,
    }
    out = []
    if len(set(vals.values())) != 1:
        out.append(Discrepancy(tw, f"coloring counts mod {r}", vals))
    _, det = determinant(tw)
    if (brute > r) != (gcd(r, det) > 1):
        out.append(Discrepancy(tw, f"nontriviality mod {r}", {"brute": brute, "det": det}))
    return out


def _det_chunk(vectors):
    return [x for tw in vectors for x in check_determinant(tw)]


def _color_chunk(cases):
    return [x for tw, r in cases for x in check_colorings(tw, r)]


def _chunks(items, size):
    for i in range(0, len(items), size):
        yield items[i : i + size]


def run_sweep(
    max_n: int = 3,
    max_len: int = 5,
    color_max_len: int = 3,
    max_modulus: int = 7,
    signed: bool = True,
    jobs: int = 1,
    stop_early: bool = True,
) -> SweepReport:
    """Check every vector with ``N <= max_len`` and ``|n_i| <= max_n``.

    Coloring counts are compared on the vectors with ``N <= color_max_len``
    for every modulus ``2..max_modulus``.  Results are in sweep order
    regardless of *jobs*.
    """
    report = SweepReport()
    det_cases = list(twist_vectors(max_len, max_n, signed))
    color_cases = [
        (tw, r)
        for tw in twist_vectors(min(color_max_len, max_len), max_n, signed)
        for r in range(2, max_modulus + 1)
    ]
    report.determinant_cases = len(det_cases)
    report.coloring_cases = len(color_cases)

    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            for found in pool.map(_det_chunk, _chunks(det_cases, 256)):
                report.discrepancies.extend(found)
            for found in pool.map(_color_chunk, _chunks(color_cases, 64)):
                report.discrepancies.extend(found)
    else:
        for tw in det_cases:
            report.discrepancies.extend(check_determinant(tw))
            if stop_early and report.discrepancies:
                return report
        for tw, r in color_cases:
            report.discrepancies.extend(check_colorings(tw, r))
            if stop_early and report.discrepancies:
                return report
    return report

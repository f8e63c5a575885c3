"""Explicit 4-plat diagrams of rational knots, their coloring matrices and checkerboard graphs.

Strand positions are numbered 0..3 from the left.  The top is closed by caps
on (0, 1) and (2, 3).  Twist ``i`` puts ``|n_i|`` crossings on positions
(1, 2) when ``i`` is odd and on (0, 1) when ``i`` is even.  The bottom is
closed by caps (0, 1), (2, 3) for odd N (numerator closure) and by
(0, 3), (1, 2) for even N (denominator closure).

Which strand passes over is fixed per twist: for positive ``n_i`` the strand
entering from the left is over on odd twists and the one entering from the
right is over on even twists, so all-positive vectors give alternating
diagrams; a negative ``n_i`` flips the choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

from ratknot.polynomials import TwistVector, as_twist

Closure = Literal["numerator", "denominator"]

_BOTTOM_CAPS = {"numerator": ((0, 1), (2, 3)), "denominator": ((0, 3), (1, 2))}


@dataclass(frozen=True)
class Crossing:
    over: int
    under_in: int
    under_out: int
    twist: int

    def __str__(self) -> str:
        return f"X {self.over} {self.under_in} {self.under_out} twist={self.twist}"


@dataclass(frozen=True)
class PlatDiagram:
    arc_count: int
    crossings: tuple[Crossing, ...]
    closure: Closure

    def __post_init__(self):
        if self.closure not in _BOTTOM_CAPS:
            raise ValueError(f"unknown closure {self.closure!r}")
        for c in self.crossings:
            if not all(0 <= a < self.arc_count for a in (c.over, c.under_in, c.under_out)):
                raise ValueError(f"crossing {c} refers to a missing arc")

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def serialize(self) -> str:
        return "\n".join([*map(str, self.crossings), f"closure={self.closure}"]) + "\n"

    @classmethod
    def parse(cls, text: str, arc_count: int | None = None) -> "PlatDiagram":
        """Inverse of :meth:`serialize`.

        Arcs touching no crossing are invisible in the text form, so pass
        *arc_count* to restore them.
        """
        crossings = []
        closure = None
        for raw in text.splitlines():
            line = raw.strip()
            if not line:
                continue
            if line.startswith("closure="):
                closure = line.split("=", 1)[1]
                continue
            tag, over, u_in, u_out, tw = line.split()
            if tag != "X" or not tw.startswith("twist="):
                raise ValueError(f"bad crossing line {raw!r}")
            crossings.append(Crossing(int(over), int(u_in), int(u_out), int(tw[6:])))
        if closure is None:
            raise ValueError("missing closure line")
        arcs = {a for c in crossings for a in (c.over, c.under_in, c.under_out)}
        if arc_count is None:
            arc_count = max(arcs, default=0) + 1
        return cls(arc_count, tuple(crossings), closure)


def build_plat(tw: TwistVector | Iterable[int]) -> PlatDiagram:
    tw = as_twist(tw)
    pos = [0, 0, 1, 1]
    next_arc = 2
    raw: list[tuple[int, int, int, int]] = []
    for i, n in enumerate(tw, start=1):
        j = 1 if i % 2 else 0
        left_over = (i % 2 == 1) == (n > 0)
        for _ in range(abs(n)):
            left, right = pos[j], pos[j + 1]
            new = next_arc
            next_arc += 1
            if left_over:
                raw.append((left, right, new, i))
                pos[j], pos[j + 1] = new, left
            else:
                raw.append((right, left, new, i))
                pos[j], pos[j + 1] = right, new

    closure: Closure = "denominator" if len(tw) % 2 == 0 else "numerator"
    parent = list(range(next_arc))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p, q in _BOTTOM_CAPS[closure]:
        ra, rb = find(pos[p]), find(pos[q])
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    # compact ids in order of first appearance along the crossing list
    ids: dict[int, int] = {}
    for a in [0, 1] + [x for c in raw for x in c[:3]]:
        ids.setdefault(find(a), len(ids))
    crossings = tuple(
        Crossing(ids[find(o)], ids[find(u)], ids[find(w)], i) for o, u, w, i in raw
    )
    return PlatDiagram(len(ids), crossings, closure)


@dataclass(frozen=True)
class ColoringMatrix:
    """Crossing relations ``2*over - under_in - under_out = 0`` as integer rows.

    When a diagram has a component that never passes under (split links such
    as ``R(1, -1)``) there is one arc more than crossings; trivial ``0 = 0``
    rows are appended to keep the matrix square.
    """

    entries: tuple[tuple[int, ...], ...]

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def coloring_matrix(d: PlatDiagram) -> ColoringMatrix:
    rows = []
    for c in d.crossings:
        row = [0] * d.arc_count
        row[c.over] += 2
        row[c.under_in] -= 1
        row[c.under_out] -= 1
        rows.append(tuple(row))
    while len(rows) < d.arc_count:
        rows.append((0,) * d.arc_count)
    return ColoringMatrix(tuple(rows))


@dataclass(frozen=True)
class CheckerboardGraph:
    """Multigraph of the shaded regions; vertex 0 is the hub region."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    hub: int = 0

    @property
    def edge_count(self) -> int:
        return len(self.edges)


def checkerboard_graph(tw: TwistVector | Iterable[int]) -> CheckerboardGraph:
    """Hub-and-spine checkerboard graph of an alternating ``R(n_1, ..., n_N)``.

    Odd twists add ``n_i`` parallel edges between the current spine end and
    the hub; even twists extend the spine by a path of ``n_i`` edges.  For
    even N the spine end is finally merged into the hub.
    """
    tw = as_twist(tw)
    if not tw.all_positive:
        raise ValueError("checkerboard graph is built for positive twists only")
    hub, spine = 0, 1
    count = 2
    edges: list[tuple[int, int]] = []
    for i, n in enumerate(tw, start=1):
        if i % 2:
            edges.extend((hub, spine) for _ in range(n))
        else:
            for _ in range(n):
                edges.append((spine, count))
                spine = count
                count += 1
    if len(tw) % 2 == 0:
        # the spine end is the newest vertex, so merging leaves ids compact
        edges = [tuple(hub if v == spine else v for v in e) for e in edges]
        count -= 1
    return CheckerboardGraph(count, tuple((min(e), max(e)) for e in edges), hub)

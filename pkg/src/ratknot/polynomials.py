"""Determinant polynomials of rational knots and the color propagation they encode.

The three polynomials ``p_N``, ``p_N^e`` and ``p_N^o`` are multilinear with
all coefficients equal to 1; ``p_N`` has one monomial per IEO sequence,
``p_N^e`` keeps the monomials of even degree (including the constant 1)
and ``p_N^o`` the ones of odd degree.

Feeding colors ``a`` (left cap) and ``b`` (right cap) into the top of the
4-plat of ``R(n_1, ..., n_N)``, the three visible bottom strands after
``i`` twists carry ``a + (b - a) * P`` for ``P`` in
``(p_i^e, p_i, p_i^o)``.  The plat closure then leaves a single equation
``D * (b - a) = 0`` with ``D = p_N^e`` for even N and ``p_N^o`` for odd N.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Literal, Mapping, Sequence

from ratknot.ieo import enumerate_ieo, is_ieo

Monomial = tuple[int, ...]
Part = Literal["full", "even", "odd"]


class InvalidTwistError(ValueError):
    """Raised for an empty twist vector or a zero twist."""


@dataclass(frozen=True)
class TwistVector:
    """The nonzero twist counts ``(n_1, ..., n_N)`` of ``R(n_1, ..., n_N)``."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        if not entries:
            raise InvalidTwistError("a twist vector needs at least one twist")
        for i, n in enumerate(entries, start=1):
            if isinstance(n, bool) or not isinstance(n, int):
                raise InvalidTwistError(f"twist n{i}={n!r} is not an integer")
            if n == 0:
                raise InvalidTwistError(f"twist n{i} is zero")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def parse(cls, text: str) -> "TwistVector":
        """Parse ``"4,-3"`` style input; whitespace is ignored."""
        parts = [p.strip() for p in text.split(",")]
        try:
            return cls(tuple(int(p) for p in parts))
        except ValueError as exc:
            if isinstance(exc, InvalidTwistError):
                raise
            raise InvalidTwistError(f"cannot parse twist vector {text!r}") from None

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self) -> str:
        return ",".join(map(str, self.entries))

    def values(self) -> dict[int, int]:
        """1-based variable assignment ``{i: n_i}``."""
        return {i: n for i, n in enumerate(self.entries, start=1)}

    @property
    def all_positive(self) -> bool:
        return all(n > 0 for n in self.entries)


def as_twist(tw: TwistVector | Iterable[int]) -> TwistVector:
    return tw if isinstance(tw, TwistVector) else TwistVector(tuple(tw))


def _monomial_key(m: Monomial):
    return (len(m), m)


@dataclass(frozen=True)
class MultilinearPoly:
    """Sum of distinct coefficient-1 monomials in ``n_1, ..., n_arity``."""

    monomials: frozenset[Monomial]
    arity: int

    def __post_init__(self):
        mons = frozenset(tuple(m) for m in self.monomials)
        for m in mons:
            if not is_ieo(m, self.arity):
                raise ValueError(f"monomial {m} is not an IEO index sequence for N={self.arity}")
        object.__setattr__(self, "monomials", mons)

    @classmethod
    def from_monomials(cls, monomials: Iterable[Sequence[int]], arity: int) -> "MultilinearPoly":
        mons = [tuple(m) for m in monomials]
        if len(set(mons)) != len(mons):
            raise ValueError("duplicate monomials")
        return cls(frozenset(mons), arity)

    def sorted_monomials(self) -> list[Monomial]:
        return sorted(self.monomials, key=_monomial_key)

    def __len__(self) -> int:
        return len(self.monomials)

    def __str__(self) -> str:
        if not self.monomials:
            return "0"
        return " + ".join(
            "*".join(f"n{i}" for i in m) if m else "1" for m in self.sorted_monomials()
        )

    def __add__(self, other: "MultilinearPoly") -> "MultilinearPoly":
        # only disjoint sums occur; a shared monomial would need coefficient 2
        if self.monomials & other.monomials:
            raise ValueError("sum would produce a coefficient other than 1")
        return MultilinearPoly(self.monomials | other.monomials, max(self.arity, other.arity))

    def times_variable(self, index: int) -> "MultilinearPoly":
        """Multiply by a variable ``n_index`` with index above every one in use."""
        if any(m and m[-1] >= index for m in self.monomials):
            raise ValueError(f"n{index} is not a fresh variable")
        return MultilinearPoly(
            frozenset(m + (index,) for m in self.monomials), max(self.arity, index)
        )

    def with_arity(self, arity: int) -> "MultilinearPoly":
        return MultilinearPoly(self.monomials, arity)

    def evaluate(self, values: Mapping[int, int] | Sequence[int]) -> int:
        return evaluate(self, values)


ONE = MultilinearPoly(frozenset({()}), 0)
ZERO = MultilinearPoly(frozenset(), 0)


def build_p(n: int, part: Part = "full") -> MultilinearPoly:
    """``p_n`` (``full``), ``p_n^e`` (``even``) or ``p_n^o`` (``odd``) from IEO enumeration."""
    if part not in ("full", "even", "odd"):
        raise ValueError(f"unknown part {part!r}")
    mons = enumerate_ieo(n)
    if part == "even":
        mons = [m for m in mons if len(m) % 2 == 0]
    elif part == "odd":
        mons = [m for m in mons if len(m) % 2 == 1]
    return MultilinearPoly(frozenset(mons), n)


def evaluate(poly: MultilinearPoly, values: Mapping[int, int] | Sequence[int]) -> int:
    """Exact value of *poly* with ``n_i = values[i]``.

    A sequence is read as ``(n_1, n_2, ...)``; a mapping is keyed by the
    1-based variable index.
    """
    if not isinstance(values, Mapping):
        values = {i: v for i, v in enumerate(values, start=1)}
    total = 0
    for m in poly.monomials:
        term = 1
        for i in m:
            try:
                term *= values[i]
            except KeyError:
                raise KeyError(f"no value assigned to n{i}") from None
        total += term
    return total


@dataclass(frozen=True)
class ColorState:
    """Color polynomials of the three visible strands after ``step`` twists.

    ``left``, ``middle`` and ``right`` are ``P_l``, ``P_m``, ``P_r``; the
    actual colors are ``a + (b - a) * P`` (see :meth:`colors`).
    """

    left: MultilinearPoly = ONE
    middle: MultilinearPoly = ONE
    right: MultilinearPoly = ZERO
    twists: tuple[int, ...] = field(default=())

    @property
    def step(self) -> int:
        return len(self.twists)

    def polys(self) -> tuple[MultilinearPoly, MultilinearPoly, MultilinearPoly]:
        return self.left, self.middle, self.right

    def colors(self, a: int, b: int) -> tuple[int, int, int]:
        return tuple(a + (b - a) * evaluate(p, self.twists) for p in self.polys())


def advance(state: ColorState, n: int) -> ColorState:
    """Absorb the next twist, which has *n* crossings.

    The new twist becomes variable ``n_{i+1}``.  An even-index twist acts
    on the left pair of strands and feeds ``P_r`` into ``P_l`` and
    ``P_m``; an odd-index twist acts on the middle pair and feeds ``P_l``
    into ``P_m`` and ``P_r``.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n == 0:
        raise InvalidTwistError(f"twist must be a nonzero integer, got {n!r}")
    k = state.step + 1
    left, middle, right = state.polys()
    if k % 2 == 0:
        delta = right.times_variable(k)
        left, middle = left + delta, middle + delta
    else:
        delta = left.times_variable(k)
        middle, right = middle + delta, right + delta
    return ColorState(left.with_arity(k), middle.with_arity(k), right.with_arity(k), state.twists + (n,))


def propagate(tw: TwistVector | Iterable[int]) -> ColorState:
    state = ColorState()
    for n in as_twist(tw):
        state = advance(state, n)
    return state


def propagate_numeric(tw: TwistVector | Iterable[int], a: int, b: int) -> tuple[int, int, int]:
    """Bottom colors ``(l, m, r)`` for top colors *a*, *b*."""
    return propagate(tw).colors(a, b)


def determinant_poly(n: int) -> MultilinearPoly:
    """``p_n^e`` for even *n*, ``p_n^o`` for odd *n*."""
    return build_p(n, "even" if n % 2 == 0 else "odd")


def determinant(tw: TwistVector | Iterable[int]) -> tuple[int, int]:
    """``(signed, absolute)`` determinant of ``R(n_1, ..., n_N)``."""
    tw = as_twist(tw)
    signed = evaluate(determinant_poly(len(tw)), tw.entries)
    return signed, abs(signed)


@dataclass(frozen=True)
class ReducedEquation:
    """The single surviving coloring equation ``coefficient * (b - a) = 0``; ``a`` is free."""

    coefficient: int
    poly: MultilinearPoly
    unknowns: tuple[str, str] = ("a", "b")

    def __str__(self) -> str:
        a, b = self.unknowns
        return f"{self.coefficient}*({b}-{a})=0"

    def symbolic(self) -> str:
        a, b = self.unknowns
        return f"({self.poly})*({b}-{a})=0"

    def solutions_mod(self, r: int) -> int:
        """Number of pairs ``(a, b)`` mod *r* satisfying the equation."""
        return r * gcd(self.coefficient, r)


def reduced_cse(tw: TwistVector | Iterable[int]) -> ReducedEquation:
    tw = as_twist(tw)
    signed, _ = determinant(tw)
    return ReducedEquation(signed, determinant_poly(len(tw)))

"""Finite grids ``S_1 x ... x S_m``, root counting and footprint values."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import prod
from typing import Iterator, Sequence

import numpy as np

from .errors import (
    ContextMismatch,
    EmptyFactor,
    ExponentTooLarge,
    FootprintError,
    GridTooLarge,
    NotASubset,
    ParseError,
    ZeroPolynomial,
)
from .field import FieldElement, FieldSpec
from .ordering import Monomial
from .polynomial import Polynomial

GRID_CAP = 2**24


def footprint_value(exponents: Sequence[int], sizes: Sequence[int]) -> int:
    """``prod(s) - prod(s - i)`` for exponents below the sizes."""
    if len(exponents) != len(sizes):
        raise ContextMismatch(f"monomial has {len(exponents)} exponents, grid {len(sizes)} factors")
    for i, s in zip(exponents, sizes):
        if i >= s:
            raise ExponentTooLarge(f"exponent {i} is not below the factor size {s}")
    return prod(sizes) - prod(s - i for i, s in zip(exponents, sizes))


@dataclass(frozen=True)
class Grid:
    """A product of finite subsets of one field, one subset per variable.

    Subsets keep their given order; points are enumerated like an odometer
    (the last coordinate turns fastest).
    """

    field: FieldSpec
    subsets: tuple[tuple[FieldElement, ...], ...]

    def __post_init__(self):
        subsets = tuple(tuple(self.field.element(a) for a in s) for s in self.subsets)
        object.__setattr__(self, "subsets", subsets)
        if not subsets:
            raise FootprintError("a grid needs at least one factor")
        for i, s in enumerate(subsets, start=1):
            if not s:
                raise EmptyFactor(f"factor S{i} is empty")
            if len(set(s)) != len(s):
                raise FootprintError(f"factor S{i} has repeated elements")
        if prod(len(s) for s in subsets) > GRID_CAP:
            raise GridTooLarge(f"grid has more than {GRID_CAP} points")

    @classmethod
    def full(cls, field: FieldSpec, nvars: int) -> Grid:
        return cls(field, tuple(tuple(field.elements()) for _ in range(nvars)))

    @classmethod
    def from_values(cls, field: FieldSpec, subsets: Sequence[Sequence]) -> Grid:
        return cls(field, tuple(tuple(field.element(a) for a in s) for s in subsets))

    @classmethod
    def parse(cls, text: str, field: FieldSpec, nvars: int | None = None) -> Grid:
        """Parse a comma-separated list of per-variable factors.

        Each factor is ``full``, ``trace_nonzero:d`` (elements whose trace to
        ``F_{p^d}`` is nonzero) or an explicit ``{a,b,...}`` element list.  A
        single factor is repeated for every variable when ``nvars`` is given.
        """
        items = split_grid_spec(text)
        if nvars is not None and len(items) == 1 and nvars > 1:
            items = items * nvars
        if nvars is not None and len(items) != nvars:
            raise ParseError(f"grid spec {text!r} has {len(items)} factors, expected {nvars}")
        return cls(field, tuple(_parse_factor(item, field) for item in items))

    def describe(self) -> str:
        everything = tuple(self.field.elements())
        parts = []
        for s in self.subsets:
            if s == everything:
                parts.append("full")
            else:
                parts.append("{" + ",".join(str(a) for a in s) + "}")
        return ",".join(parts)

    @property
    def nvars(self) -> int:
        return len(self.subsets)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.subsets)

    @property
    def npoints(self) -> int:
        return prod(self.sizes)

    @cached_property
    def _raw_subsets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(a.value for a in s) for s in self.subsets)

    def is_full(self) -> bool:
        q = self.field.order
        return all(len(s) == q for s in self.subsets)

    def is_square(self) -> bool:
        return len(set(self.sizes)) == 1

    def points(self) -> Iterator[tuple[FieldElement, ...]]:
        return product(*self.subsets)

    def _check(self, f: Polynomial):
        if f.nvars != self.nvars:
            raise ContextMismatch(f"polynomial has {f.nvars} variables, grid {self.nvars}")
        if f.field != self.field:
            raise ContextMismatch(f"polynomial over {f.field}, grid over {self.field}")

    # --- vanishing polynomials ---------------------------------------------

    def vanishing_polynomials(self) -> list[Polynomial]:
        """``prod_{a in S_l} (X_l - a)`` for each variable."""
        out = []
        for index, s in enumerate(self.subsets, start=1):
            x = Polynomial.variable(self.field, self.nvars, index)
            v = Polynomial.constant(self.field, self.nvars, 1)
            for a in s:
                v = v * (x - a)
            out.append(v)
        return out

    # --- root counting ----------------------------------------------------

    def _walk(self, f: Polynomial) -> Iterator[tuple[tuple[int, ...], int]]:
        """Yield ``(point_indices, value)`` in odometer order.

        Each prefix of coordinates is substituted once, collapsing the term map
        before descending to the next variable.
        """
        field = self.field
        add, mul, pw = field.add_int, field.mul_int, field.pow_int
        raw = self._raw_subsets
        m = self.nvars

        def rec(level: int, terms: dict, prefix: tuple[int, ...]):
            if level == m:
                yield prefix, terms.get((), 0)
                return
            values = raw[level]
            degs = {e[0] for e in terms}
            for idx, a in enumerate(values):
                powers = {d: pw(a, d) for d in degs}
                sub: dict = {}
                for e, c in terms.items():
                    v = mul(c, powers[e[0]])
                    if v:
                        key = e[1:]
                        sub[key] = add(sub.get(key, 0), v)
                yield from rec(level + 1, {k: v for k, v in sub.items() if v}, prefix + (idx,))

        yield from rec(0, f.raw_terms, ())

    def count_roots(self, f: Polynomial) -> int:
        self._check(f)
        if f.is_zero():
            raise ZeroPolynomial("root counting needs a nonzero polynomial")
        return sum(1 for _, v in self._walk(f) if v == 0)

    def root_set(self, f: Polynomial) -> list[tuple[FieldElement, ...]]:
        """Roots in enumeration order."""
        self._check(f)
        if f.is_zero():
            raise ZeroPolynomial("root sets need a nonzero polynomial")
        return [
            tuple(self.subsets[i][j] for i, j in enumerate(idx)) for idx, v in self._walk(f) if v == 0
        ]

    def evaluator(self, monomials: Sequence[Monomial]) -> GridEvaluator:
        return GridEvaluator(self, monomials)

    # --- footprint values -------------------------------------------------

    def footprint_value(self, m: Monomial) -> int:
        """Footprint bound of a leading monomial: ``prod(s) - prod(s - i)``."""
        return footprint_value(m, self.sizes)

    def truncated_footprint_value(self, m: Monomial) -> int:
        """Footprint value over the first ``m - 1`` factors, ignoring the last exponent."""
        footprint_value(m, self.sizes)  # validates every exponent, the last included
        return footprint_value(m[:-1], self.sizes[:-1])

    D = footprint_value
    D_prime = truncated_footprint_value

    # --- sub-grids --------------------------------------------------------

    def subtract_subsets(self, removed: Sequence[Sequence]) -> Grid:
        """The grid ``T_l = S_l minus removed_l``."""
        if len(removed) != self.nvars:
            raise ContextMismatch(f"need {self.nvars} subsets, got {len(removed)}")
        out = []
        for i, (s, r) in enumerate(zip(self.subsets, removed), start=1):
            r = {self.field.element(a) for a in r}
            if not r <= set(s):
                raise NotASubset(f"removed elements {sorted(map(str, r - set(s)))} are not in S{i}")
            t = tuple(a for a in s if a not in r)
            if not t:
                raise EmptyFactor(f"removing {len(r)} elements empties S{i}")
            out.append(t)
        return Grid(self.field, tuple(out))


class GridEvaluator:
    """Vectorised evaluation of many polynomials sharing a support on one grid.

    ``values(coeffs)`` takes a ``(batch, len(monomials))`` array of encoded
    coefficients and returns a ``(batch, npoints)`` array of encoded values in
    odometer order.  Needs the dense numpy tables of a small field.
    """

    def __init__(self, grid: Grid, monomials: Sequence[Monomial]):
        tables = grid.field.numpy_tables
        if tables is None:
            raise FootprintError(f"vectorised evaluation is unavailable for {grid.field}")
        self.add, self.mul = tables
        self.grid = grid
        self.monomials = list(monomials)
        field = grid.field
        pts = list(product(*grid._raw_subsets))
        rows = []
        for m in self.monomials:
            row = []
            for pt in pts:
                v = 1
                for a, e in zip(pt, m):
                    v = field.mul_int(v, field.pow_int(a, e))
                row.append(v)
            rows.append(row)
        self.table = np.array(rows, dtype=np.int32).reshape(len(self.monomials), len(pts))

    def values(self, coeffs: np.ndarray) -> np.ndarray:
        coeffs = np.asarray(coeffs, dtype=np.int32)
        acc = np.zeros((coeffs.shape[0], self.table.shape[1]), dtype=np.int32)
        for j in range(len(self.monomials)):
            acc = self.add[acc, self.mul[coeffs[:, j, None], self.table[None, j, :]]]
        return acc

    def root_counts(self, coeffs: np.ndarray) -> np.ndarray:
        return (self.values(coeffs) == 0).sum(axis=1)


def split_grid_spec(text: str) -> list[str]:
    items, depth, cur = [], 0, []
    for ch in text:
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
        if ch == "," and depth == 0:
            items.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    items.append("".join(cur).strip())
    if depth != 0 or any(not it for it in items):
        raise ParseError(f"malformed grid spec {text!r}")
    return items


def _parse_factor(item: str, field: FieldSpec) -> tuple[FieldElement, ...]:
    if item == "full":
        return tuple(field.elements())
    if item.startswith("trace_nonzero"):
        _, _, d = item.partition(":")
        try:
            d = int(d) if d else field.extension_degree // 2
        except ValueError:
            raise ParseError(f"bad subfield degree in {item!r}") from None
        if d < 1:
            raise ParseError(f"{item!r} needs a subfield degree (trace_nonzero:d)")
        return tuple(a for a in field.elements() if not a.trace(d).is_zero())
    if item.startswith("{") and item.endswith("}"):
        body = item[1:-1]
        return tuple(field.element(a.strip()) for a in body.split(",") if a.strip())
    raise ParseError(f"unknown grid factor {item!r}; use full, trace_nonzero:d or {{a,b,...}}")


def vanishing_polynomials(grid: Grid) -> list[Polynomial]:
    return grid.vanishing_polynomials()


def count_roots(f: Polynomial, grid: Grid) -> int:
    return grid.count_roots(f)


def root_set(f: Polynomial, grid: Grid) -> list[tuple[FieldElement, ...]]:
    return grid.root_set(f)


def D(m: Monomial, grid: Grid) -> int:
    return grid.footprint_value(m)


def D_prime(m: Monomial, grid: Grid) -> int:
    return grid.truncated_footprint_value(m)


def subtract_subsets(grid: Grid, removed: Sequence[Sequence]) -> Grid:
    return grid.subtract_subsets(removed)


def trace_zero_elements(field: FieldSpec, sub_degree: int) -> list[FieldElement]:
    return [a for a in field.elements() if a.trace(sub_degree).is_zero()]


__all__ = [
    "Grid",
    "GridEvaluator",
    "footprint_value",
    "vanishing_polynomials",
    "count_roots",
    "root_set",
    "D",
    "D_prime",
    "subtract_subsets",
    "trace_zero_elements",
]

"""Polynomial families with many roots, and a search for bound attainers."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from math import prod
from typing import Sequence

import numpy as np

from .analysis import FootprintReport, classify
from .errors import (
    DegenerateCase,
    ExponentTooLarge,
    NotASubset,
    SearchInfeasible,
    ZeroConstant,
)
from .field import FieldSpec, prime_power
from .grid import Grid, trace_zero_elements
from .ordering import Monomial, MonomialOrder
from .polynomial import Polynomial

EXHAUSTIVE_LIMIT = 2**22
_BATCH = 2**15


def trivial_polynomial(grid: Grid, subsets: Sequence[Sequence], k=1) -> Polynomial:
    """``k * prod_l prod_{a in S'_l} (X_l - a)``."""
    field = grid.field
    k = field.element(k)
    if k.is_zero():
        raise ZeroConstant("the constant of a trivial polynomial must be nonzero")
    if len(subsets) != grid.nvars:
        raise NotASubset(f"need {grid.nvars} subsets, got {len(subsets)}")
    f = Polynomial.constant(field, grid.nvars, k)
    for index, (s, chosen) in enumerate(zip(grid.subsets, subsets), start=1):
        chosen = [field.element(a) for a in chosen]
        if not set(chosen) <= set(s) or len(set(chosen)) != len(chosen):
            raise NotASubset(f"chosen elements for X{index} are not distinct members of S{index}")
        x = Polynomial.variable(field, grid.nvars, index)
        for a in chosen:
            f = f * (x - a)
    return f


def trivial_root_count(grid: Grid, subsets: Sequence[Sequence]) -> int:
    """Closed-form root count ``prod(s) - prod(s - |S'|)``."""
    return grid.npoints - prod(s - len(c) for s, c in zip(grid.sizes, subsets))


@dataclass(frozen=True)
class Construction:
    name: str
    polynomial: Polynomial
    grid: Grid
    order: MonomialOrder
    expected_roots: int
    parts: dict

    def to_dict(self) -> dict:
        return {
            "family": self.name,
            "polynomial": str(self.polynomial),
            "field": str(self.grid.field),
            "grid": self.grid.describe(),
            "order": str(self.order),
            "expected_roots": self.expected_roots,
            **{k: str(v) for k, v in self.parts.items()},
        }


def _quadratic_extension(q: int) -> tuple[FieldSpec, int]:
    p, d = prime_power(q)
    return FieldSpec(p, 2 * d), d


def hermitian_polynomial(q: int) -> Construction:
    """``X1^{q+1} - X2^q - X2`` over ``F_{q^2}``, with ``q^3`` roots on the full grid.

    It attains the footprint value of ``X2^q`` under lex with ``X2 > X1``.
    """
    field, _ = _quadratic_extension(q)
    x1 = Polynomial.variable(field, 2, 1)
    x2 = Polynomial.variable(field, 2, 2)
    f = x1 ** (q + 1) - x2**q - x2
    return Construction(
        name="hermitian",
        polynomial=f,
        grid=Grid.full(field, 2),
        order=MonomialOrder.lex(2, 1),
        expected_roots=q**3,
        parts={},
    )


def trace_difference_polynomial(q: int) -> Construction:
    """``F = G * H`` over ``F_{q^2}`` with ``3q^3 - 2q^2`` roots on the full grid.

    ``G`` vanishes on every point with a trace-zero coordinate and
    ``H = Tr(X1) - Tr(X2)``; ``H`` alone has ``q^3 - q^2`` roots on the grid of
    nonzero-trace elements.  ``q = 2`` is rejected: ``F`` then has degree
    ``4 = q^2`` in ``X1`` and is not reduced.
    """
    if q == 2:
        raise DegenerateCase("q = 2 gives deg_X1 F = 2q = 4 = q^2, outside the reduced range the bound needs")
    field, d = _quadratic_extension(q)
    x1 = Polynomial.variable(field, 2, 1)
    x2 = Polynomial.variable(field, 2, 2)
    zeros = trace_zero_elements(field, d)
    g = Polynomial.constant(field, 2, 1)
    for a in zeros:
        g = g * (x1 - a) * (x2 - a)
    h = x1**q - x2**q + x1 - x2
    full = Grid.full(field, 2)
    return Construction(
        name="trace-diff",
        polynomial=g * h,
        grid=full,
        order=MonomialOrder.lex(1, 2),
        expected_roots=3 * q**3 - 2 * q**2,
        parts={
            "G": g,
            "H": h,
            "T_grid": full.subtract_subsets([zeros, zeros]).describe(),
            "H_expected_roots": q**3 - q**2,
        },
    )


# --- search ------------------------------------------------------------------


@dataclass(frozen=True)
class SearchResult:
    hits: list[tuple[Polynomial, FootprintReport]]
    mode: str
    candidates: int
    examined: int
    seed: int

    def __iter__(self):
        return iter(self.hits)

    def __len__(self):
        return len(self.hits)

    def summary(self) -> dict:
        return {
            "count": len(self.hits),
            "mode": self.mode,
            "candidate_space": self.candidates,
            "examined": self.examined,
            "seed": self.seed,
        }


def search_space(grid: Grid, target: Monomial, order: MonomialOrder) -> list[Monomial]:
    """Reduced monomials strictly below ``target`` in ``order``."""
    if any(e >= s for e, s in zip(target, grid.sizes)):
        raise ExponentTooLarge(f"target {target} is not below the grid sizes {grid.sizes}")
    key = order.key(target)
    lower = [m for m in product(*(range(s) for s in grid.sizes)) if order.key(m) < key]
    return sorted(lower, key=order.key)


def search_attaining(
    grid: Grid,
    target: Monomial,
    order: MonomialOrder,
    budget: int = 1000,
    seed: int = 0,
    exhaustive: bool | None = None,
) -> SearchResult:
    """Reduced polynomials with leading term ``1 * target`` attaining its footprint value.

    Lower coefficients range over the whole field.  The space is enumerated
    completely when ``exhaustive`` is true, or when it is ``None`` and the
    space has at most ``EXHAUSTIVE_LIMIT`` members; otherwise ``budget``
    seeded uniform samples are drawn.  Hits are classified and sorted by
    their printed form.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    target = tuple(target)
    lower = search_space(grid, target, order)
    q = grid.field.order
    size = q ** len(lower)
    if exhaustive is None:
        exhaustive = size <= EXHAUSTIVE_LIMIT
    if exhaustive and size > EXHAUSTIVE_LIMIT:
        raise SearchInfeasible(f"candidate space has {size} members, above the exhaustive limit {EXHAUSTIVE_LIMIT}")
    goal = grid.footprint_value(target)

    if exhaustive:
        batches = _exhaustive_batches(len(lower), q)
        examined = size
    else:
        rng = random.Random(seed)
        rows = {tuple(rng.randrange(q) for _ in lower) for _ in range(budget)}
        ordered = sorted(rows)
        batches = iter([np.array(ordered, dtype=np.int32).reshape(len(ordered), len(lower))])
        examined = len(ordered)

    hits_coeffs = list(_attaining_rows(grid, lower, target, goal, batches))
    hits = []
    for row in hits_coeffs:
        terms = {m: int(c) for m, c in zip(lower, row) if c}
        terms[target] = 1
        f = Polynomial._raw(grid.field, grid.nvars, terms)
        rep = classify(f, grid, order)
        if rep.root_count != goal:
            raise AssertionError(f"vectorised and scalar root counts disagree on {f}")
        hits.append((f, rep))
    hits.sort(key=lambda t: str(t[0]))
    return SearchResult(hits=hits, mode="exhaustive" if exhaustive else "sample",
                        candidates=size, examined=examined, seed=seed)


def _exhaustive_batches(n: int, q: int):
    total = q**n
    for start in range(0, total, _BATCH):
        idx = np.arange(start, min(start + _BATCH, total), dtype=np.int64)
        cols = []
        for _ in range(n):
            cols.append(idx % q)
            idx = idx // q
        yield np.stack(cols[::-1], axis=1).astype(np.int32) if n else np.zeros((len(idx), 0), np.int32)


def _attaining_rows(grid: Grid, lower, target, goal, batches):
    field = grid.field
    if field.numpy_tables is not None:
        ev = grid.evaluator(list(lower) + [target])
        for batch in batches:
            full = np.concatenate([batch, np.ones((batch.shape[0], 1), dtype=np.int32)], axis=1)
            counts = ev.root_counts(full)
            for row in batch[counts == goal]:
                yield tuple(int(c) for c in row)
    else:
        for batch in batches:
            for row in batch:
                terms = {m: int(c) for m, c in zip(lower, row) if c}
                terms[target] = 1
                if grid.count_roots(Polynomial._raw(field, grid.nvars, terms)) == goal:
                    yield tuple(int(c) for c in row)

from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from footprint.errors import (
    ContextMismatch,
    EmptyFactor,
    ExponentTooLarge,
    GridTooLarge,
    NotASubset,
    ParseError,
    ZeroPolynomial,
)
from footprint.field import FieldSpec
from footprint.grid import Grid, footprint_value, trace_zero_elements
from footprint.ordering import builtin_orders, divides
from footprint.polynomial import Polynomial, reduce_mod_grid

from oracle import RefField, footprint_count
from strategies import FIELDS, polynomials

F2, F3, F4, F9 = FieldSpec(2), FieldSpec(3), FieldSpec(2, 2), FieldSpec(3, 2)


def P(text, field, nvars=2):
    return Polynomial.parse(text, field, nvars)


def test_vanishing_polynomials():
    (v,) = Grid.full(F2, 1).vanishing_polynomials()
    assert v == P("X1^2+X1", F2, 1)
    for field in (F3, F4, F9):
        (v,) = Grid.full(field, 1).vanishing_polynomials()
        assert v == P(f"X1^{field.order}-X1", field, 1)
    (v,) = Grid.from_values(F3, [[0]]).vanishing_polynomials()
    assert v == P("X1", F3, 1)
    grid = Grid.from_values(F4, [["0", "1", "w"], ["w+1", "1"]])
    for v, s in zip(grid.vanishing_polynomials(), grid.subsets):
        assert v.is_reduced([len(s) + 1, len(s) + 1])
        assert all(v.evaluate(pt).is_zero() for pt in grid.points())


def test_root_count_examples():
    grid = Grid.full(F3, 2)
    for a in F3.elements():
        assert grid.count_roots(P("X1", F3) - a) == 3
    assert Grid.full(F4, 2).count_roots(P("X1^3-X2^2-X2", F4)) == 8
    assert grid.count_roots(Polynomial.constant(F3, 2, 1)) == 0
    with pytest.raises(ZeroPolynomial):
        grid.count_roots(Polynomial.zero(F3, 2))
    with pytest.raises(ContextMismatch):
        grid.count_roots(P("X1", F3, 3))


def test_root_set_examples():
    grid = Grid.from_values(F3, [[0, 1], [0, 1]])
    assert grid.root_set(P("X1", F3)) == [(F3(0), F3(0)), (F3(0), F3(1))]


def test_footprint_value_examples():
    assert footprint_value((0, 0), (4, 4)) == 0
    assert Grid.full(F4, 2).D((0, 2)) == 8
    assert Grid.full(F9, 2).footprint_value((6, 3)) == 63
    g33 = Grid.full(F3, 2)
    assert g33.D_prime((1, 1)) == 1
    assert g33.truncated_footprint_value((0, 0)) == 0
    assert g33.D((1, 1)) == 5 > 3 * g33.D_prime((1, 1))
    for i1, i2 in product(range(3), repeat=2):
        assert g33.D_prime((i1, i2)) == i1
    with pytest.raises(ExponentTooLarge):
        g33.D((3, 0))
    with pytest.raises(ExponentTooLarge):
        g33.D_prime((0, 3))


@pytest.mark.parametrize("sizes", [(2, 3), (4, 4), (3, 1, 5), (5,)])
def test_footprint_value_counts_standard_monomials(sizes):
    for mono in product(*(range(s) for s in sizes)):
        assert footprint_value(mono, sizes) == footprint_count(mono, sizes)


def test_subtract_subsets_examples():
    full = Grid.full(F9, 2)
    assert full.subtract_subsets([[], []]) == full
    zeros = trace_zero_elements(F9, 1)
    assert len(zeros) == 3
    t = full.subtract_subsets([zeros, zeros])
    assert t.sizes == (6, 6)
    assert all(not a.trace(1).is_zero() for s in t.subsets for a in s)
    one = full.subtract_subsets([F9.elements()[1:], F9.elements()[:-1]])
    assert one.sizes == (1, 1)
    with pytest.raises(EmptyFactor):
        full.subtract_subsets([F9.elements(), []])
    with pytest.raises(NotASubset):
        Grid.from_values(F3, [[0, 1], [0]]).subtract_subsets([[2], []])


def test_grid_parsing():
    assert Grid.parse("full", F3, 2) == Grid.full(F3, 2)
    g = Grid.parse("{0,1},full", F3, 2)
    assert g.sizes == (2, 3)
    assert Grid.parse(g.describe(), F3, 2) == g
    t = Grid.parse("trace_nonzero:1", F9, 2)
    assert t.sizes == (6, 6)
    assert Grid.parse("trace_nonzero", F9, 2) == t
    assert Grid.parse("{w,w+1}", F4, 1).sizes == (2,)
    for bad in ["{0,1", "full,,full", "half", "full,full,full"]:
        with pytest.raises(ParseError):
            Grid.parse(bad, F3, 2)


def test_grid_validation():
    with pytest.raises(EmptyFactor):
        Grid.from_values(F3, [[0], []])
    with pytest.raises(GridTooLarge):
        Grid.full(FieldSpec(2, 9), 3)


def test_hermitian_root_set_matches_trace_norm_fibers():
    # x2^q + x2 = x1^{q+1} means Tr(x2) = N(x1)
    field = F4
    roots = set(Grid.full(field, 2).root_set(P("X1^3+X2^2+X2", field)))
    fibers = {(a, b) for a, b in product(field.elements(), repeat=2) if b.trace(1) == a.norm(1)}
    assert roots == fibers


def test_evaluator_matches_scalar_count():
    grid = Grid.full(F4, 2)
    monos = [(0, 0), (1, 0), (2, 1), (3, 0), (0, 2)]
    ev = grid.evaluator(monos)
    rng = np.random.default_rng(0)
    coeffs = rng.integers(0, 4, size=(64, len(monos)))
    counts = ev.root_counts(coeffs)
    for row, c in zip(coeffs, counts):
        terms = {m: int(v) for m, v in zip(monos, row) if v}
        if terms:
            assert grid.count_roots(Polynomial._raw(F4, 2, terms)) == c


@settings(max_examples=120, deadline=None)
@given(st.data())
def test_root_set_matches_reference(data):
    field = data.draw(st.sampled_from(FIELDS[:3]))
    f = data.draw(polynomials(field, max_terms=4))
    subsets = [data.draw(st.lists(st.integers(0, field.order - 1), min_size=1, unique=True)) for _ in range(2)]
    grid = Grid.from_values(field, [[field.to_digits(v) for v in s] for s in subsets])
    ref = RefField(field.characteristic, field.modulus)
    expected = ref.roots(f.raw_terms, subsets)
    assert [tuple(a.value for a in pt) for pt in grid.root_set(f)] == expected
    assert grid.count_roots(f) == len(expected)


@settings(max_examples=120, deadline=None)
@given(st.data())
def test_reduction_preserves_root_set(data):
    field = data.draw(st.sampled_from(FIELDS))
    f = data.draw(polynomials(field, max_terms=5))
    subsets = [data.draw(st.lists(st.integers(0, field.order - 1), min_size=1, unique=True)) for _ in range(2)]
    grid = Grid.from_values(field, [[field.to_digits(v) for v in s] for s in subsets])
    r = reduce_mod_grid(f, grid)
    assert r.is_reduced(grid.sizes)
    if r.is_zero():
        assert grid.count_roots(f) == grid.npoints
    else:
        assert grid.root_set(r) == grid.root_set(f)


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_footprint_bound_is_sound(data):
    field = data.draw(st.sampled_from(FIELDS))
    grid = Grid.full(field, 2)
    f = reduce_mod_grid(data.draw(polynomials(field)), grid)
    if f.is_zero():
        return
    roots = grid.count_roots(f)
    for o in builtin_orders(2):
        assert roots <= grid.D(f.leading_monomial(o))


@settings(max_examples=300, deadline=None)
@given(st.data())
def test_footprint_value_monotone_and_gap(data):
    m = data.draw(st.integers(1, 3))
    sizes = tuple(data.draw(st.integers(1, 6)) for _ in range(m))
    mono = tuple(data.draw(st.integers(0, s - 1)) for s in sizes)
    n = tuple(data.draw(st.integers(0, e)) for e in mono)
    d = footprint_value(mono, sizes)
    if n != mono:
        assert divides(n, mono)
        assert footprint_value(n, sizes) < d
    if mono[-1] >= 1:
        assert d > sizes[-1] * footprint_value(mono[:-1], sizes[:-1])

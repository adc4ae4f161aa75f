import random
from itertools import product

import pytest

from footprint.analysis import Classification, classify
from footprint.constructions import (
    hermitian_polynomial,
    search_attaining,
    search_space,
    trace_difference_polynomial,
    trivial_polynomial,
    trivial_root_count,
)
from footprint.errors import DegenerateCase, ExponentTooLarge, NotASubset, SearchInfeasible, ZeroConstant
from footprint.field import FieldSpec
from footprint.grid import Grid
from footprint.ordering import MonomialOrder, builtin_orders
from footprint.polynomial import Polynomial

from oracle import RefField, closed_trivial_count

F2, F3, F4 = FieldSpec(2), FieldSpec(3), FieldSpec(2, 2)
LEX21 = MonomialOrder.lex(2, 1)


def test_trivial_examples():
    g = Grid.full(F3, 2)
    k = trivial_polynomial(g, [[], []], 2)
    assert k == Polynomial.constant(F3, 2, 2) and g.count_roots(k) == 0
    f = trivial_polynomial(g, [[0], [0, 1]])
    assert g.count_roots(f) == 7 == trivial_root_count(g, [[0], [0, 1]])
    non_roots = {pt for pt in g.points()} - set(g.root_set(f))
    assert non_roots == {(F3(1), F3(2)), (F3(2), F3(2))}
    for o in builtin_orders(2):
        assert f.leading_monomial(o) == (1, 2)
    with pytest.raises(ZeroConstant):
        trivial_polynomial(g, [[0], []], 0)
    with pytest.raises(NotASubset):
        trivial_polynomial(Grid.parse("{0,1},full", F3, 2), [[2], []])


def test_trivial_random_against_reference():
    rng = random.Random(11)
    for _ in range(40):
        field = rng.choice([F2, F3, F4, FieldSpec(5), FieldSpec(3, 2)])
        m = rng.randint(1, 3)
        subsets = [rng.sample(range(field.order), rng.randint(1, min(field.order, 4))) for _ in range(m)]
        grid = Grid.from_values(field, [[field.to_digits(v) for v in s] for s in subsets])
        chosen = [rng.sample(list(s), rng.randint(0, len(s))) for s in grid.subsets]
        f = trivial_polynomial(grid, chosen, rng.randrange(1, field.order) if field.extension_degree == 1 else 1)
        ref = RefField(field.characteristic, field.modulus)
        expected = closed_trivial_count(grid.sizes, [len(c) for c in chosen])
        assert len(ref.roots(f.raw_terms, subsets)) == expected == grid.count_roots(f)


@pytest.mark.parametrize("q,field_order", [(2, 4), (3, 9), (4, 16)])
def test_hermitian_family(q, field_order):
    c = hermitian_polynomial(q)
    assert c.grid.field.order == field_order
    assert c.polynomial.leading_monomial(c.order) == (0, q)
    assert c.grid.count_roots(c.polynomial) == q**3 == c.expected_roots
    assert c.grid.D((0, q)) == q**3
    if q in (2, 3):
        rep = classify(c.polynomial, c.grid, c.order)
        assert rep.classification is Classification.NONTRIVIAL_ATTAINING


def test_hermitian_text():
    assert str(hermitian_polynomial(2).polynomial) == "X1^3 + X2^2 + X2"


def test_trace_difference_family():
    c = trace_difference_polynomial(3)
    g, h = c.parts["G"], c.parts["H"]
    assert g * h == c.polynomial
    assert c.polynomial.leading_monomial(c.order) == (6, 3)
    full = c.grid
    roots = set(full.root_set(c.polynomial))
    assert roots == set(full.root_set(g)) | set(full.root_set(h))
    assert len(roots) == 63 == 3 * 27 - 2 * 9
    t = Grid.parse(c.parts["T_grid"], full.field, 2)
    assert t.sizes == (6, 6)
    h_roots = set(t.root_set(h))
    expected = {(a, b) for a, b in product(*t.subsets) if a.trace(1) == b.trace(1) and not a.trace(1).is_zero()}
    assert h_roots == expected and len(h_roots) == 18
    with pytest.raises(DegenerateCase):
        trace_difference_polynomial(2)


def test_search_f2_all_trivial():
    grid = Grid.full(F2, 2)
    res = search_attaining(grid, (1, 1), MonomialOrder.lex(1, 2), exhaustive=True)
    assert res.mode == "exhaustive" and res.candidates == 2**3
    assert res.hits
    for f, rep in res.hits:
        assert rep.classification is Classification.TRIVIAL_FORM
        assert grid.count_roots(f) == grid.D((1, 1))


def test_search_rediscovers_hermitian():
    grid = Grid.full(F4, 2)
    res = search_attaining(grid, (0, 2), LEX21)
    herm = hermitian_polynomial(2).polynomial
    polys = {f: rep for f, rep in res.hits}
    assert herm in polys
    assert polys[herm].classification is Classification.NONTRIVIAL_ATTAINING
    assert [str(f) for f, _ in res.hits] == sorted(str(f) for f, _ in res.hits)
    for f, _ in res.hits:
        assert f.leading_monomial(LEX21) == (0, 2)
        assert grid.count_roots(f) == 8
    assert res.summary()["count"] == len(res) == 1296
    assert list(res) == res.hits


def test_search_sampling_is_deterministic():
    grid = Grid.full(F4, 2)
    a = search_attaining(grid, (0, 2), LEX21, budget=1, seed=7, exhaustive=False)
    b = search_attaining(grid, (0, 2), LEX21, budget=1, seed=7, exhaustive=False)
    assert a.summary() == b.summary() and [str(f) for f, _ in a.hits] == [str(f) for f, _ in b.hits]
    assert a.mode == "sample" and a.examined == 1


def test_search_errors_and_space():
    grid = Grid.full(F3, 2)
    assert search_space(grid, (0, 1), LEX21) == [(0, 0), (1, 0), (2, 0)]
    with pytest.raises(ExponentTooLarge):
        search_space(grid, (3, 0), LEX21)
    with pytest.raises(SearchInfeasible):
        search_attaining(Grid.full(FieldSpec(3, 2), 2), (0, 4), LEX21, exhaustive=True)


def test_search_is_complete_for_graphs():
    # X2 + g(X1) has exactly one root on each line X1 = a, so all 27 candidates attain D(X2) = 3
    res = search_attaining(Grid.full(F3, 2), (0, 1), LEX21)
    assert res.candidates == len(res) == 27
    # it is a trivial product X2 - a only when g is constant
    kinds = [rep.classification for _, rep in res]
    assert kinds.count(Classification.TRIVIAL_FORM) == 3
    assert kinds.count(Classification.NONTRIVIAL_ATTAINING) == 24

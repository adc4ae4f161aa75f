from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from footprint.analysis import (
    Classification,
    check_irreducible_corollary,
    check_necessary_conditions,
    classify,
    divisible_by_linear,
    dominating_monomial,
    extract_linear_factors,
    footprint_bound,
    hyperplane_is_roots,
    is_monomial_ordering_invariant,
    omega_and_max_monomials,
    possible_leading_monomials,
    schwartz_zippel_bound,
    split_check,
)
from footprint.constructions import hermitian_polynomial, trace_difference_polynomial, trivial_polynomial
from footprint.errors import (
    ConstantPolynomial,
    DegreeTooLarge,
    HasLinearFactor,
    IrreducibilityUnverified,
    LeadingDegreeTooLarge,
    NotFullGrid,
    NotSquareGrid,
    TheoremViolation,
    ZeroPolynomial,
)
from footprint.feasibility import is_feasible, strictly_positive_separator_exists
from footprint.field import FieldSpec
from footprint.grid import Grid
from footprint.ordering import MonomialOrder, builtin_orders
from footprint.polynomial import Polynomial, reduce_mod_grid

from oracle import RefField, footprint_count
from strategies import FIELDS, reduced_polynomials

F2, F3, F4, F9 = FieldSpec(2), FieldSpec(3), FieldSpec(2, 2), FieldSpec(3, 2)
LEX12, LEX21 = MonomialOrder.lex(1, 2), MonomialOrder.lex(2, 1)


def P(text, field, nvars=2):
    return Polynomial.parse(text, field, nvars)


@pytest.fixture(scope="module")
def herm():
    return P("X1^3-X2^2-X2", F4)


@pytest.fixture(scope="module")
def trace_pair():
    h = P("X1^3-X2^3+X1-X2", F9)
    return h, Grid.parse("trace_nonzero:1", F9, 2)


def test_footprint_bound_examples(herm):
    assert footprint_bound(herm, Grid.full(F4, 2), LEX21) == 8
    assert footprint_bound(Polynomial.constant(F3, 2, 2), Grid.full(F3, 2), LEX12) == 0
    c = trace_difference_polynomial(3)
    for o in (LEX12, LEX21):
        assert footprint_bound(c.polynomial, c.grid, o) == 63
    assert c.polynomial.leading_monomial(LEX12) == (6, 3)
    assert c.polynomial.leading_monomial(LEX21) == (3, 6)
    with pytest.raises(LeadingDegreeTooLarge):
        footprint_bound(P("X1^3", F3), Grid.full(F3, 2), LEX12)
    with pytest.raises(ZeroPolynomial):
        footprint_bound(Polynomial.zero(F3, 2), Grid.full(F3, 2), LEX12)


def test_schwartz_zippel_examples(herm):
    g3 = Grid.full(F3, 2)
    assert schwartz_zippel_bound(P("X1+X2", F3), g3) == 3
    assert schwartz_zippel_bound(Polynomial.constant(F3, 2, 1), g3) == 0
    g4 = Grid.full(F4, 2)
    assert schwartz_zippel_bound(herm, g4) == 12 >= footprint_bound(herm, g4, LEX21) == 8
    with pytest.raises(NotSquareGrid):
        schwartz_zippel_bound(P("X1", F3), Grid.parse("{0,1},full", F3, 2))
    with pytest.raises(DegreeTooLarge):
        schwartz_zippel_bound(P("X1^2*X2", F3), g3)


def test_omega_examples(herm, trace_pair):
    h, t = trace_pair
    assert t.sizes == (6, 6)
    assert omega_and_max_monomials(h, t) == (18, [(0, 3), (3, 0)])
    g4 = Grid.full(F4, 2)
    assert omega_and_max_monomials(herm, g4) == (12, [(3, 0)])
    assert g4.D((0, 2)) == 8 and g4.D((0, 1)) == 4


def test_extract_linear_factors_examples(herm):
    g3 = Grid.full(F3, 2)
    f = P("X1*(X2^2+1)", F3)
    removed, h = extract_linear_factors(f, g3)
    assert removed == ((F3(0),), ())
    assert h == P("X2^2+1", F3)
    for index, a in product((1, 2), F3.elements()):
        expect = index == 1 and a.is_zero()
        assert hyperplane_is_roots(f, g3, index, a) == expect
        assert divisible_by_linear(f, index, a) == expect
    removed, h = extract_linear_factors(herm, Grid.full(F4, 2))
    assert removed == ((), ())
    assert h == herm


def test_split_check_examples():
    c = trace_difference_polynomial(3)
    rec = split_check(c.polynomial, c.grid, c.order)
    assert rec.as_tuple() == (True, True)
    assert (rec.f_roots, c.grid.npoints, rec.h_roots, rec.residual_grid.npoints) == (63, 81, 18, 36)
    assert rec.residual == c.parts["H"]

    f = P("X1*(X2^2+1)", F3)
    rec = split_check(f, Grid.full(F3, 2), LEX12)
    assert (rec.f_roots, rec.f_bound) == (3, 7)
    assert rec.residual_grid.sizes == (2, 3)
    assert (rec.h_roots, rec.h_bound) == (0, 4)
    assert rec.as_tuple() == (False, False)


def test_possible_leading_monomials_examples():
    for q, field in ((2, F4), (3, F9)):
        h = P(f"X1^{q}-X2^{q}+X1-X2", field)
        assert possible_leading_monomials(h) == {(q, 0), (0, q)}
    f = P("X1^2+X2", F3)
    assert possible_leading_monomials(f) == {(2, 0), (0, 1)}
    # witnesses: weights (1,1) rank X1^2 first, (1,3) rank X2 first
    assert f.leading_monomial(MonomialOrder.weighted([1, 1], 1, 2)) == (2, 0)
    assert f.leading_monomial(MonomialOrder.weighted([1, 3], 1, 2)) == (0, 1)
    g = P("X1^2*X2+X1*X2+X2+1", F3)
    assert possible_leading_monomials(g) == {(2, 1)}
    # X1*X2 lies on the segment between X1^2 and X2^2, so it never leads
    assert possible_leading_monomials(P("X1^2+X1*X2+X2^2", F3)) == {(2, 0), (0, 2)}


def test_feasibility_primitives():
    # w1 >= 1, w2 >= 1, w1 - w2 <= -1, w2 - w1 <= -1 is infeasible
    rows = [((-1, 0), -1), ((0, -1), -1), ((1, -1), -1), ((-1, 1), -1)]
    assert not is_feasible(rows, 2)
    assert is_feasible(rows[:3], 2)
    assert strictly_positive_separator_exists((1, 1), [(2, 0)]) is True
    assert strictly_positive_separator_exists((1, 1), [(2, 0), (0, 2)]) is False
    assert strictly_positive_separator_exists((1, 0), [(2, 0)]) is False


def test_ordering_invariance_examples(herm):
    g = trivial_polynomial(Grid.full(F3, 2), [[0], [0, 1]], 2)
    assert is_monomial_ordering_invariant(g) == (True, (1, 2))
    assert is_monomial_ordering_invariant(P("X2^2+2*X2+1", F3)) == (True, (0, 2))
    assert is_monomial_ordering_invariant(herm) == (False, None)
    assert dominating_monomial(herm) is None


def test_necessary_conditions_examples(herm, trace_pair):
    h, t = trace_pair
    rep = check_necessary_conditions(h, t)
    assert rep.leading_in_max and rep.coprime
    assert rep.root_count == rep.omega == 18
    d = rep.to_dict()
    assert d["cond1_leading_in_max"] and d["cond2_coprime"] and d["gcd"] == [0, 0]

    rep = check_necessary_conditions(herm, Grid.full(F4, 2))
    assert rep.root_count == 8 < rep.omega == 12
    assert not rep.coprime and rep.gcd == (3, 0)

    unique = P("X1^2*X2^2+X1+1", F3)
    rep = check_necessary_conditions(unique, Grid.full(F3, 2))
    assert len(rep.max_d_monomials) == 1 and not rep.coprime and not rep.attains_omega

    with pytest.raises(ConstantPolynomial):
        check_necessary_conditions(Polynomial.constant(F3, 2, 1), Grid.full(F3, 2))
    with pytest.raises(HasLinearFactor):
        check_necessary_conditions(P("X1*X2+X1", F3), Grid.full(F3, 2))


def test_classify_examples(herm):
    g3 = Grid.full(F3, 2)
    f = trivial_polynomial(g3, [[0], [0, 1]], 2)
    assert f == P("2*X1*X2*(X2-1)", F3)
    rep = classify(f, g3, LEX12)
    assert rep.classification is Classification.TRIVIAL_FORM
    assert rep.root_count == rep.bound == 7 == g3.D((1, 2))
    assert rep.residual == Polynomial.constant(F3, 2, 2)

    rep = classify(herm, Grid.full(F4, 2), LEX21)
    assert rep.classification is Classification.NONTRIVIAL_ATTAINING
    assert rep.root_count == rep.bound == 8

    rep = classify(P("X1^2+X2", F3), g3, LEX12)
    assert rep.classification is Classification.NOT_ATTAINING
    assert (rep.root_count, rep.bound) == (3, 6)

    rep = classify(P("X1^4", F3), g3, LEX12)
    assert rep.polynomial == P("X1^2", F3)
    with pytest.raises(ZeroPolynomial):
        classify(P("X1^3-X1", F3), g3, LEX12)


def test_irreducible_corollary_examples(herm):
    rep = check_irreducible_corollary(herm, Grid.full(F4, 2), irreducible_asserted=True)
    assert rep.root_count == 8 and (3, 0) in rep.larger_monomials and rep.holds

    rep = check_irreducible_corollary(P("X1+X2", F3), Grid.full(F3, 2), search=True)
    assert rep.irreducible and rep.root_count == 3
    assert rep.equal_monomials == ((0, 1), (1, 0))

    reducible = P("X1^2*X2^2+X1*X2", F4)
    with pytest.raises(IrreducibilityUnverified):
        check_irreducible_corollary(reducible, Grid.full(F4, 2), search=True)
    with pytest.raises(IrreducibilityUnverified):
        check_irreducible_corollary(reducible, Grid.full(F4, 2))
    rep = check_irreducible_corollary(P("X1*X2+X1", F3), Grid.full(F3, 2), search=True)
    assert not rep.irreducible
    with pytest.raises(NotFullGrid):
        check_irreducible_corollary(herm, Grid.parse("{0,1},full", F4, 2), irreducible_asserted=True)


@pytest.mark.parametrize("m", [2, 3])
def test_classify_exhaustive_over_f2(m):
    """Every nonzero reduced polynomial on F_2^m under every built-in ordering."""
    field = F2
    grid = Grid.full(field, m)
    ref = RefField(2, field.modulus)
    monos = list(product(range(2), repeat=m))
    orders = builtin_orders(m)
    counts = {c: 0 for c in Classification}
    attaining_oracle = 0
    for coeffs in product(range(2), repeat=len(monos)):
        if not any(coeffs):
            continue
        f = Polynomial._raw(field, m, {mo: c for mo, c in zip(monos, coeffs) if c})
        roots = len(ref.roots(f.raw_terms, [range(2)] * m))
        for o in orders:
            counts[classify(f, grid, o).classification] += 1
            attaining_oracle += roots == footprint_count(f.leading_monomial(o), grid.sizes)
    # over F_2 each S'_l is one of {}, {0}, {1}; the constant is 1
    assert counts[Classification.TRIVIAL_FORM] == 3**m * len(orders)
    assert counts[Classification.TRIVIAL_FORM] + counts[Classification.NONTRIVIAL_ATTAINING] == attaining_oracle
    frozen = {2: (54, 12, 24), 3: (486, 480, 3624)}[m]
    assert tuple(counts.values()) == frozen


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_classify_is_stable_on_ordering_invariant_inputs(data):
    field = data.draw(st.sampled_from(FIELDS[:4]))
    grid = Grid.full(field, 2)
    f = data.draw(reduced_polynomials(field, max_terms=4))
    invariant, _ = is_monomial_ordering_invariant(f)
    if not invariant:
        return
    reports = {repr(sorted(classify(f, grid, o).ordering_free_dict().items())) for o in builtin_orders(2)}
    assert len(reports) == 1


@settings(max_examples=120, deadline=None)
@given(st.data())
def test_every_ordering_lm_is_possible(data):
    field = data.draw(st.sampled_from(FIELDS))
    m = data.draw(st.integers(1, 3))
    f = data.draw(reduced_polynomials(field, nvars=m, max_terms=6))
    lms = possible_leading_monomials(f)
    for o in builtin_orders(m):
        assert f.leading_monomial(o) in lms
    for mono in lms:
        assert mono in f.support


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_split_equivalence_random(data):
    field = data.draw(st.sampled_from(FIELDS[:4]))
    grid = Grid.full(field, 2)
    f = reduce_mod_grid(data.draw(reduced_polynomials(field, max_terms=4)), grid)
    removed, h = extract_linear_factors(f, grid)
    sub = grid.subtract_subsets(removed)
    assert trivial_polynomial(grid, removed) * h == f
    for o in builtin_orders(2):
        rec = split_check(f, grid, o)
        assert rec.residual == h and rec.residual_grid == sub

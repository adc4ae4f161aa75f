"""When does a polynomial attain the footprint bound on a grid?

The pipeline behind :func:`classify` is: reduce modulo the grid, take the
footprint value of the leading monomial, count roots exhaustively, split off
every linear factor ``X_l - a`` whose hyperplane is entirely made of roots, and
check the leftover factor against the necessary conditions for attaining its
own bound on the shrunken grid.

Statements that are theorems (soundness of the bound, equivalence of the split,
the necessary conditions, the classification of ordering invariant attainers)
are checked on every call; a failure raises :class:`TheoremViolation`, which
always indicates a bug rather than bad input.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from .errors import (
    ConstantPolynomial,
    DegreeTooLarge,
    ExponentTooLarge,
    FootprintError,
    HasLinearFactor,
    IrreducibilityUnverified,
    LeadingDegreeTooLarge,
    NotFullGrid,
    NotSquareGrid,
    TheoremViolation,
    ZeroPolynomial,
)
from .feasibility import strictly_positive_separator_exists
from .field import FieldElement
from .grid import Grid
from .ordering import Monomial, MonomialOrder, divides, monomial_gcd
from .polynomial import Polynomial, divide, reduce_mod_grid


class Classification(str, enum.Enum):
    TRIVIAL_FORM = "TrivialForm"
    NONTRIVIAL_ATTAINING = "NontrivialAttaining"
    NOT_ATTAINING = "NotAttaining"

    def __str__(self):
        return self.value


def _require_nonzero(f: Polynomial):
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial has no footprint")


def _mono_list(ms) -> list[list[int]]:
    return [list(m) for m in sorted(ms)]


# --- bounds -----------------------------------------------------------------


def footprint_bound(f: Polynomial, grid: Grid, order: MonomialOrder) -> int:
    """Footprint value of ``lm(f)``; an upper bound on the grid roots of ``f``."""
    _require_nonzero(f)
    lm = f.leading_monomial(order)
    if any(e >= s for e, s in zip(lm, grid.sizes)):
        raise LeadingDegreeTooLarge(
            f"leading monomial {lm} is not below the grid sizes {grid.sizes}; reduce modulo the grid first"
        )
    return grid.footprint_value(lm)


def schwartz_zippel_bound(f: Polynomial, grid: Grid) -> int:
    """``t * s**(m-1)`` for total degree ``t < s`` on an ``s x ... x s`` grid."""
    _require_nonzero(f)
    if not grid.is_square():
        raise NotSquareGrid(f"grid sizes {grid.sizes} are not all equal")
    s = grid.sizes[0]
    t = f.total_degree()
    if t >= s:
        raise DegreeTooLarge(f"total degree {t} is not below the factor size {s}")
    return t * s ** (grid.nvars - 1)


def omega_and_max_monomials(h: Polynomial, grid: Grid) -> tuple[int, list[Monomial]]:
    """Largest footprint value over the support, and every monomial attaining it."""
    _require_nonzero(h)
    values = {m: grid.footprint_value(m) for m in h.support}
    omega = max(values.values())
    return omega, sorted(m for m, v in values.items() if v == omega)


# --- leading monomials over all orderings ------------------------------------


def possible_leading_monomials(f: Polynomial) -> frozenset[Monomial]:
    """Support monomials that lead ``f`` under at least one monomial ordering.

    ``M`` qualifies exactly when a strictly positive weight vector ranks it
    above every other support monomial; that is decided by exact rational
    elimination, so no ordering is sampled.
    """
    _require_nonzero(f)
    supp = sorted(f.support)
    out = []
    for m in supp:
        others = [n for n in supp if n != m]
        if strictly_positive_separator_exists(m, others):
            out.append(m)
    return frozenset(out)


def dominating_monomial(f: Polynomial) -> Monomial | None:
    """The support monomial divisible by every other one, if there is one."""
    _require_nonzero(f)
    for m in f.support:
        if all(divides(n, m) for n in f.support):
            return m
    return None


def is_monomial_ordering_invariant(f: Polynomial) -> tuple[bool, Monomial | None]:
    """``(True, M)`` when ``lm(f) = M`` for every ordering, else ``(False, None)``.

    Computed by divisibility and cross-checked against the weight test.
    """
    dom = dominating_monomial(f)
    lms = possible_leading_monomials(f)
    by_weights = len(lms) == 1
    if (dom is not None) != by_weights or (dom is not None and lms != {dom}):
        raise TheoremViolation(f"divisibility and weight tests disagree on {f}: {dom} vs {sorted(lms)}")
    return dom is not None, dom


# --- linear factors ----------------------------------------------------------


def _vanishes_on(g: Polynomial, grid: Grid) -> bool:
    return g.is_zero() or grid.count_roots(g) == grid.npoints


def hyperplane_is_roots(f: Polynomial, grid: Grid, index: int, a: FieldElement) -> bool:
    """Every grid point with coordinate ``index`` equal to ``a`` is a root of ``f``."""
    sub = f.substitute_variable(index, a)
    if sub.is_zero():
        return True
    slice_grid = Grid(grid.field, grid.subsets[: index - 1] + ((a,),) + grid.subsets[index:])
    return _vanishes_on(sub, slice_grid)


def linear_factor(f: Polynomial, index: int, a) -> Polynomial:
    return Polynomial.variable(f.field, f.nvars, index) - f.field.element(a)


def divisible_by_linear(f: Polynomial, index: int, a) -> bool:
    """``X_index - a`` divides ``f`` in the full polynomial ring."""
    _, r = divide(f, [linear_factor(f, index, a)], MonomialOrder.default(f.nvars))
    return r.is_zero()


def extract_linear_factors(
    f: Polynomial, grid: Grid
) -> tuple[tuple[tuple[FieldElement, ...], ...], Polynomial]:
    """Split ``f = G * H`` with ``G`` a product of the forced linear factors.

    ``S'_l`` collects the ``a`` in ``S_l`` whose whole hyperplane consists of
    roots; each such ``X_l - a`` divides ``f``, and the exact quotient ``H`` is
    returned with the subsets.
    """
    _require_nonzero(f)
    grid._check(f)
    if not f.is_reduced(grid.sizes):
        raise ExponentTooLarge(f"{f} is not reduced modulo the grid {grid.sizes}")
    removed = []
    for index, s in enumerate(grid.subsets, start=1):
        removed.append(tuple(a for a in s if hyperplane_is_roots(f, grid, index, a)))
    h = f
    order = MonomialOrder.default(f.nvars)
    for index, rs in enumerate(removed, start=1):
        for a in rs:
            (q,), r = divide(h, [linear_factor(h, index, a)], order)
            if not r.is_zero():
                raise TheoremViolation(f"X{index} - {a} vanishes on its hyperplane but does not divide {f}")
            h = q
    return tuple(removed), h


@dataclass(frozen=True)
class SplitRecord:
    f_roots: int
    f_bound: int
    h_roots: int
    h_bound: int
    residual: Polynomial
    residual_grid: Grid

    @property
    def f_attains(self) -> bool:
        return self.f_roots == self.f_bound

    @property
    def h_attains(self) -> bool:
        return self.h_roots == self.h_bound

    def as_tuple(self) -> tuple[bool, bool]:
        return self.f_attains, self.h_attains


def split_check(
    f: Polynomial,
    grid: Grid,
    order: MonomialOrder,
    removed: Sequence[Sequence] | None = None,
) -> SplitRecord:
    """Compare attainment of ``f`` on ``S`` with that of ``H = f / G`` on ``T = S - S'``.

    ``removed`` defaults to the subsets found by :func:`extract_linear_factors`.
    The two must agree; disagreement raises :class:`TheoremViolation`.
    """
    _require_nonzero(f)
    if removed is None:
        removed, h = extract_linear_factors(f, grid)
    else:
        removed = tuple(tuple(grid.field.element(a) for a in r) for r in removed)
        h = f
        order_lex = MonomialOrder.default(f.nvars)
        for index, rs in enumerate(removed, start=1):
            for a in rs:
                (q,), r = divide(h, [linear_factor(h, index, a)], order_lex)
                if not r.is_zero():
                    raise FootprintError(f"X{index} - {a} does not divide {f}")
                h = q
    sub = grid.subtract_subsets(removed)  # raises EmptyFactor when some T_l is empty
    rec = SplitRecord(
        f_roots=grid.count_roots(f),
        f_bound=footprint_bound(f, grid, order),
        h_roots=sub.count_roots(h),
        h_bound=footprint_bound(h, sub, order),
        residual=h,
        residual_grid=sub,
    )
    if rec.f_attains != rec.h_attains:
        raise TheoremViolation(f"split equivalence fails for {f} under {order}: {rec.as_tuple()}")
    return rec


# --- necessary conditions ----------------------------------------------------


@dataclass(frozen=True)
class ConditionReport:
    omega: int
    max_d_monomials: tuple[Monomial, ...]
    possible_leading_monomials: tuple[Monomial, ...]
    gcd: Monomial
    root_count: int

    @property
    def leading_in_max(self) -> bool:
        """Every ordering's leading monomial has the largest footprint value."""
        return set(self.possible_leading_monomials) <= set(self.max_d_monomials)

    @property
    def coprime(self) -> bool:
        return not any(self.gcd)

    @property
    def attains_omega(self) -> bool:
        return self.root_count == self.omega

    def to_dict(self) -> dict:
        return {
            "omega": self.omega,
            "max_d_monomials": _mono_list(self.max_d_monomials),
            "possible_leading_monomials": _mono_list(self.possible_leading_monomials),
            "gcd": list(self.gcd),
            "root_count": self.root_count,
            "cond1_leading_in_max": self.leading_in_max,
            "cond2_coprime": self.coprime,
            "attains_omega": self.attains_omega,
        }


def check_necessary_conditions(h: Polynomial, grid: Grid) -> ConditionReport:
    """Evaluate both necessary conditions for ``h`` to have ``omega`` roots.

    ``h`` must be non-constant, reduced, and free of factors ``X_l - a`` with
    ``a`` in ``S_l``.
    """
    _require_nonzero(h)
    grid._check(h)
    if h.is_constant():
        raise ConstantPolynomial("the necessary conditions concern non-constant polynomials")
    if not h.is_reduced(grid.sizes):
        raise ExponentTooLarge(f"{h} is not reduced modulo the grid {grid.sizes}")
    for index, s in enumerate(grid.subsets, start=1):
        for a in s:
            if hyperplane_is_roots(h, grid, index, a):
                raise HasLinearFactor(f"X{index} - {a} divides {h}; extract linear factors first")
    omega, maxd = omega_and_max_monomials(h, grid)
    rep = ConditionReport(
        omega=omega,
        max_d_monomials=tuple(maxd),
        possible_leading_monomials=tuple(sorted(possible_leading_monomials(h))),
        gcd=monomial_gcd(maxd),
        root_count=grid.count_roots(h),
    )
    if rep.attains_omega and not (rep.leading_in_max and rep.coprime):
        raise TheoremViolation(f"{h} has omega = {omega} roots but violates a necessary condition")
    return rep


# --- classification ----------------------------------------------------------


@dataclass(frozen=True)
class FootprintReport:
    polynomial: Polynomial
    grid: Grid
    order_used: MonomialOrder
    lm: Monomial
    bound: int
    omega: int
    max_d_monomials: tuple[Monomial, ...]
    root_count: int
    ordering_invariant: bool
    dominating_monomial: Monomial | None
    possible_leading_monomials: tuple[Monomial, ...]
    extracted_subsets: tuple[tuple[FieldElement, ...], ...]
    residual: Polynomial
    residual_root_count: int
    residual_bound: int
    classification: Classification
    residual_conditions: ConditionReport | None = None
    extra: dict = field(default_factory=dict, compare=False)

    @property
    def attains_bound(self) -> bool:
        return self.root_count == self.bound

    @property
    def residual_attains(self) -> bool:
        return self.residual_root_count == self.residual_bound

    def to_dict(self) -> dict:
        out = {
            "polynomial": str(self.polynomial),
            "field": str(self.grid.field),
            "grid": self.grid.describe(),
            "grid_sizes": list(self.grid.sizes),
            "order_used": str(self.order_used),
            "lm": list(self.lm),
            "bound": self.bound,
            "omega": self.omega,
            "max_d_monomials": _mono_list(self.max_d_monomials),
            "root_count": self.root_count,
            "attains_bound": self.attains_bound,
            "ordering_invariant": self.ordering_invariant,
            "dominating_monomial": None if self.dominating_monomial is None else list(self.dominating_monomial),
            "possible_leading_monomials": _mono_list(self.possible_leading_monomials),
            "extracted_subsets": [[str(a) for a in s] for s in self.extracted_subsets],
            "residual": str(self.residual),
            "residual_root_count": self.residual_root_count,
            "residual_bound": self.residual_bound,
            "residual_attains": self.residual_attains,
            "residual_conditions": None if self.residual_conditions is None else self.residual_conditions.to_dict(),
            "classification": self.classification.value,
        }
        out.update(self.extra)
        return out

    def ordering_free_dict(self) -> dict:
        d = self.to_dict()
        d.pop("order_used")
        return d


def classify(f: Polynomial, grid: Grid, order: MonomialOrder) -> FootprintReport:
    """Full footprint analysis of ``f`` on ``grid`` under ``order``."""
    _require_nonzero(f)
    grid._check(f)
    f = reduce_mod_grid(f, grid)
    if f.is_zero():
        raise ZeroPolynomial("the polynomial vanishes on the whole grid")
    lm = f.leading_monomial(order)
    bound = grid.footprint_value(lm)
    omega, maxd = omega_and_max_monomials(f, grid)
    roots = grid.count_roots(f)
    invariant, dom = is_monomial_ordering_invariant(f)
    lms = possible_leading_monomials(f)
    if roots > bound:
        raise TheoremViolation(f"{f} has {roots} roots, above its footprint bound {bound}")

    removed, h = extract_linear_factors(f, grid)
    sub = grid.subtract_subsets(removed)
    h_lm = h.leading_monomial(order)
    h_bound = sub.footprint_value(h_lm)
    h_roots = sub.count_roots(h)
    if (roots == bound) != (h_roots == h_bound):
        raise TheoremViolation(f"split equivalence fails for {f} under {order}")

    conditions = None if h.is_constant() else check_necessary_conditions(h, sub)

    if h.is_constant():
        verdict = Classification.TRIVIAL_FORM
    elif roots == bound:
        verdict = Classification.NONTRIVIAL_ATTAINING
    else:
        verdict = Classification.NOT_ATTAINING

    if len(maxd) == 1 and maxd[0] in lms and roots == omega and verdict is not Classification.TRIVIAL_FORM:
        raise TheoremViolation(f"{f} attains its unique top footprint value but is not a trivial product")
    if invariant and roots == bound and verdict is not Classification.TRIVIAL_FORM:
        raise TheoremViolation(f"ordering invariant {f} attains the bound without being a trivial product")

    return FootprintReport(
        polynomial=f,
        grid=grid,
        order_used=order,
        lm=lm,
        bound=bound,
        omega=omega,
        max_d_monomials=tuple(maxd),
        root_count=roots,
        ordering_invariant=invariant,
        dominating_monomial=dom,
        possible_leading_monomials=tuple(sorted(lms)),
        extracted_subsets=removed,
        residual=h,
        residual_root_count=h_roots,
        residual_bound=h_bound,
        classification=verdict,
        residual_conditions=conditions,
    )


# --- irreducible polynomials -------------------------------------------------

_FACTOR_SEARCH_MAX_Q = 3
_FACTOR_SEARCH_MAX_DEGREE = 3


@dataclass(frozen=True)
class CorollaryReport:
    root_count: int
    equal_monomials: tuple[Monomial, ...]
    larger_monomials: tuple[Monomial, ...]
    irreducible: bool
    irreducibility_source: str

    @property
    def two_at_root_count(self) -> bool:
        return len(self.equal_monomials) >= 2

    @property
    def one_above_root_count(self) -> bool:
        return bool(self.larger_monomials)

    @property
    def holds(self) -> bool:
        return self.two_at_root_count or self.one_above_root_count

    def to_dict(self) -> dict:
        return {
            "root_count": self.root_count,
            "equal_monomials": _mono_list(self.equal_monomials),
            "larger_monomials": _mono_list(self.larger_monomials),
            "cond1_two_at_root_count": self.two_at_root_count,
            "cond2_one_above_root_count": self.one_above_root_count,
            "irreducible": self.irreducible,
            "irreducibility_source": self.irreducibility_source,
        }


def _is_excluded_linear(f: Polynomial) -> bool:
    """``f = k * (X_l - a)``."""
    nonconst = [m for m in f.support if any(m)]
    return len(nonconst) == 1 and sum(nonconst[0]) == 1


def find_factor(f: Polynomial) -> Polynomial | None:
    """A proper factor of ``f`` by exhaustive search, or ``None`` if irreducible.

    Searches monic candidates of total degree up to ``deg(f) // 2``.
    """
    field_ = f.field
    t = f.total_degree()
    order = MonomialOrder.default(f.nvars, "grlex")
    top = t // 2
    monos = [m for m in product(range(top + 1), repeat=f.nvars) if sum(m) <= top]
    monos.sort(key=order.key)
    q = field_.order
    for coeffs in product(range(q), repeat=len(monos)):
        cand = Polynomial._raw(field_, f.nvars, {m: c for m, c in zip(monos, coeffs) if c})
        if cand.is_zero() or cand.is_constant():
            continue
        if cand.leading_coefficient(order).value != 1:
            continue
        (_,), r = divide(f, [cand], order)
        if r.is_zero():
            return cand
    return None


def check_irreducible_corollary(
    f: Polynomial,
    grid: Grid,
    irreducible_asserted: bool = False,
    search: bool = False,
) -> CorollaryReport:
    """Check the dichotomy satisfied by irreducible polynomials on ``F_q^m``.

    With ``s`` the number of roots, an irreducible ``f`` other than
    ``k (X_l - a)`` has two support monomials of footprint value ``s`` or one
    above ``s``.  Irreducibility is taken from ``irreducible_asserted`` or, for
    ``q <= 3`` and total degree ``<= 3``, from an exhaustive factor search.
    """
    _require_nonzero(f)
    grid._check(f)
    if not grid.is_full():
        raise NotFullGrid("the irreducibility dichotomy concerns the full grid F_q^m")
    if not f.is_reduced(grid.sizes):
        raise ExponentTooLarge(f"{f} is not reduced modulo the grid {grid.sizes}")
    if f.is_constant():
        raise ConstantPolynomial("constants are not irreducible")
    if _is_excluded_linear(f):
        raise FootprintError(f"{f} is of the excluded form k*(X_l - a)")
    if irreducible_asserted:
        irreducible, source = True, "asserted"
    elif search:
        if grid.field.order > _FACTOR_SEARCH_MAX_Q or f.total_degree() > _FACTOR_SEARCH_MAX_DEGREE:
            raise IrreducibilityUnverified(
                f"factor search is limited to q <= {_FACTOR_SEARCH_MAX_Q} and total degree <= {_FACTOR_SEARCH_MAX_DEGREE}"
            )
        irreducible, source = find_factor(f) is None, "search"
    else:
        raise IrreducibilityUnverified("irreducibility was neither asserted nor searched for")
    s = grid.count_roots(f)
    values = {m: grid.footprint_value(m) for m in f.support}
    rep = CorollaryReport(
        root_count=s,
        equal_monomials=tuple(sorted(m for m, v in values.items() if v == s)),
        larger_monomials=tuple(sorted(m for m, v in values.items() if v > s)),
        irreducible=irreducible,
        irreducibility_source=source,
    )
    if irreducible and not rep.holds:
        raise TheoremViolation(f"irreducible {f} with {s} roots satisfies neither condition")
    return rep

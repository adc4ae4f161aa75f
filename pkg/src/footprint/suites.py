"""Named property suites over exhaustive and seeded random polynomial corpora.

Each suite returns a :class:`SuiteResult`; a failure entry carries the
offending polynomial in text form so it can be replayed with ``analyze``.
The suites check statements against brute-force root counts and plain
divisibility, never against the classifier's own internal assertions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Iterator, Sequence

from .analysis import (
    check_necessary_conditions,
    classify,
    divisible_by_linear,
    dominating_monomial,
    extract_linear_factors,
    hyperplane_is_roots,
    omega_and_max_monomials,
    possible_leading_monomials,
    split_check,
)
from .constructions import trivial_polynomial
from .errors import TheoremViolation, UnknownSuite
from .field import FieldSpec
from .grid import Grid, footprint_value
from .ordering import builtin_orders, divides
from .polynomial import Polynomial


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[dict] = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, detail: str, poly: Polynomial | None = None, grid: Grid | None = None, **extra):
        entry = {"detail": detail, **extra}
        if poly is not None:
            entry["polynomial"] = str(poly)
            entry["field"] = str(poly.field)
        if grid is not None:
            entry["grid"] = grid.describe()
        self.failures.append(entry)

    def to_dict(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "checks": self.checks,
            "failures": self.failures[:50],
            "failure_count": len(self.failures),
            **self.notes,
        }


# --- corpora -----------------------------------------------------------------


def reduced_monomials(sizes: Sequence[int]) -> list[tuple[int, ...]]:
    return list(product(*(range(s) for s in sizes)))


def exhaustive_corpus(field_: FieldSpec, nvars: int = 2, max_terms: int = 4) -> Iterator[Polynomial]:
    """Every reduced polynomial on ``F^nvars`` with at most ``max_terms`` terms
    and nonzero coefficients from the prime subfield."""
    monos = reduced_monomials([field_.order] * nvars)
    coeffs = range(1, field_.characteristic)
    for k in range(1, max_terms + 1):
        for support in combinations(monos, k):
            for cs in product(coeffs, repeat=k):
                yield Polynomial._raw(field_, nvars, dict(zip(support, cs)))


def random_polynomial(
    rng: random.Random, field_: FieldSpec, sizes: Sequence[int], max_terms: int = 6
) -> Polynomial:
    """A nonzero reduced polynomial with random support and coefficients."""
    monos = reduced_monomials(sizes)
    k = rng.randint(1, min(max_terms, len(monos)))
    support = rng.sample(monos, k)
    q = field_.order
    return Polynomial._raw(field_, len(sizes), {m: rng.randrange(1, q) for m in support})


def random_corpus(field_: FieldSpec, count: int, seed: int, nvars: int = 2, max_terms: int = 6):
    rng = random.Random(seed)
    sizes = [field_.order] * nvars
    for _ in range(count):
        yield random_polynomial(rng, field_, sizes, max_terms)


# --- suites ------------------------------------------------------------------


def field_axioms(fields: Sequence[FieldSpec] | None = None, trials: int = 0, seed: int = 0) -> SuiteResult:
    res = SuiteResult("field-axioms")
    fields = fields or [FieldSpec(2), FieldSpec(3), FieldSpec(2, 2), FieldSpec(3, 2), FieldSpec(2, 3), FieldSpec(2, 4)]
    for f in fields:
        els = f.elements()
        one, zero = f.one(), f.zero()
        exhaustive = f.order <= 9
        rng = random.Random(seed)
        triples = product(els, repeat=3) if exhaustive else (
            tuple(rng.choice(els) for _ in range(3)) for _ in range(max(trials, 2000))
        )
        for a, b, c in triples:
            res.checks += 1
            if (a + b) + c != a + (b + c) or (a * b) * c != a * (b * c):
                res.fail(f"associativity fails at {a}, {b}, {c} in {f}")
            if a + b != b + a or a * b != b * a:
                res.fail(f"commutativity fails at {a}, {b} in {f}")
            if a * (b + c) != a * b + a * c:
                res.fail(f"distributivity fails at {a}, {b}, {c} in {f}")
        for a in els:
            res.checks += 1
            if a + zero != a or a * one != a or a + (-a) != zero:
                res.fail(f"identity or negation fails at {a} in {f}")
            if a**f.order != a:
                res.fail(f"Frobenius a^q = a fails at {a} in {f}")
            if not a.is_zero():
                if a ** (f.order - 1) != one or a * a.inverse() != one:
                    res.fail(f"a^(q-1) = 1 or inverse fails at {a} in {f}")
        k = f.extension_degree
        for d in (d for d in range(1, k) if k % d == 0):
            q_sub = f.characteristic**d
            sub = [a for a in els if a**q_sub == a]
            fibers: dict = {}
            for a in els:
                fibers[a.trace(d)] = fibers.get(a.trace(d), 0) + 1
            res.checks += 1
            if len(sub) != q_sub or set(fibers) != set(sub) or set(fibers.values()) != {f.order // q_sub}:
                res.fail(f"trace fibers over F_{q_sub} in {f} are not uniform: {sorted(fibers.values())}")
            if f.order <= 81:
                for a, b in product(els, repeat=2):
                    res.checks += 1
                    if (a + b).trace(d) != a.trace(d) + b.trace(d) or (a * b).norm(d) != a.norm(d) * b.norm(d):
                        res.fail(f"trace additivity or norm multiplicativity fails at {a}, {b} in {f}")
                for c, a in product(sub, els):
                    res.checks += 1
                    if (c * a).trace(d) != c * a.trace(d):
                        res.fail(f"trace is not subfield-linear at {c}, {a} in {f}")
    return res


def _default_sound_corpus(fields, trials, seed):
    """Exhaustive corpora for F_2 and F_3 plus ``trials`` random polynomials per field above F_2."""
    if fields is None:
        fields = [FieldSpec(2), FieldSpec(3), FieldSpec(2, 2)]
    for i, f in enumerate(fields):
        if f.order <= 3:
            yield from exhaustive_corpus(f)
        if f.order > 2:
            yield from random_corpus(f, trials, seed + i)


def footprint_bound(fields=None, trials: int = 10_000, seed: int = 0) -> SuiteResult:
    """Root count never exceeds the footprint value of any ordering's leading monomial."""
    res = SuiteResult("footprint-bound")
    orders_by_m: dict = {}
    for f in _default_sound_corpus(fields, trials, seed):
        grid = Grid.full(f.field, f.nvars)
        roots = grid.count_roots(f)
        orders = orders_by_m.setdefault(f.nvars, builtin_orders(f.nvars))
        lms = possible_leading_monomials(f)
        for order in orders:
            res.checks += 1
            lm = f.leading_monomial(order)
            bound = grid.footprint_value(lm)
            if roots > bound:
                res.fail(f"{roots} roots exceed the bound {bound} under {order}", f, grid)
            if lm not in lms:
                res.fail(f"lm {lm} under {order} missing from the weight-test candidates", f, grid)
    return res


def schwartz_zippel(fields=None, trials: int = 10_000, seed: int = 0) -> SuiteResult:
    res = SuiteResult("schwartz-zippel")
    for f in _default_sound_corpus(fields, trials, seed):
        grid = Grid.full(f.field, f.nvars)
        s = grid.sizes[0]
        t = f.total_degree()
        if t >= s:
            continue
        res.checks += 1
        roots = grid.count_roots(f)
        if roots > t * s ** (f.nvars - 1):
            res.fail(f"{roots} roots exceed t*s^(m-1) = {t * s ** (f.nvars - 1)}", f, grid)
    return res


def _small_corpora(fields):
    fields = fields or [FieldSpec(2), FieldSpec(3)]
    for f in fields:
        yield from exhaustive_corpus(f)


def bi_implication(fields=None, trials: int = 0, seed: int = 0) -> SuiteResult:
    """``X_l - a`` divides ``f`` exactly when its hyperplane is all roots."""
    res = SuiteResult("bi-implication")
    for f in _small_corpora(fields):
        grid = Grid.full(f.field, f.nvars)
        for index, s in enumerate(grid.subsets, start=1):
            for a in s:
                res.checks += 1
                lhs = divisible_by_linear(f, index, a)
                rhs = hyperplane_is_roots(f, grid, index, a)
                if lhs != rhs:
                    res.fail(f"divisible={lhs} but hyperplane-all-roots={rhs} for X{index} - {a}", f, grid)
    return res


def necessary_conditions(fields=None, trials: int = 0, seed: int = 0) -> SuiteResult:
    """Linear-factor-free attainers of the top footprint value satisfy both conditions."""
    res = SuiteResult("procond")
    attaining = 0
    orders_by_m: dict = {}
    for h in _small_corpora(fields):
        if h.is_constant():
            continue
        grid = Grid.full(h.field, h.nvars)
        if any(hyperplane_is_roots(h, grid, i, a) for i, s in enumerate(grid.subsets, 1) for a in s):
            continue
        res.checks += 1
        omega, maxd = omega_and_max_monomials(h, grid)
        if grid.count_roots(h) != omega:
            continue
        attaining += 1
        cond1 = possible_leading_monomials(h) <= set(maxd)
        cond2 = not any(min(col) for col in zip(*maxd))
        if not (cond1 and cond2):
            res.fail(f"attains omega = {omega} with cond1={cond1}, cond2={cond2}", h, grid)
        # ordering-sampling witness, independent of the weight-vector test
        for order in orders_by_m.setdefault(h.nvars, builtin_orders(h.nvars)):
            if h.leading_monomial(order) not in maxd:
                res.fail(f"lm under {order} is not a max-D monomial", h, grid)
        try:
            check_necessary_conditions(h, grid)
        except TheoremViolation as exc:
            res.fail(str(exc), h, grid)
    res.notes["attaining"] = attaining
    return res


def invariant_attainers(fields=None, trials: int = 0, seed: int = 0) -> SuiteResult:
    """Ordering invariant attainers are trivial products, the same under every ordering."""
    res = SuiteResult("thetop-corolla")
    attaining = 0
    for f in _small_corpora(fields):
        dom = dominating_monomial(f)
        if dom is None:
            continue
        grid = Grid.full(f.field, f.nvars)
        res.checks += 1
        if grid.count_roots(f) != grid.footprint_value(dom):
            continue
        attaining += 1
        removed, h = extract_linear_factors(f, grid)
        if not h.is_constant():
            res.fail(f"attains D(M) = {grid.footprint_value(dom)} but residual {h} is not constant", f, grid)
            continue
        rebuilt = trivial_polynomial(grid, removed, h.coefficient((0,) * f.nvars))
        if rebuilt != f:
            res.fail(f"trivial product rebuilt as {rebuilt}", f, grid)
        reports = {repr(sorted(classify(f, grid, o).ordering_free_dict().items())) for o in builtin_orders(f.nvars)}
        if len(reports) != 1:
            res.fail("classification depends on the ordering", f, grid)
    res.notes["attaining"] = attaining
    return res


def footprint_inequalities(fields=None, trials: int = 0, seed: int = 0, max_size: int = 5, max_vars: int = 3) -> SuiteResult:
    """Strict monotonicity under division and the last-variable gap, exhaustively."""
    res = SuiteResult("lemlimlom")
    for m in range(1, max_vars + 1):
        for sizes in product(range(1, max_size + 1), repeat=m):
            monos = reduced_monomials(sizes)
            d = {mono: footprint_value(mono, sizes) for mono in monos}
            for mono in monos:
                if mono[-1] >= 1:
                    res.checks += 1
                    dp = footprint_value(mono[:-1], sizes[:-1])
                    if not d[mono] > sizes[-1] * dp:
                        res.fail(f"D{mono} = {d[mono]} <= {sizes[-1]}*D'{mono} on sizes {sizes}")
            for mono in monos:
                for n in monos:
                    if n != mono and divides(n, mono):
                        res.checks += 1
                        if not d[n] < d[mono]:
                            res.fail(f"D{n} = {d[n]} >= D{mono} = {d[mono]} on sizes {sizes}")
    return res


def split_equivalence(fields=None, trials: int = 500, seed: int = 0) -> SuiteResult:
    """``G * H`` attains on ``S`` iff ``H`` attains on ``T``, for random trivial ``G``."""
    res = SuiteResult("split-equivalence")
    fields = fields or [FieldSpec(3), FieldSpec(2, 2), FieldSpec(5)]
    rng = random.Random(seed)
    made = 0
    attempts = 0
    while made < trials and attempts < 50 * trials:
        attempts += 1
        f_ = rng.choice(fields)
        full = Grid.full(f_, 2)
        removed = [rng.sample(list(s), rng.randint(0, len(s) - 1)) for s in full.subsets]
        sub = full.subtract_subsets(removed)
        h = random_polynomial(rng, f_, sub.sizes, max_terms=4)
        if any(hyperplane_is_roots(h, sub, i, a) for i, s in enumerate(sub.subsets, 1) for a in s):
            continue
        made += 1
        g = trivial_polynomial(full, removed)
        f = g * h
        for order in builtin_orders(2):
            res.checks += 1
            f_att = full.count_roots(f) == full.footprint_value(f.leading_monomial(order))
            h_att = sub.count_roots(h) == sub.footprint_value(h.leading_monomial(order))
            if f_att != h_att:
                res.fail(f"attains over S = {f_att}, H attains over T = {h_att} under {order}", f, full)
            try:
                rec = split_check(f, full, order, removed)
            except TheoremViolation as exc:
                res.fail(str(exc), f, full)
                continue
            if rec.as_tuple() != (f_att, h_att):
                res.fail(f"split_check returned {rec.as_tuple()}", f, full)
    res.notes["products"] = made
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "footprint-bound": footprint_bound,
    "bi-implication": bi_implication,
    "split-equivalence": split_equivalence,
    "procond": necessary_conditions,
    "thetop-corolla": invariant_attainers,
    "lemlimlom": footprint_inequalities,
    "schwartz-zippel": schwartz_zippel,
    "field-axioms": field_axioms,
}

# descriptive aliases for the short suite names above
ALIASES = {
    "necessary-conditions": "procond",
    "invariant-attainers": "thetop-corolla",
    "footprint-inequalities": "lemlimlom",
}

# Default trial counts used when the caller passes none.
DEFAULT_TRIALS = {"footprint-bound": 10_000, "schwartz-zippel": 10_000, "split-equivalence": 500}


def run_suite(name: str, fields: Sequence[FieldSpec] | None = None, trials: int | None = None, seed: int = 0) -> SuiteResult:
    name = ALIASES.get(name, name)
    try:
        fn = SUITES[name]
    except KeyError:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    if trials is None:
        trials = DEFAULT_TRIALS.get(name, 0)
    res = fn(list(fields) if fields else None, trials=trials, seed=seed)
    res.notes["seed"] = seed
    res.notes["trials"] = trials
    return res

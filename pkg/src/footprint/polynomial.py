"""Sparse multivariate polynomials over a finite field."""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .errors import (
    ContextMismatch,
    DimensionMismatch,
    IndexOutOfRange,
    MixedFields,
    ZeroDivisor,
    ZeroPolynomial,
)
from .field import FieldElement, FieldSpec
from .ordering import (
    Monomial,
    MonomialOrder,
    divides,
    format_monomial,
    mono_div,
    mono_mul,
    monomial_gcd,  # noqa: F401  (re-exported)
    total_degree,
)

# Canonical printing order: grlex with X1 > X2 > ... , descending.
_PRINT_KIND = "grlex"


class Polynomial:
    """An immutable polynomial in ``nvars`` variables over ``field``.

    Terms map exponent tuples to raw coefficient encodings (see
    :mod:`footprint.field`); zero coefficients are never stored.
    """

    __slots__ = ("field", "nvars", "_terms", "_hash")

    def __init__(self, field: FieldSpec, nvars: int, terms: Mapping[Monomial, int] | None = None):
        self.field = field
        self.nvars = nvars
        clean = {}
        for m, c in (terms or {}).items():
            if len(m) != nvars:
                raise DimensionMismatch(f"monomial {m} does not have {nvars} exponents")
            if c:
                clean[tuple(m)] = c
        self._terms = clean
        self._hash = None

    # --- constructors -----------------------------------------------------

    @classmethod
    def _raw(cls, field, nvars, terms) -> Polynomial:
        # Trusted path: terms already canonical.
        obj = cls.__new__(cls)
        obj.field = field
        obj.nvars = nvars
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def from_terms(cls, field: FieldSpec, nvars: int, terms: Mapping[Monomial, object]) -> Polynomial:
        """Build from ``{exponents: coefficient}``; coefficients may be ints or elements."""
        raw = {}
        for m, c in terms.items():
            v = field.element(c).value
            if len(m) != nvars:
                raise DimensionMismatch(f"monomial {m} does not have {nvars} exponents")
            if any(e < 0 for e in m):
                raise ValueError(f"negative exponent in {m}")
            if v:
                raw[tuple(m)] = v
        return cls._raw(field, nvars, raw)

    @classmethod
    def zero(cls, field: FieldSpec, nvars: int) -> Polynomial:
        return cls._raw(field, nvars, {})

    @classmethod
    def constant(cls, field: FieldSpec, nvars: int, c) -> Polynomial:
        v = field.element(c).value
        return cls._raw(field, nvars, {(0,) * nvars: v} if v else {})

    @classmethod
    def monomial(cls, field: FieldSpec, exponents: Sequence[int], c=1) -> Polynomial:
        return cls.from_terms(field, len(exponents), {tuple(exponents): c})

    @classmethod
    def variable(cls, field: FieldSpec, nvars: int, index: int) -> Polynomial:
        """``X_index`` (1-based)."""
        if not 1 <= index <= nvars:
            raise IndexOutOfRange(f"variable X{index} outside 1..{nvars}")
        exps = [0] * nvars
        exps[index - 1] = 1
        return cls._raw(field, nvars, {tuple(exps): 1})

    @classmethod
    def parse(cls, text: str, field: FieldSpec, nvars: int | None = None) -> Polynomial:
        from .syntax import parse_polynomial

        return parse_polynomial(text, field, nvars)

    # --- accessors --------------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, FieldElement]:
        return {m: FieldElement(self.field, c) for m, c in self._terms.items()}

    @property
    def raw_terms(self) -> dict[Monomial, int]:
        """Copy of the encoded term map."""
        return dict(self._terms)

    @property
    def support(self) -> frozenset[Monomial]:
        return frozenset(self._terms)

    def coefficient(self, m: Monomial) -> FieldElement:
        return FieldElement(self.field, self._terms.get(tuple(m), 0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def __len__(self):
        return len(self._terms)

    def degree_in(self, index: int) -> int:
        """Degree in ``X_index`` (1-based); -1 for the zero polynomial."""
        if not 1 <= index <= self.nvars:
            raise IndexOutOfRange(f"variable X{index} outside 1..{self.nvars}")
        return max((m[index - 1] for m in self._terms), default=-1)

    def total_degree(self) -> int:
        return max((total_degree(m) for m in self._terms), default=-1)

    def is_reduced(self, sizes: Sequence[int]) -> bool:
        """All exponents of ``X_l`` are below ``sizes[l-1]``."""
        return all(e < s for m in self._terms for e, s in zip(m, sizes))

    # --- arithmetic -------------------------------------------------------

    def _check(self, other: Polynomial):
        if other.nvars != self.nvars:
            raise ContextMismatch(f"{self.nvars} vs {other.nvars} variables")
        if other.field is not self.field and other.field != self.field:
            raise ContextMismatch(f"polynomials over {self.field} and {other.field}")

    def _lift(self, other) -> Polynomial | None:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, FieldElement):
            if other.spec != self.field:
                raise MixedFields(f"element of {other.spec} used with polynomial over {self.field}")
            return Polynomial.constant(self.field, self.nvars, other)
        if isinstance(other, int) and not isinstance(other, bool):
            return Polynomial.constant(self.field, self.nvars, other)
        return None

    def __add__(self, other):
        g = self._lift(other)
        if g is None:
            return NotImplemented
        add = self.field.add_int
        out = dict(self._terms)
        for m, c in g._terms.items():
            v = add(out.get(m, 0), c)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(self.field, self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        neg = self.field.neg_int
        return Polynomial._raw(self.field, self.nvars, {m: neg(c) for m, c in self._terms.items()})

    def __sub__(self, other):
        g = self._lift(other)
        if g is None:
            return NotImplemented
        return self + (-g)

    def __rsub__(self, other):
        g = self._lift(other)
        if g is None:
            return NotImplemented
        return g + (-self)

    def __mul__(self, other):
        g = self._lift(other)
        if g is None:
            return NotImplemented
        add, mul = self.field.add_int, self.field.mul_int
        out: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in g._terms.items():
                m = mono_mul(m1, m2)
                out[m] = add(out.get(m, 0), mul(c1, c2))
        return Polynomial._raw(self.field, self.nvars, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, c) -> Polynomial:
        v = self.field.element(c).value
        mul = self.field.mul_int
        if not v:
            return Polynomial.zero(self.field, self.nvars)
        return Polynomial._raw(self.field, self.nvars, {m: mul(x, v) for m, x in self._terms.items()})

    def mul_term(self, m: Monomial, c: int) -> Polynomial:
        """Multiply by the single term ``c * X^m`` (``c`` encoded)."""
        mul = self.field.mul_int
        return Polynomial._raw(
            self.field, self.nvars, {mono_mul(m, k): mul(v, c) for k, v in self._terms.items()}
        )

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        result = Polynomial.constant(self.field, self.nvars, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.field == other.field and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.nvars, frozenset(self._terms.items())))
        return self._hash

    # --- evaluation -------------------------------------------------------

    def evaluate(self, point: Sequence) -> FieldElement:
        """Value at ``point``; ``0**0`` counts as 1."""
        if len(point) != self.nvars:
            raise ContextMismatch(f"point has {len(point)} coordinates, expected {self.nvars}")
        coords = [self.field.element(a).value for a in point]
        return FieldElement(self.field, self.evaluate_int(coords))

    def evaluate_int(self, coords: Sequence[int]) -> int:
        f = self.field
        add, mul, pw = f.add_int, f.mul_int, f.pow_int
        total = 0
        for m, c in self._terms.items():
            v = c
            for a, e in zip(coords, m):
                if e:
                    v = mul(v, pw(a, e))
                    if not v:
                        break
            total = add(total, v)
        return total

    def substitute_variable(self, index: int, value) -> Polynomial:
        """Set ``X_index := value``; the result keeps ``nvars`` with that exponent zero."""
        if not 1 <= index <= self.nvars:
            raise IndexOutOfRange(f"variable X{index} outside 1..{self.nvars}")
        a = self.field.element(value).value
        add, mul, pw = self.field.add_int, self.field.mul_int, self.field.pow_int
        i = index - 1
        out: dict[Monomial, int] = {}
        for m, c in self._terms.items():
            v = mul(c, pw(a, m[i]))
            if v:
                key = m[:i] + (0,) + m[i + 1 :]
                out[key] = add(out.get(key, 0), v)
        return Polynomial._raw(self.field, self.nvars, {m: c for m, c in out.items() if c})

    # --- orderings --------------------------------------------------------

    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        if not self._terms:
            raise ZeroPolynomial("the zero polynomial has no leading monomial")
        return max(self._terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder) -> FieldElement:
        return FieldElement(self.field, self._terms[self.leading_monomial(order)])

    def monic(self, order: MonomialOrder) -> Polynomial:
        return self.scale(self.leading_coefficient(order).inverse())

    # --- text -------------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        order = MonomialOrder.default(self.nvars, _PRINT_KIND)
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for m, c in self.sorted_terms():
            coef = self.field.format_int(c)
            if "+" in coef:
                coef = f"({coef})"
            if not any(m):
                out.append(coef)
            elif c == 1:
                out.append(format_monomial(m))
            else:
                out.append(f"{coef}*{format_monomial(m)}")
        return " + ".join(out)

    def __repr__(self):
        return f"Polynomial({self}, F={self.field}, m={self.nvars})"


def leading_monomial(f: Polynomial, order: MonomialOrder) -> Monomial:
    return f.leading_monomial(order)


def evaluate(f: Polynomial, point: Sequence) -> FieldElement:
    return f.evaluate(point)


def substitute_variable(f: Polynomial, index: int, value) -> Polynomial:
    return f.substitute_variable(index, value)


def divide(
    f: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder
) -> tuple[list[Polynomial], Polynomial]:
    """Multivariate division: ``f = sum(q_i * d_i) + r``.

    Divisors are tried in list order against the current leading term; a
    term no divisor's leading monomial divides moves to the remainder.
    """
    divisors = list(divisors)
    for d in divisors:
        f._check(d)
        if d.is_zero():
            raise ZeroDivisor("cannot divide by the zero polynomial")
    field = f.field
    add, sub, mul, inv = field.add_int, field.sub_int, field.mul_int, field.inv_int
    leads = []
    for d in divisors:
        lm = d.leading_monomial(order)
        leads.append((lm, inv(d._terms[lm])))
    quotients: list[dict[Monomial, int]] = [{} for _ in divisors]
    remainder: dict[Monomial, int] = {}
    p = dict(f._terms)
    key = order.key
    while p:
        lm = max(p, key=key)
        lc = p[lm]
        for i, (dlm, dinv) in enumerate(leads):
            if divides(dlm, lm):
                qm = mono_div(lm, dlm)
                qc = mul(lc, dinv)
                quotients[i][qm] = add(quotients[i].get(qm, 0), qc)
                for m, c in divisors[i]._terms.items():
                    t = mono_mul(m, qm)
                    v = sub(p.get(t, 0), mul(qc, c))
                    if v:
                        p[t] = v
                    else:
                        p.pop(t, None)
                break
        else:
            remainder[lm] = lc
            del p[lm]
    qs = [Polynomial._raw(field, f.nvars, {m: c for m, c in q.items() if c}) for q in quotients]
    return qs, Polynomial._raw(field, f.nvars, remainder)


def reduce_mod_grid(f: Polynomial, grid, order: MonomialOrder | None = None) -> Polynomial:
    """Remainder of ``f`` modulo the grid's vanishing polynomials.

    The result has ``deg_{X_l} < s_l`` and the same values on every grid point.
    """
    if grid.nvars != f.nvars:
        raise ContextMismatch(f"grid has {grid.nvars} variables, polynomial {f.nvars}")
    if grid.field != f.field:
        raise ContextMismatch(f"grid over {grid.field}, polynomial over {f.field}")
    if f.is_reduced(grid.sizes):
        return f
    order = order or MonomialOrder.default(f.nvars)
    _, r = divide(f, grid.vanishing_polynomials(), order)
    return r


def exact_quotient(f: Polynomial, divisor: Polynomial, order: MonomialOrder | None = None) -> Polynomial:
    """``f / divisor``, asserting the remainder vanishes."""
    order = order or MonomialOrder.default(f.nvars)
    (q,), r = divide(f, [divisor], order)
    if not r.is_zero():
        raise ArithmeticError(f"{divisor} does not divide {f} (remainder {r})")
    return q


def product(polys: Iterable[Polynomial], field: FieldSpec, nvars: int) -> Polynomial:
    out = Polynomial.constant(field, nvars, 1)
    for p in polys:
        out = out * p
    return out

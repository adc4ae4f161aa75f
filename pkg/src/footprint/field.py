"""Exact arithmetic in prime fields and their extensions.

An element of ``F_{p^k} = F_p[w]/(modulus)`` is stored as a single integer
``sum(c_i * p**i)`` built from its coefficient vector ``(c_0, ..., c_{k-1})``
in the basis ``1, w, ..., w^{k-1}``.  Ascending integer order is therefore the
lexicographic order on coefficient vectors read from the highest power of
``w`` down, which is the documented enumeration order.

The ``*_int`` methods on :class:`FieldSpec` work on these raw integers and are
used by the polynomial and grid code on hot paths; :class:`FieldElement` is the
checked, operator-friendly wrapper for everything else.
"""

from __future__ import annotations

import builtins

import os
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    DivisionByZero,
    FieldTooLarge,
    InvalidFieldSpec,
    InvalidSubfield,
    MixedFields,
)

DEFAULT_FIELD_CAP = 2**20
FIELD_CAP_ENV = "FOOTPRINT_FIELD_CAP"

# Dense addition / numpy tables are only built below these orders.
_ADD_TABLE_LIMIT = 512
_NUMPY_TABLE_LIMIT = 1024


def field_cap() -> int:
    """Largest admissible field order; overridable through ``FOOTPRINT_FIELD_CAP``."""
    raw = os.environ.get(FIELD_CAP_ENV)
    if raw is None:
        return DEFAULT_FIELD_CAP
    try:
        return int(raw)
    except ValueError:
        raise InvalidFieldSpec(f"{FIELD_CAP_ENV} must be an integer, got {raw!r}") from None


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q = p**d`` with ``p`` prime, or raise."""
    if q < 2:
        raise InvalidFieldSpec(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            d, r = 0, q
            while r % p == 0:
                r //= p
                d += 1
            if r != 1:
                raise InvalidFieldSpec(f"{q} is not a prime power")
            return p, d
    raise AssertionError("unreachable")


# --- dense polynomials over F_p, little-endian coefficient lists -------------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod(a: list[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``m`` over F_p."""
    a = _trim([c % p for c in a])
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        lead = a[-1]
        shift = len(a) - 1 - dm
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - lead * c) % p
        _trim(a)
    return a


def _is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..k//2."""
    k = len(modulus) - 1
    if k == 1:
        return True
    for d in range(1, k // 2 + 1):
        for low in product(range(p), repeat=d):
            if not _polymod(list(modulus), list(low) + [1], p):
                return False
    return True


def lex_smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """The monic irreducible of degree ``k`` with the smallest integer encoding.

    Candidates are ranked like field elements: the coefficient of ``w^{k-1}``
    is most significant, the constant term least.
    """
    if k == 1:
        return (0, 1)
    for code in range(p**k):
        low = [(code // p**i) % p for i in range(k)]
        if low[0] == 0:
            continue  # divisible by w
        modulus = tuple(low) + (1,)
        if _is_irreducible(modulus, p):
            return modulus
    raise InvalidFieldSpec(f"no irreducible polynomial of degree {k} over F_{p}")


@dataclass(frozen=True)
class FieldSpec:
    """The field ``F_p[w]/(modulus)`` of order ``p**k``.

    ``modulus`` lists ``k + 1`` coefficients, constant term first.  When it is
    omitted the lexicographically smallest monic irreducible is used, so the
    representation is reproducible from ``(p, k)`` alone.
    """

    characteristic: int
    extension_degree: int = 1
    modulus: tuple[int, ...] | None = None

    def __post_init__(self):
        p, k = self.characteristic, self.extension_degree
        if not isinstance(p, int) or not is_prime(p):
            raise InvalidFieldSpec(f"characteristic {p!r} is not prime")
        if not isinstance(k, int) or k < 1:
            raise InvalidFieldSpec(f"extension degree {k!r} must be a positive integer")
        cap = field_cap()
        if p**k > cap:
            raise FieldTooLarge(f"field order {p}^{k} = {p**k} exceeds the cap {cap}")
        if self.modulus is None:
            object.__setattr__(self, "modulus", lex_smallest_irreducible(p, k))
        else:
            modulus = tuple(int(c) for c in self.modulus)
            object.__setattr__(self, "modulus", modulus)
            if len(modulus) != k + 1:
                raise InvalidFieldSpec(f"modulus must have {k + 1} coefficients, got {len(modulus)}")
            if any(not 0 <= c < p for c in modulus):
                raise InvalidFieldSpec(f"modulus coefficients must lie in [0, {p})")
            if modulus[-1] != 1:
                raise InvalidFieldSpec("modulus must be monic")
            if not _is_irreducible(modulus, p):
                raise InvalidFieldSpec(f"modulus {modulus} is reducible over F_{p}")

    # --- construction -----------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """Parse ``p``, ``p^k`` or ``p^k/m0,m1,...,mk``."""
        raw = text.strip()
        try:
            body, _, mod = raw.partition("/")
            base, _, exp = body.partition("^")
            p = int(base)
            k = int(exp) if exp else 1
            modulus = tuple(int(c) for c in mod.split(",")) if mod else None
        except ValueError:
            raise InvalidFieldSpec(f"cannot parse field spec {text!r}; expected p, p^k or p^k/m0,...,mk") from None
        return cls(p, k, modulus)

    @classmethod
    def of_order(cls, q: int) -> FieldSpec:
        p, k = prime_power(q)
        return cls(p, k)

    def __str__(self):
        p, k = self.characteristic, self.extension_degree
        if k == 1:
            return str(p)
        return f"{p}^{k}/" + ",".join(str(c) for c in self.modulus)

    @property
    def order(self) -> int:
        return self.characteristic**self.extension_degree

    # --- elements ---------------------------------------------------------

    def __call__(self, value) -> FieldElement:
        return self.element(value)

    def element(self, value) -> FieldElement:
        """Coerce an int, coefficient sequence, text or element into this field."""
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise MixedFields(f"element of {value.spec} used in {self}")
            return value
        if isinstance(value, bool):
            raise TypeError("booleans are not field elements")
        if isinstance(value, int):
            return FieldElement(self, value % self.characteristic)
        if isinstance(value, str):
            from .syntax import parse_element

            return FieldElement(self, parse_element(value, self))
        coeffs = list(value)
        if len(coeffs) > self.extension_degree:
            raise InvalidFieldSpec(f"too many coefficients for {self}")
        return FieldElement(self, self.from_digits(coeffs))

    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def generator(self) -> FieldElement:
        """The class of ``w``; prime fields have no generator symbol."""
        if self.extension_degree == 1:
            raise InvalidFieldSpec(f"F_{self.characteristic} is a prime field; 'w' is undefined")
        return FieldElement(self, self.characteristic)

    def elements(self) -> list[FieldElement]:
        """All elements in ascending encoding order."""
        return [FieldElement(self, v) for v in range(self.order)]

    def to_digits(self, v: int) -> list[int]:
        p = self.characteristic
        out = []
        for _ in range(self.extension_degree):
            out.append(v % p)
            v //= p
        return out

    def from_digits(self, digits: Iterable[int]) -> int:
        p = self.characteristic
        v, scale = 0, 1
        for c in digits:
            v += (int(c) % p) * scale
            scale *= p
        return v

    # --- raw integer arithmetic --------------------------------------------

    @cached_property
    def _add_table(self):
        q = self.order
        if self.characteristic == 2 or self.extension_degree == 1 or q > _ADD_TABLE_LIMIT:
            return None
        return [[self._add_digits(a, b) for b in range(q)] for a in range(q)]

    def _add_digits(self, a: int, b: int) -> int:
        p = self.characteristic
        v, scale = 0, 1
        while a or b:
            v += ((a % p + b % p) % p) * scale
            a //= p
            b //= p
            scale *= p
        return v

    def add_int(self, a: int, b: int) -> int:
        p = self.characteristic
        if p == 2:
            return a ^ b
        if self.extension_degree == 1:
            return (a + b) % p
        table = self._add_table
        if table is not None:
            return table[a][b]
        return self._add_digits(a, b)

    @cached_property
    def _neg_table(self) -> list[int]:
        return [self.from_digits(-c for c in self.to_digits(v)) for v in range(self.order)]

    def neg_int(self, a: int) -> int:
        p = self.characteristic
        if p == 2:
            return a
        if self.extension_degree == 1:
            return (-a) % p
        return self._neg_table[a]

    def sub_int(self, a: int, b: int) -> int:
        return self.add_int(a, self.neg_int(b))

    def _mul_slow(self, a: int, b: int) -> int:
        p = self.characteristic
        da, db = self.to_digits(a), self.to_digits(b)
        prod = [0] * (len(da) + len(db) - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        return self.from_digits(_polymod(prod, self.modulus, p))

    @cached_property
    def _log_tables(self) -> tuple[list[int], list[int]]:
        """(exp, log) tables for a primitive element, built on first use."""
        q = self.order
        n = q - 1
        factors = _prime_factors(n) if n > 1 else []

        def slow_pow(g, e):
            r = 1
            while e:
                if e & 1:
                    r = self._mul_slow(r, g)
                g = self._mul_slow(g, g)
                e >>= 1
            return r

        gen = None
        for cand in range(1, q):
            if all(slow_pow(cand, n // r) != 1 for r in factors):
                gen = cand
                break
        assert gen is not None
        exp = [0] * n
        log = [0] * q
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._mul_slow(x, gen)
        return exp, log

    def mul_int(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.extension_degree == 1:
            return a * b % self.characteristic
        exp, log = self._log_tables
        return exp[(log[a] + log[b]) % (self.order - 1)]

    def inv_int(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in {self}")
        if self.extension_degree == 1:
            return builtins.pow(a, -1, self.characteristic)
        exp, log = self._log_tables
        return exp[(-log[a]) % (self.order - 1)]

    def pow_int(self, a: int, e: int) -> int:
        """``a**e``; ``0**0`` is 1 by convention."""
        if e < 0:
            return self.pow_int(self.inv_int(a), -e)
        if e == 0:
            return 1
        if a == 0:
            return 0
        if self.extension_degree == 1:
            return builtins.pow(a, e, self.characteristic)
        exp, log = self._log_tables
        return exp[log[a] * e % (self.order - 1)]

    # --- vectorised tables ------------------------------------------------

    @cached_property
    def numpy_tables(self) -> tuple[np.ndarray, np.ndarray] | None:
        """Dense ``(add, mul)`` lookup tables for small fields, else ``None``."""
        q = self.order
        if q > _NUMPY_TABLE_LIMIT:
            return None
        add = np.array([[self.add_int(a, b) for b in range(q)] for a in range(q)], dtype=np.int32)
        mul = np.array([[self.mul_int(a, b) for b in range(q)] for a in range(q)], dtype=np.int32)
        return add, mul

    # --- subfield maps ----------------------------------------------------

    def _check_subfield(self, sub_degree: int) -> int:
        if sub_degree < 1 or self.extension_degree % sub_degree:
            raise InvalidSubfield(f"F_{self.characteristic}^{sub_degree} is not a subfield of {self}")
        return self.characteristic**sub_degree

    def trace_int(self, a: int, sub_degree: int) -> int:
        q_sub = self._check_subfield(sub_degree)
        total, x = 0, a
        for _ in range(self.extension_degree // sub_degree):
            total = self.add_int(total, x)
            x = self.pow_int(x, q_sub)
        return total

    def norm_int(self, a: int, sub_degree: int) -> int:
        q_sub = self._check_subfield(sub_degree)
        total, x = 1, a
        for _ in range(self.extension_degree // sub_degree):
            total = self.mul_int(total, x)
            x = self.pow_int(x, q_sub)
        return total

    def format_int(self, v: int) -> str:
        """Text form: an integer in prime fields, a polynomial in ``w`` otherwise."""
        if self.extension_degree == 1:
            return str(v)
        parts = []
        for i, c in reversed(list(enumerate(self.to_digits(v)))):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                base = "w" if i == 1 else f"w^{i}"
                parts.append(base if c == 1 else f"{c}*{base}")
        return "+".join(parts) if parts else "0"


class FieldElement:
    """An immutable element of a :class:`FieldSpec`."""

    __slots__ = ("_spec", "_value")

    def __init__(self, spec: FieldSpec, value: int):
        if not 0 <= value < spec.order:
            raise InvalidFieldSpec(f"encoding {value} out of range for {spec}")
        object.__setattr__(self, "_spec", spec)
        object.__setattr__(self, "_value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    @property
    def spec(self) -> FieldSpec:
        return self._spec

    @property
    def value(self) -> int:
        """The integer encoding."""
        return self._value

    @property
    def coefficients(self) -> tuple[int, ...]:
        """Coefficients in the basis ``1, w, ..., w^{k-1}``."""
        return tuple(self._spec.to_digits(self._value))

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other._spec is not self._spec and other._spec != self._spec:
                raise MixedFields(f"cannot combine elements of {self._spec} and {other._spec}")
            return other._value
        if isinstance(other, int) and not isinstance(other, bool):
            return other % self._spec.characteristic
        return NotImplemented

    def _wrap(self, v: int) -> FieldElement:
        return FieldElement(self._spec, v)

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return self._wrap(self._spec.add_int(self._value, b))

    __radd__ = __add__

    def __neg__(self):
        return self._wrap(self._spec.neg_int(self._value))

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return self._wrap(self._spec.sub_int(self._value, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return self._wrap(self._spec.sub_int(b, self._value))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return self._wrap(self._spec.mul_int(self._value, b))

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        return self._wrap(self._spec.inv_int(self._value))

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return self._wrap(self._spec.mul_int(self._value, self._spec.inv_int(b)))

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return self._wrap(self._spec.mul_int(b, self._spec.inv_int(self._value)))

    def __pow__(self, e: int):
        return self._wrap(self._spec.pow_int(self._value, e))

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self._value == other._value and self._spec == other._spec

    def __hash__(self):
        return hash((self._spec, self._value))

    def __lt__(self, other):
        # Enumeration order, so sets of elements sort deterministically.
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self._value < other._value

    def __bool__(self):
        return self._value != 0

    def is_zero(self) -> bool:
        return self._value == 0

    def trace(self, sub_degree: int) -> FieldElement:
        return trace_to_subfield(self, sub_degree)

    def norm(self, sub_degree: int) -> FieldElement:
        return norm_to_subfield(self, sub_degree)

    def __str__(self):
        return self._spec.format_int(self._value)

    def __repr__(self):
        return f"FieldElement({self}, F={self._spec})"


def _same(a: FieldElement, b: FieldElement) -> FieldSpec:
    if a.spec != b.spec:
        raise MixedFields(f"cannot combine elements of {a.spec} and {b.spec}")
    return a.spec


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return FieldElement(_same(a, b), a.spec.add_int(a.value, b.value))


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return FieldElement(_same(a, b), a.spec.mul_int(a.value, b.value))


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def power(a: FieldElement, e: int) -> FieldElement:
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    return a**e


pow = power  # shadows the builtin in this module; internal code calls builtins.pow


def trace_to_subfield(a: FieldElement, sub_degree: int) -> FieldElement:
    """Relative trace ``sum a^{q_sub^i}`` down to ``F_{p^sub_degree}``."""
    spec = a.spec
    t = spec.trace_int(a.value, sub_degree)
    assert spec.pow_int(t, spec.characteristic**sub_degree) == t, "trace left the subfield"
    return FieldElement(spec, t)


def norm_to_subfield(a: FieldElement, sub_degree: int) -> FieldElement:
    """Relative norm (product of the conjugates) down to ``F_{p^sub_degree}``."""
    spec = a.spec
    n = spec.norm_int(a.value, sub_degree)
    assert spec.pow_int(n, spec.characteristic**sub_degree) == n, "norm left the subfield"
    return FieldElement(spec, n)


def enumerate_elements(spec: FieldSpec) -> list[FieldElement]:
    return spec.elements()


def iter_subfield(spec: FieldSpec, sub_degree: int) -> Iterator[FieldElement]:
    """Elements fixed by ``x -> x^{p^sub_degree}``."""
    q_sub = spec._check_subfield(sub_degree)
    for v in range(spec.order):
        if spec.pow_int(v, q_sub) == v:
            yield FieldElement(spec, v)

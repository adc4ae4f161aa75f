"""Monomials as exponent tuples, and monomial orderings on them.

Variables are numbered from 1, matching the ``X1..Xm`` surface syntax; the
exponent of ``X_l`` lives at tuple index ``l - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Sequence

from .errors import DimensionMismatch, EmptyList, ParseError

Monomial = tuple[int, ...]

KINDS = ("lex", "grlex", "grevlex", "weighted")


def one(nvars: int) -> Monomial:
    return (0,) * nvars


def total_degree(m: Monomial) -> int:
    return sum(m)


def divides(a: Monomial, b: Monomial) -> bool:
    """True when ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """``a / b``; caller guarantees ``b`` divides ``a``."""
    return tuple(x - y for x, y in zip(a, b))


def monomial_gcd(ms: Sequence[Monomial]) -> Monomial:
    """Componentwise minimum of the exponent vectors."""
    ms = list(ms)
    if not ms:
        raise EmptyList("gcd of an empty list of monomials")
    m = len(ms[0])
    if any(len(x) != m for x in ms):
        raise DimensionMismatch("monomials of different lengths")
    return tuple(min(col) for col in zip(*ms))


def format_monomial(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m, start=1):
        if e == 1:
            parts.append(f"X{i}")
        elif e > 1:
            parts.append(f"X{i}^{e}")
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial ordering on ``nvars`` variables.

    ``priority`` lists variable numbers from most to least significant, so
    ``MonomialOrder("lex", (2, 1))`` is lex with ``X2 > X1``.  Weighted orders
    compare the weighted degree with exact rationals and break ties by lex on
    ``priority``.
    """

    kind: str
    priority: tuple[int, ...]
    weights: tuple[Fraction, ...] | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown ordering kind {self.kind!r}; choose from {KINDS}")
        priority = tuple(int(v) for v in self.priority)
        object.__setattr__(self, "priority", priority)
        if sorted(priority) != list(range(1, len(priority) + 1)):
            raise ValueError(f"priority {priority} is not a permutation of 1..{len(priority)}")
        if self.kind == "weighted":
            if self.weights is None or len(self.weights) != len(priority):
                raise ValueError("weighted orders need one weight per variable")
            weights = tuple(Fraction(w) for w in self.weights)
            if any(w <= 0 for w in weights):
                raise ValueError("weights must be strictly positive")
            object.__setattr__(self, "weights", weights)
        elif self.weights is not None:
            raise ValueError(f"{self.kind} orders take no weights")

    @classmethod
    def lex(cls, *priority: int) -> MonomialOrder:
        return cls("lex", priority)

    @classmethod
    def grlex(cls, *priority: int) -> MonomialOrder:
        return cls("grlex", priority)

    @classmethod
    def grevlex(cls, *priority: int) -> MonomialOrder:
        return cls("grevlex", priority)

    @classmethod
    def weighted(cls, weights: Sequence, *priority: int) -> MonomialOrder:
        return cls("weighted", priority, tuple(weights))

    @classmethod
    def default(cls, nvars: int, kind: str = "lex") -> MonomialOrder:
        return cls(kind, tuple(range(1, nvars + 1)))

    @property
    def nvars(self) -> int:
        return len(self.priority)

    def key(self, m: Monomial):
        """Sort key: ``a < b`` in this order iff ``key(a) < key(b)``."""
        if len(m) != len(self.priority):
            raise DimensionMismatch(f"monomial {m} has {len(m)} variables, order expects {self.nvars}")
        lexkey = tuple(m[v - 1] for v in self.priority)
        if self.kind == "lex":
            return lexkey
        if self.kind == "grlex":
            return (sum(m), lexkey)
        if self.kind == "grevlex":
            return (sum(m), tuple(-m[v - 1] for v in reversed(self.priority)))
        return (sum(w * e for w, e in zip(self.weights, m)), lexkey)

    def __str__(self):
        names = ",".join(f"X{v}" for v in self.priority)
        if self.kind == "weighted":
            return "weighted:" + ",".join(str(w) for w in self.weights) + f";lex:{names}"
        return f"{self.kind}:{names}"

    @classmethod
    def parse(cls, text: str, nvars: int | None = None) -> MonomialOrder:
        """Parse ``lex:X2,X1``, ``grlex``, ``grevlex:X1,X2`` or ``weighted:3,1;lex:X1,X2``.

        A missing variable list means ``X1 > X2 > ... > Xm`` and needs ``nvars``.
        """
        raw = text.strip()
        weights = None
        if raw.startswith("weighted"):
            head, _, tail = raw.partition(";")
            _, _, wtext = head.partition(":")
            try:
                weights = tuple(Fraction(w.strip()) for w in wtext.split(",") if w.strip())
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"bad weights in order spec {text!r}") from None
            kind = "weighted"
            rest = tail or "lex"
            if not rest.startswith("lex"):
                raise ParseError(f"weighted orders break ties with lex, got {rest!r}")
            _, _, vars_text = rest.partition(":")
            if not vars_text and nvars is None:
                nvars = len(weights)
        else:
            kind, _, vars_text = raw.partition(":")
            kind = kind.strip()
        if kind not in KINDS:
            raise ParseError(f"unknown ordering kind {kind!r} in {text!r}")
        if vars_text.strip():
            priority = []
            for item in vars_text.split(","):
                item = item.strip()
                if len(item) < 2 or item[0] not in "Xx" or not item[1:].isdigit():
                    raise ParseError(f"bad variable {item!r} in order spec {text!r}")
                priority.append(int(item[1:]))
        else:
            if nvars is None:
                raise ParseError(f"order spec {text!r} needs an explicit variable list")
            priority = list(range(1, nvars + 1))
        if nvars is not None and len(priority) != nvars:
            raise ParseError(f"order spec {text!r} names {len(priority)} variables, expected {nvars}")
        try:
            return cls(kind, tuple(priority), weights)
        except ValueError as exc:
            raise ParseError(str(exc)) from None


def compare(a: Monomial, b: Monomial, order: MonomialOrder) -> int:
    """-1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    if len(a) != len(b):
        raise DimensionMismatch("monomials of different lengths")
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


def builtin_orders(nvars: int) -> list[MonomialOrder]:
    """lex, grlex and grevlex for every variable priority."""
    out = []
    for kind in ("lex", "grlex", "grevlex"):
        for perm in permutations(range(1, nvars + 1)):
            out.append(MonomialOrder(kind, perm))
    return out

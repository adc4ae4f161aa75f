"""Exact feasibility of small systems of linear inequalities.

Fourier-Motzkin elimination with integer coefficients (every combination of
integer rows is again integer after clearing by the gcd), so the answer is a
proof either way and no floating point is involved.  Dimensions here are the
number of polynomial variables, which keeps the per-step blow-up small.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd
from typing import Sequence

# A row (a, b) encodes a . x <= b.
Row = tuple[tuple[int, ...], int]


def _normalize(a: Sequence[int], b: int) -> Row:
    g = 0
    for v in a:
        g = gcd(g, v)
    g = gcd(g, b)
    if g > 1:
        return tuple(v // g for v in a), b // g
    return tuple(a), b


def is_feasible(rows: Sequence[Row], nvars: int) -> bool:
    """Whether some rational ``x`` satisfies every integer row ``a . x <= b``."""
    system = {_normalize(a, b) for a, b in rows}
    for j in range(nvars):
        pos, neg, rest = [], [], set()
        for a, b in system:
            if a[j] > 0:
                pos.append((a, b))
            elif a[j] < 0:
                neg.append((a, b))
            elif any(a):
                rest.add((a, b))
            elif b < 0:
                return False
        for ap, bp in pos:
            lp = ap[j]
            for an, bn in neg:
                ln = -an[j]
                a = tuple(ln * x + lp * y for x, y in zip(ap, an))
                b = ln * bp + lp * bn
                if not any(a):
                    if b < 0:
                        return False
                    continue
                rest.add(_normalize(a, b))
        system = rest
    return all(b >= 0 for _, b in system)


@lru_cache(maxsize=65536)
def _separator_cached(target: tuple[int, ...], others: frozenset) -> bool:
    m = len(target)
    rows: list[Row] = []
    for i in range(m):
        a = [0] * m
        a[i] = -1
        rows.append((tuple(a), -1))
    for n in others:
        diff = tuple(x - y for x, y in zip(n, target))
        if all(d <= 0 for d in diff):
            continue  # n strictly divides target: any positive weight separates
        if all(d >= 0 for d in diff):
            return False  # target strictly divides n
        rows.append((diff, -1))
    return is_feasible(rows, m)


def strictly_positive_separator_exists(target: Sequence[int], others: Sequence[Sequence[int]]) -> bool:
    """Is there ``w > 0`` with ``w . target > w . n`` for every ``n`` in ``others``?

    The strict homogeneous system is scale invariant, so it is equivalent to
    ``w_i >= 1`` and ``w . (n - target) <= -1``.
    """
    target = tuple(target)
    others = frozenset(tuple(n) for n in others)
    if target in others:
        return False
    return _separator_cached(target, others)

"""Closed-form complexities, keyed by operation name.

This is the only place the bounds are written down; every comparison in
the harness and the acceptance tests looks them up here.
"""
from __future__ import annotations

from typing import Callable, NamedTuple


class Formula(NamedTuple):
    expression: str
    value: Callable[[int, int], int]
    unary: bool = False


FORMULAS = {
    "union": Formula("mn+m+n+1", lambda m, n: m * n + m + n + 1),
    "symdiff": Formula("mn+m+n+1", lambda m, n: m * n + m + n + 1),
    "difference": Formula("mn+m", lambda m, n: m * n + m),
    "intersection": Formula("mn", lambda m, n: m * n),
    "product": Formula("m*2^n+2^(n-1)", lambda m, n: m * 2**n + 2 ** (n - 1)),
    "star": Formula("2^(n-1)+2^(n-2)", lambda m, n: 2 ** (n - 1) + 2 ** (n - 2), True),
    "reverse": Formula("2^n", lambda m, n: 2**n, True),
    "semigroup": Formula("n^n", lambda m, n: n**n, True),
    "atom-count": Formula("2^n", lambda m, n: 2**n, True),
    "same-alphabet-union": Formula("mn", lambda m, n: m * n),
    "same-alphabet-symdiff": Formula("mn", lambda m, n: m * n),
    "same-alphabet-difference": Formula("mn", lambda m, n: m * n),
    "same-alphabet-intersection": Formula("mn", lambda m, n: m * n),
    "same-alphabet-product": Formula("(m-1)*2^n+2^(n-1)", lambda m, n: (m - 1) * 2**n + 2 ** (n - 1)),
}


def formula(op: str, m, n: int) -> int:
    f = FORMULAS[op]
    return f.value(m, n)

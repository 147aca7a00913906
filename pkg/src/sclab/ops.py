"""Boolean operations, product, star and reversal on languages whose alphabets may differ.

Every operation ends in :func:`sclab.automata.canonical`, which restricts
the result to its own alphabet before minimizing.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .automata import Dfa, Nfa, canonical, complete, subset_construction
from .errors import InvariantViolation


class BoolOp(enum.Enum):
    UNION = "union"
    SYMDIFF = "symdiff"
    DIFFERENCE = "difference"
    INTERSECTION = "intersection"

    def __call__(self, x: bool, y: bool) -> bool:
        if self is BoolOp.UNION:
            return x or y
        if self is BoolOp.SYMDIFF:
            return x != y
        if self is BoolOp.DIFFERENCE:
            return x and not y
        return x and y


class ProductStateLabel(NamedTuple):
    """A state of the direct product; ``None`` marks the added empty state on that side."""

    left: Optional[int]
    right: Optional[int]

    def __str__(self):
        l = "∅'" if self.left is None else f"{self.left}'"
        r = "∅" if self.right is None else str(self.right)
        return f"({l},{r})"


class Product(NamedTuple):
    dfa: Dfa
    labels: tuple


def direct_product(d1: Dfa, d2: Dfa, op: BoolOp) -> Product:
    """Reachable part of the direct product over the union alphabet.

    Each side is completed first; a side already complete over the union
    alphabet gets no empty state, so ``None`` labels appear only for sides
    that needed one.
    """
    op = BoolOp(op)
    alphabet = d1.alphabet.union(d2.alphabet)
    c1 = complete(d1, alphabet)
    c2 = complete(d2, alphabet)
    sink1 = d1.n if c1.n > d1.n else -1
    sink2 = d2.n if c2.n > d2.n else -1

    start = (c1.initial, c2.initial)
    index = {start: 0}
    pairs = [start]
    rows = [[] for _ in alphabet]
    i = 0
    while i < len(pairs):
        p, q = pairs[i]
        i += 1
        for x in range(len(alphabet)):
            t = (c1.delta[x][p], c2.delta[x][q])
            j = index.get(t)
            if j is None:
                j = index[t] = len(pairs)
                pairs.append(t)
            rows[x].append(j)
    finals = {j for j, (p, q) in enumerate(pairs) if op(p in c1.finals, q in c2.finals)}
    labels = tuple(
        ProductStateLabel(None if p == sink1 else p, None if q == sink2 else q) for p, q in pairs
    )
    return Product(Dfa(len(pairs), alphabet, rows, 0, finals), labels)


def boolean_op(d1: Dfa, d2: Dfa, op: BoolOp) -> Dfa:
    return canonical(direct_product(d1, d2, op).dfa)


def product_nfa(d1: Dfa, d2: Dfa) -> Nfa:
    """ε-NFA for L(d1)L(d2) over the union alphabet.

    States 0..m-1 are d1's, m..m+n-1 are d2's.  Finals of d1 become
    non-final and get an ε-move to d2's initial state.  Letters missing
    from one side simply have no transitions there.
    """
    alphabet = d1.alphabet.union(d2.alphabet)
    m, n = d1.n, d2.n
    rows = []
    for name in alphabet.names:
        row = []
        if name in d1.alphabet:
            r1 = d1.delta[d1.alphabet.index(name)]
            row += [{r1[p]} for p in range(m)]
        else:
            row += [set() for _ in range(m)]
        if name in d2.alphabet:
            r2 = d2.delta[d2.alphabet.index(name)]
            row += [{m + r2[q]} for q in range(n)]
        else:
            row += [set() for _ in range(n)]
        rows.append(row)
    epsilon = [set() for _ in range(m + n)]
    for f in d1.finals:
        epsilon[f].add(m + d2.initial)
    finals = {m + f for f in d2.finals}
    return Nfa(m + n, alphabet, rows, {d1.initial}, finals, epsilon)


def concat(d1: Dfa, d2: Dfa, budget: Optional[int] = None) -> Dfa:
    return canonical(subset_construction(product_nfa(d1, d2), budget)[0])


def star_nfa(d: Dfa) -> Nfa:
    """Fresh initial state ``n`` that is final and has ε to d's initial; d's finals ε back to it too."""
    n = d.n
    rows = [[{p} for p in row] + [set()] for row in d.delta]
    epsilon = [set() for _ in range(n + 1)]
    epsilon[n].add(d.initial)
    for f in d.finals:
        epsilon[f].add(d.initial)
    return Nfa(n + 1, d.alphabet, rows, {n}, set(d.finals) | {n}, epsilon)


def star(d: Dfa, budget: Optional[int] = None) -> Dfa:
    return canonical(subset_construction(star_nfa(d), budget)[0])


def reverse_nfa(d: Dfa) -> Nfa:
    rows = []
    for row in d.delta:
        back = [set() for _ in range(d.n)]
        for p, q in enumerate(row):
            back[q].add(p)
        rows.append(back)
    return Nfa(d.n, d.alphabet, rows, d.finals, {d.initial})


def reverse(d: Dfa, budget: Optional[int] = None) -> Dfa:
    return canonical(subset_construction(reverse_nfa(d), budget)[0])


@dataclass(frozen=True)
class SubsetCensus:
    """Reachable subsets of the product NFA's determinization, by shape.

    ``nonfinal``: {p'} ∪ S with p' non-final; ``final``: {p', 0} ∪ S with
    p' final; ``right_only``: S ⊆ Q_n (including the empty set).
    """

    m: int
    n: int
    k: int
    nonfinal: int
    final: int
    right_only: int
    subsets: tuple

    @property
    def total(self) -> int:
        return self.nonfinal + self.final + self.right_only

    @property
    def bound(self) -> int:
        return (self.m - self.k) * 2**self.n + self.k * 2 ** (self.n - 1) + 2**self.n

    def as_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "k": self.k,
            "nonfinal": self.nonfinal,
            "final": self.final,
            "right_only": self.right_only,
            "total": self.total,
            "bound": self.bound,
        }


def split_subset(subset, m: int):
    """Split a product-NFA subset into (left states, right states renumbered from 0)."""
    left = frozenset(q for q in subset if q < m)
    right = frozenset(q - m for q in subset if q >= m)
    return left, right


def product_subset_census(d1: Dfa, d2: Dfa, budget: Optional[int] = None) -> SubsetCensus:
    m, n = d1.n, d2.n
    _, subsets = subset_construction(product_nfa(d1, d2), budget)
    counts = {"nonfinal": 0, "final": 0, "right_only": 0}
    for s in subsets:
        left, right = split_subset(s, m)
        if not left:
            counts["right_only"] += 1
        elif len(left) > 1:
            raise InvariantViolation(f"subset {sorted(s)} holds {len(left)} left states")
        else:
            (p,) = left
            if p not in d1.finals:
                counts["nonfinal"] += 1
            elif d2.initial in right:
                counts["final"] += 1
            else:
                raise InvariantViolation(
                    f"subset {sorted(s)} has final left state {p} but lacks the right initial state"
                )
    return SubsetCensus(m, n, len(d1.finals), subsets=tuple(subsets), **counts)

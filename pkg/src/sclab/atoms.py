"""Syntactic semigroup size, atoms and atom complexities.

The atoms of L are the classes of the left congruence x ~ y iff
(ux ∈ L ⇔ uy ∈ L for every u).  With a minimal DFA whose states are the
quotients, a word w lies in the atom indexed by
S(w) = {q : δ(q, w) ∈ F}.  Every atom is recognized by the tuple
automaton, whose states are the vectors (δ(0,w), ..., δ(n-1,w)); only the
final states differ between atoms.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Optional

from .automata import Dfa, canonical, minimize
from .errors import BudgetExceeded, PreconditionError
from .transforms import generate_semigroup, letter_transformations

DEFAULT_TUPLE_BUDGET = 1_000_000


def syntactic_semigroup_size(d: Dfa, budget: Optional[int] = None) -> int:
    """Size of the transition semigroup of the minimal DFA of L(d)."""
    m = minimize(d)
    return len(generate_semigroup(letter_transformations(m), budget))


@dataclass(frozen=True)
class AtomProfile:
    S: frozenset
    nonempty: bool
    measured_kappa: Optional[int] = None

    def __post_init__(self):
        if self.nonempty != (self.measured_kappa is not None):
            raise PreconditionError("measured_kappa is present exactly for nonempty atoms")


@dataclass(frozen=True)
class TupleAutomaton:
    """Reachable tuple states of a DFA; ``tuples[0]`` is the identity."""

    dfa: Dfa
    tuples: tuple

    def profile(self, i: int) -> frozenset:
        finals = self.dfa.finals
        return frozenset(q for q, p in enumerate(self.tuples[i]) if p in finals)


def tuple_automaton(d: Dfa, budget: Optional[int] = None) -> TupleAutomaton:
    if budget is None:
        budget = DEFAULT_TUPLE_BUDGET
    start = tuple(range(d.n))
    index = {start: 0}
    tuples = [start]
    rows = [[] for _ in d.delta]
    i = 0
    while i < len(tuples):
        t = tuples[i]
        i += 1
        for x, row in enumerate(d.delta):
            u = tuple(row[p] for p in t)
            j = index.get(u)
            if j is None:
                if len(tuples) >= budget:
                    raise BudgetExceeded("tuple", budget, len(tuples))
                j = index[u] = len(tuples)
                tuples.append(u)
            rows[x].append(j)
    # finals are filled in per atom
    return TupleAutomaton(Dfa(len(tuples), d.alphabet, rows, 0, d.finals), tuple(tuples))


def atoms(d: Dfa, budget: Optional[int] = None) -> list:
    """One AtomProfile per subset S of the minimal DFA's states.

    Profiles are ordered by |S|, then lexicographically.  ``d`` is minimized
    first; callers that care can compare ``minimize(d) == d``.
    """
    m = minimize(d)
    ta = tuple_automaton(m, budget)
    by_profile = {}
    for i in range(len(ta.tuples)):
        by_profile.setdefault(ta.profile(i), []).append(i)
    graph = ta.dfa
    out = []
    for S in all_subsets(m.n):
        hits = by_profile.get(S)
        if hits is None:
            out.append(AtomProfile(S, False))
        else:
            kappa = canonical(graph.with_finals(hits)).n
            out.append(AtomProfile(S, True, kappa))
    return out


def all_subsets(n: int) -> list:
    return [frozenset(c) for k in range(n + 1) for c in combinations(range(n), k)]


def atom_of(d: Dfa, w) -> frozenset:
    """S(w) for the minimal DFA ``d``."""
    return frozenset(q for q in range(d.n) if d.run(w, start=q) in d.finals)


def atom_formula(n: int, s: int) -> int:
    """Maximal complexity of an atom A_S with |S| = s of a language with n quotients."""
    if not 0 <= s <= n:
        raise PreconditionError(f"need 0 <= s <= n, got s={s}, n={n}")
    if s in (0, n):
        return 2**n - 1
    return 1 + sum(comb(n, x) * comb(n - x, y) for x in range(1, s + 1) for y in range(1, n - s + 1))


def quotient_complexities(d: Dfa) -> list:
    """κ of every quotient of L(d), one per state of the minimal DFA."""
    m = minimize(d)
    return [canonical(m.with_initial(q)).n for q in range(m.n)]

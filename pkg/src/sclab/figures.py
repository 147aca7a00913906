"""Small fixed automata: the two-state example languages {a,b}*b and {a,c}*c."""
from __future__ import annotations

from .automata import Alphabet, Dfa


def ends_with_b() -> Dfa:
    """{a,b}*b: state 1 is reached by b, state 0 by a."""
    return Dfa(2, Alphabet.of("ab"), [[0, 0], [1, 1]], 0, {1})


def ends_with_c() -> Dfa:
    """{a,c}*c."""
    return Dfa(2, Alphabet.of("ac"), [[0, 0], [1, 1]], 0, {1})


def ends_with_b_completed() -> Dfa:
    """{a,b}*b completed over {a,b,c}; state 2 is the empty state."""
    return Dfa(3, Alphabet.of("abc"), [[0, 0, 2], [1, 1, 2], [2, 2, 2]], 0, {1})


def ends_with_c_completed() -> Dfa:
    """{a,c}*c completed over {a,b,c}; state 2 is the empty state."""
    return Dfa(3, Alphabet.of("abc"), [[0, 0, 2], [2, 2, 2], [1, 1, 2]], 0, {1})


def sigma_star(names="a") -> Dfa:
    alphabet = Alphabet.of(names)
    return Dfa(1, alphabet, [[0] for _ in alphabet], 0, {0})


def epsilon_only(names="a") -> Dfa:
    """{ε}: the initial state is final and every letter leads to an empty state."""
    alphabet = Alphabet.of(names)
    return Dfa(2, alphabet, [[1, 1] for _ in alphabet], 0, {0})

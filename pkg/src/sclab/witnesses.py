"""The universal witness over {a,b,c,d} and its permutational dialects.

A dialect renames letters by an injective partial map pi on the master
alphabet; letters where pi is undefined are deleted with their
transitions.  Dialect strings use the usual notation, e.g. ``"b,a,-,d"``;
trailing undefined entries may be left out, so ``"b,a"`` means
``"b,a,-,-"``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .automata import Alphabet, Dfa
from .errors import FormatError, PreconditionError
from .transforms import make_cycle, make_identity, make_point, make_transposition

MASTER = ("a", "b", "c", "d")


@dataclass(frozen=True)
class PartialPermutation:
    """``mapping[i]`` is the new name of master letter ``i``, or ``None``."""

    mapping: tuple

    def __post_init__(self):
        mapping = tuple(self.mapping)
        if len(mapping) > len(MASTER):
            raise PreconditionError(f"dialect has {len(mapping)} entries; the master alphabet has {len(MASTER)}")
        mapping = mapping + (None,) * (len(MASTER) - len(mapping))
        object.__setattr__(self, "mapping", mapping)
        defined = [t for t in mapping if t is not None]
        for t in defined:
            if t not in MASTER:
                raise PreconditionError(f"dialect target {t!r} is outside the master alphabet")
        if len(set(defined)) != len(defined):
            raise PreconditionError(f"dialect {self} is not injective")

    @classmethod
    def parse(cls, text: str) -> "PartialPermutation":
        parts = [p.strip() for p in text.split(",")]
        if not text.strip() or any(not p for p in parts):
            raise FormatError(f"cannot parse dialect {text!r}")
        mapping = tuple(None if p == "-" else p for p in parts)
        try:
            return cls(mapping)
        except PreconditionError as e:
            raise FormatError(str(e)) from None

    @classmethod
    def identity(cls) -> "PartialPermutation":
        return cls(MASTER)

    def is_total(self) -> bool:
        return all(t is not None for t in self.mapping)

    def __str__(self):
        entries = ["-" if t is None else t for t in self.mapping]
        while len(entries) > 1 and entries[-1] == "-":
            entries.pop()
        return ",".join(entries)


def universal_witness(n: int) -> Dfa:
    """U_n(a,b,c,d): a: (0,...,n-1), b: (0,1), c: (n-1 -> 0), d: identity; final state n-1."""
    if not isinstance(n, int) or n < 3:
        raise PreconditionError(f"the universal witness needs n >= 3, got {n!r}")
    rows = [
        make_cycle(n, list(range(n))).images,
        make_transposition(n, 0, 1).images,
        make_point(n, n - 1, 0).images,
        make_identity(n).images,
    ]
    return Dfa(n, Alphabet.of(MASTER), rows, 0, {n - 1})


def dialect(d: Dfa, pi) -> Dfa:
    """Rename letters of ``d`` by ``pi`` (entry ``i`` renames letter ``i`` of d).

    States and their numbering are untouched; the result is complete over
    the surviving letters, ordered by their position in ``d.alphabet``.
    """
    if isinstance(pi, str):
        pi = PartialPermutation.parse(pi)
    names = d.alphabet.names
    mapping = pi.mapping
    if any(t is not None for t in mapping[len(names):]):
        raise PreconditionError(f"dialect {pi} renames letters that {d.alphabet} does not have")
    moved = {}
    for i, target in enumerate(mapping[: len(names)]):
        if target is None:
            continue
        if target not in d.alphabet:
            raise PreconditionError(f"dialect target {target!r} not in {d.alphabet}")
        moved[target] = d.delta[i]
    order = [s for s in names if s in moved]
    return Dfa(d.n, Alphabet.of(order), [moved[s] for s in order], d.initial, d.finals)


def witness(n: int, pi="a,b,c,d") -> Dfa:
    """Dialect of U_n, e.g. ``witness(5, "b,a,-,d")`` for L_5(b,a,-,d)."""
    return dialect(universal_witness(n), pi)


# dialect strings of (left, right) witnesses per operation
WITNESS_DIALECTS = {
    "union": ("a,b,-,c", "b,a,-,d"),
    "symdiff": ("a,b,-,c", "b,a,-,d"),
    "difference": ("a,b,-,c", "b,a"),
    "intersection": ("a,b", "b,a"),
    "product": ("a,b,-,c", "b,a,-,d"),
    # same-alphabet contrast rows
    "same-alphabet-union": ("a,b", "b,a"),
    "same-alphabet-symdiff": ("a,b", "b,a"),
    "same-alphabet-difference": ("a,b", "b,a"),
    "same-alphabet-intersection": ("a,b", "b,a"),
    "same-alphabet-product": ("a,b,c,d", "a,b,c,d"),
}


def witness_pair(op: str, m: int, n: int):
    """The (left, right) witness DFAs meeting the bound for ``op`` at (m, n)."""
    try:
        left, right = WITNESS_DIALECTS[op]
    except KeyError:
        raise PreconditionError(f"no witness pair for operation {op!r}") from None
    if m < 3 or n < 3:
        raise PreconditionError(f"witnesses need m, n >= 3, got ({m}, {n})")
    return witness(m, left), witness(n, right)

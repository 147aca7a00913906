"""Complete DFAs, NFAs and the semantic primitives built on them.

States are always ``0..n-1``.  A transition table is stored letter-major:
``delta[x][q]`` is the target of state ``q`` under the letter at position
``x`` of the alphabet, which is also the layout of the JSON interchange
format.  Words are sequences of letter positions; strings are accepted as a
convenience and encoded through the alphabet.

Letters are matched across automata by name.  Letter positions are local to
one alphabet.
"""
from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

from .errors import AlphabetError, BudgetExceeded, PreconditionError

DEFAULT_SUBSET_BUDGET = 2_000_000


def default_budget() -> int:
    """Subset budget, overridable through ``SCLAB_BUDGET``."""
    env = os.environ.get("SCLAB_BUDGET")
    if env:
        try:
            value = int(env)
        except ValueError:
            raise PreconditionError(f"SCLAB_BUDGET must be an integer, got {env!r}")
        if value <= 0:
            raise PreconditionError("SCLAB_BUDGET must be positive")
        return value
    return DEFAULT_SUBSET_BUDGET


# ---------------------------------------------------------------------------
# Alphabets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Letter:
    index: int
    name: str


@dataclass(frozen=True)
class Alphabet:
    letters: tuple = ()

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        names = [l.name for l in letters]
        if len(set(names)) != len(names):
            raise PreconditionError(f"duplicate letter names in {names}")
        for i, l in enumerate(letters):
            if l.index != i:
                raise PreconditionError(f"letter {l.name!r} has index {l.index}, expected {i}")
            if not isinstance(l.name, str) or len(l.name) != 1 or not l.name.isprintable() or l.name.isspace():
                raise PreconditionError(f"letter names must be single printable symbols, got {l.name!r}")

    @classmethod
    def of(cls, names: Iterable[str]) -> "Alphabet":
        return cls(tuple(Letter(i, s) for i, s in enumerate(names)))

    @property
    def names(self) -> tuple:
        return tuple(l.name for l in self.letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __contains__(self, name) -> bool:
        if isinstance(name, Letter):
            name = name.name
        return name in self.names

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise AlphabetError(f"letter {name!r} not in alphabet {''.join(self.names)!r}") from None

    def issubset(self, other: "Alphabet") -> bool:
        return set(self.names) <= set(other.names)

    def union(self, other: "Alphabet") -> "Alphabet":
        """Letters of ``self`` in order, then the new letters of ``other``."""
        names = list(self.names)
        names += [s for s in other.names if s not in names]
        return Alphabet.of(names)

    def encode(self, text: str) -> tuple:
        return tuple(self.index(ch) for ch in text)

    def decode(self, word: Sequence[int]) -> str:
        return "".join(self.letters[x].name for x in word)

    def __str__(self):
        return "{" + ",".join(self.names) + "}"


def as_alphabet(a) -> Alphabet:
    if isinstance(a, Alphabet):
        return a
    return Alphabet.of(a)


# ---------------------------------------------------------------------------
# DFAs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Dfa:
    """Complete DFA.  ``delta[x][q]`` is the image of ``q`` under letter ``x``."""

    n: int
    alphabet: Alphabet
    delta: tuple
    initial: int = 0
    finals: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "alphabet", as_alphabet(self.alphabet))
        object.__setattr__(self, "delta", tuple(tuple(row) for row in self.delta))
        object.__setattr__(self, "finals", frozenset(self.finals))
        n = self.n
        if n < 1:
            raise PreconditionError("a DFA needs at least one state")
        if len(self.delta) != len(self.alphabet):
            raise PreconditionError("one transition row per letter required")
        for name, row in zip(self.alphabet.names, self.delta):
            if len(row) != n:
                raise PreconditionError(f"row for {name!r} has {len(row)} entries, expected {n}")
            for q in row:
                if not isinstance(q, int) or not 0 <= q < n:
                    raise PreconditionError(f"transition target {q!r} under {name!r} out of range")
        if not 0 <= self.initial < n:
            raise PreconditionError("initial state out of range")
        if any(not 0 <= f < n for f in self.finals):
            raise PreconditionError("final state out of range")

    def row(self, name: str) -> tuple:
        return self.delta[self.alphabet.index(name)]

    def run(self, word, start: Optional[int] = None) -> int:
        word = _encode(self.alphabet, word)
        q = self.initial if start is None else start
        for x in word:
            q = self.delta[x][q]
        return q

    def with_initial(self, q: int) -> "Dfa":
        return Dfa(self.n, self.alphabet, self.delta, q, self.finals)

    def with_finals(self, finals) -> "Dfa":
        return Dfa(self.n, self.alphabet, self.delta, self.initial, frozenset(finals))


@dataclass(frozen=True)
class PartialDfa:
    """DFA that may lack transitions (``None`` entries); only an input to :func:`complete`."""

    n: int
    alphabet: Alphabet
    delta: tuple
    initial: int = 0
    finals: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "alphabet", as_alphabet(self.alphabet))
        object.__setattr__(self, "delta", tuple(tuple(row) for row in self.delta))
        object.__setattr__(self, "finals", frozenset(self.finals))
        if len(self.delta) != len(self.alphabet) or any(len(r) != self.n for r in self.delta):
            raise PreconditionError("transition table shape does not match n and alphabet")
        for row in self.delta:
            for q in row:
                if q is not None and not 0 <= q < self.n:
                    raise PreconditionError(f"transition target {q!r} out of range")


def _encode(alphabet: Alphabet, word) -> tuple:
    if isinstance(word, str):
        return alphabet.encode(word)
    word = tuple(word)
    k = len(alphabet)
    for x in word:
        if not isinstance(x, int) or not 0 <= x < k:
            raise AlphabetError(f"letter index {x!r} not in alphabet {alphabet}")
    return word


def accepts(d: Dfa, w) -> bool:
    return d.run(w) in d.finals


def reachable_states(d: Dfa) -> list:
    """States reachable from the initial state, in BFS order (letters in alphabet order)."""
    seen = {d.initial}
    order = [d.initial]
    i = 0
    while i < len(order):
        q = order[i]
        i += 1
        for row in d.delta:
            p = row[q]
            if p not in seen:
                seen.add(p)
                order.append(p)
    return order


def coreachable_states(d: Dfa) -> set:
    preds = [set() for _ in range(d.n)]
    for row in d.delta:
        for q, p in enumerate(row):
            preds[p].add(q)
    seen = set(d.finals)
    stack = list(seen)
    while stack:
        p = stack.pop()
        for q in preds[p]:
            if q not in seen:
                seen.add(q)
                stack.append(q)
    return seen


def effective_alphabet(d: Dfa) -> Alphabet:
    """Letters occurring in some accepted word."""
    reach = set(reachable_states(d))
    live = coreachable_states(d)
    names = [
        name
        for name, row in zip(d.alphabet.names, d.delta)
        if any(row[q] in live for q in reach)
    ]
    return Alphabet.of(names)


def restrict(d: Dfa, sub) -> Dfa:
    """Drop every letter not in ``sub``; the language becomes L(d) ∩ sub*."""
    sub = as_alphabet(sub)
    if not sub.issubset(d.alphabet):
        raise PreconditionError(f"{sub} is not a subset of {d.alphabet}")
    keep = [i for i, name in enumerate(d.alphabet.names) if name in sub]
    if len(keep) == len(d.alphabet):
        return d
    alphabet = Alphabet.of(d.alphabet.names[i] for i in keep)
    return Dfa(d.n, alphabet, [d.delta[i] for i in keep], d.initial, d.finals)


def complete(d: Union[Dfa, PartialDfa], target) -> Dfa:
    """Complete ``d`` over ``target``, appending one empty state only if a transition is missing."""
    target = as_alphabet(target)
    if not d.alphabet.issubset(target):
        raise PreconditionError(f"target {target} lacks letters of {d.alphabet}")
    rows = []
    missing = False
    for name in target.names:
        if name in d.alphabet:
            row = d.delta[d.alphabet.index(name)]
        else:
            row = (None,) * d.n
        missing = missing or any(q is None for q in row)
        rows.append(row)
    if not missing:
        if isinstance(d, Dfa) and d.alphabet == target:
            return d
        return Dfa(d.n, target, rows, d.initial, d.finals)
    sink = d.n
    rows = [tuple(sink if q is None else q for q in row) + (sink,) for row in rows]
    return Dfa(d.n + 1, target, rows, d.initial, d.finals)


# ---------------------------------------------------------------------------
# Minimization
# ---------------------------------------------------------------------------


def trim(d: Dfa) -> Dfa:
    """Remove unreachable states, renumbering by BFS order."""
    order = reachable_states(d)
    if len(order) == d.n and order == list(range(d.n)):
        return d
    return _renumber(d, order)


def _renumber(d: Dfa, order: list) -> Dfa:
    new = {q: i for i, q in enumerate(order)}
    rows = [[new[row[q]] for q in order] for row in d.delta]
    finals = {new[q] for q in d.finals if q in new}
    return Dfa(len(order), d.alphabet, rows, new[d.initial], finals)


def _hopcroft(d: Dfa) -> list:
    """Coarsest partition of the states of ``d`` compatible with finality and delta.

    Returns ``block_of``, a list mapping each state to a block id.
    """
    n = d.n
    k = len(d.alphabet)
    finals = [q for q in range(n) if q in d.finals]
    others = [q for q in range(n) if q not in d.finals]
    blocks = [set(b) for b in (finals, others) if b]
    block_of = [0] * n
    for i, b in enumerate(blocks):
        for q in b:
            block_of[q] = i
    inverse = [[[] for _ in range(n)] for _ in range(k)]
    for x, row in enumerate(d.delta):
        for q, p in enumerate(row):
            inverse[x][p].append(q)

    if len(blocks) == 2:
        smaller = 0 if len(blocks[0]) <= len(blocks[1]) else 1
        pending = {(smaller, x) for x in range(k)}
    else:
        pending = set()
    while pending:
        splitter, x = pending.pop()
        inv = inverse[x]
        touched = {}
        for p in blocks[splitter]:
            for q in inv[p]:
                touched.setdefault(block_of[q], set()).add(q)
        for b, hit in touched.items():
            if len(hit) == len(blocks[b]):
                continue
            blocks[b] -= hit
            new_id = len(blocks)
            blocks.append(hit)
            for q in hit:
                block_of[q] = new_id
            for y in range(k):
                if (b, y) in pending:
                    pending.add((new_id, y))
                elif len(hit) <= len(blocks[b]):
                    pending.add((new_id, y))
                else:
                    pending.add((b, y))
    return block_of


def quotient_by(d: Dfa, block_of: list) -> Dfa:
    """Merge states with equal block ids; block ids need not be dense."""
    ids = {}
    for q in range(d.n):
        ids.setdefault(block_of[q], len(ids))
    rep = {}
    for q in range(d.n):
        rep.setdefault(ids[block_of[q]], q)
    m = len(ids)
    rows = [[ids[block_of[row[rep[b]]]] for b in range(m)] for row in d.delta]
    finals = {ids[block_of[q]] for q in d.finals}
    return Dfa(m, d.alphabet, rows, ids[block_of[d.initial]], finals)


def canonical_numbering(d: Dfa) -> Dfa:
    """Renumber reachable states in BFS order from the initial state, letters in alphabet order."""
    return _renumber(d, reachable_states(d))


def minimize(d: Dfa) -> Dfa:
    """Minimal DFA for L(d) over d's alphabet, canonically numbered.

    Isomorphic minimal DFAs over the same ordered alphabet compare equal.
    """
    t = trim(d)
    return canonical_numbering(quotient_by(t, _hopcroft(t)))


def canonical(d: Dfa) -> Dfa:
    """Restrict to the effective alphabet, then minimize.

    The restriction must come first: an empty state reachable only through
    letters outside the language's own alphabet is not a quotient.
    """
    return minimize(restrict(d, effective_alphabet(d)))


def quotient_complexity(d: Dfa) -> int:
    """κ(L(d)).  Languages with an empty alphabet (∅ and {ε}) get 1 by convention."""
    return canonical(d).n


def equivalent(d1: Dfa, d2: Dfa) -> bool:
    alphabet = d1.alphabet.union(d2.alphabet)
    return minimize(complete(d1, alphabet)) == minimize(complete(d2, alphabet))


# ---------------------------------------------------------------------------
# NFAs and the subset construction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Nfa:
    """NFA with a set of initial states; ``epsilon`` is ``None`` for an NFA without ε-moves.

    ``delta[x][q]`` and ``epsilon[q]`` are frozensets of states.
    """

    n: int
    alphabet: Alphabet
    delta: tuple
    initials: frozenset
    finals: frozenset
    epsilon: Optional[tuple] = None

    def __post_init__(self):
        object.__setattr__(self, "alphabet", as_alphabet(self.alphabet))
        object.__setattr__(
            self, "delta", tuple(tuple(frozenset(t) for t in row) for row in self.delta)
        )
        object.__setattr__(self, "initials", frozenset(self.initials))
        object.__setattr__(self, "finals", frozenset(self.finals))
        if self.epsilon is not None:
            object.__setattr__(self, "epsilon", tuple(frozenset(t) for t in self.epsilon))
            if len(self.epsilon) != self.n:
                raise PreconditionError("one ε-entry per state required")
        if len(self.delta) != len(self.alphabet) or any(len(r) != self.n for r in self.delta):
            raise PreconditionError("transition table shape does not match n and alphabet")
        rng = range(self.n)
        targets = [q for row in self.delta for t in row for q in t]
        targets += [q for t in (self.epsilon or ()) for q in t]
        if any(q not in rng for q in [*targets, *self.initials, *self.finals]):
            raise PreconditionError("state id out of range")

    @classmethod
    def from_dfa(cls, d: Dfa) -> "Nfa":
        rows = [[{p} for p in row] for row in d.delta]
        return cls(d.n, d.alphabet, rows, {d.initial}, d.finals)

    def closure(self, states) -> frozenset:
        result = set(states)
        if self.epsilon is None:
            return frozenset(result)
        stack = list(result)
        while stack:
            q = stack.pop()
            for p in self.epsilon[q]:
                if p not in result:
                    result.add(p)
                    stack.append(p)
        return frozenset(result)

    def accepts(self, w) -> bool:
        current = self.closure(self.initials)
        for x in _encode(self.alphabet, w):
            current = self.closure({p for q in current for p in self.delta[x][q]})
        return bool(current & self.finals)


def _mask_members(mask: int) -> frozenset:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


def subset_construction(nfa: Nfa, budget: Optional[int] = None):
    """Accessible subset construction with ε-closure.

    Returns ``(dfa, subsets)`` where ``subsets[i]`` is the frozenset of NFA
    states that DFA state ``i`` stands for.  The empty subset, when reached,
    is an ordinary state.
    """
    if budget is None:
        budget = default_budget()
    n = nfa.n
    closure = [0] * n
    for q in range(n):
        m = 0
        for p in nfa.closure({q}):
            m |= 1 << p
        closure[q] = m
    # succ[x][q] is the ε-closed image of q under x
    succ = []
    for row in nfa.delta:
        r = []
        for q in range(n):
            m = 0
            for p in row[q]:
                m |= closure[p]
            r.append(m)
        succ.append(r)
    final_mask = 0
    for f in nfa.finals:
        final_mask |= 1 << f

    start = 0
    for q in nfa.initials:
        start |= closure[q]
    index = {start: 0}
    masks = [start]
    rows = [[] for _ in succ]
    i = 0
    while i < len(masks):
        mask = masks[i]
        i += 1
        for x, sx in enumerate(succ):
            target = 0
            m = mask
            while m:
                low = m & -m
                target |= sx[low.bit_length() - 1]
                m ^= low
            j = index.get(target)
            if j is None:
                if len(masks) >= budget:
                    raise BudgetExceeded("subset", budget, len(masks))
                j = len(masks)
                index[target] = j
                masks.append(target)
            rows[x].append(j)
    finals = {j for j, m in enumerate(masks) if m & final_mask}
    dfa = Dfa(len(masks), nfa.alphabet, rows, 0, finals)
    return dfa, [_mask_members(m) for m in masks]


def determinize(nfa: Nfa, budget: Optional[int] = None) -> Dfa:
    return subset_construction(nfa, budget)[0]

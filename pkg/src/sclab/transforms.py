"""Transformations of Q_n = {0, ..., n-1} and the semigroups they generate.

Composition is a left-to-right action: ``q(s*t) = (qs)t``, so
``compose(s, t)`` applies ``s`` first.  A word ``xy`` therefore induces
``compose(tx, ty)``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import BudgetExceeded, PreconditionError


@dataclass(frozen=True)
class Transformation:
    images: tuple

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        if n == 0:
            raise PreconditionError("transformation of an empty set")
        if any(not isinstance(q, int) or not 0 <= q < n for q in images):
            raise PreconditionError(f"images {images} out of range for n={n}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, q: int) -> int:
        return self.images[q]

    def __mul__(self, other: "Transformation") -> "Transformation":
        return compose(self, other)

    def is_permutation(self) -> bool:
        return len(set(self.images)) == self.n

    def key(self) -> bytes:
        return bytes(self.images) if self.n <= 256 else repr(self.images).encode()

    def __str__(self):
        imgs = self.images
        moved = [q for q in range(self.n) if imgs[q] != q]
        if not moved:
            return "1"
        if self.is_permutation():
            seen = set()
            parts = []
            for q in moved:
                if q in seen:
                    continue
                cycle = [q]
                seen.add(q)
                p = imgs[q]
                while p != q:
                    cycle.append(p)
                    seen.add(p)
                    p = imgs[p]
                parts.append("(" + ",".join(map(str, cycle)) + ")")
            return "".join(parts)
        if len(moved) == 1:
            p = moved[0]
            return f"({p}->{imgs[p]})"
        return "[" + ",".join(map(str, imgs)) + "]"


def _check_states(n: int, states: Sequence[int]):
    if n < 1:
        raise PreconditionError("n must be positive")
    if len(set(states)) != len(states):
        raise PreconditionError(f"repeated states in {list(states)}")
    for q in states:
        if not isinstance(q, int) or not 0 <= q < n:
            raise PreconditionError(f"state {q!r} out of range for n={n}")


def make_identity(n: int) -> Transformation:
    if n < 1:
        raise PreconditionError("n must be positive")
    return Transformation(tuple(range(n)))


def make_cycle(n: int, states: Sequence[int]) -> Transformation:
    """The cycle (q0, q1, ..., q_{k-1}); states outside it are fixed."""
    states = list(states)
    _check_states(n, states)
    images = list(range(n))
    for i, q in enumerate(states):
        images[q] = states[(i + 1) % len(states)]
    return Transformation(tuple(images))


def make_transposition(n: int, p: int, q: int) -> Transformation:
    return make_cycle(n, [p, q])


def make_point(n: int, p: int, q: int) -> Transformation:
    """(p -> q): sends p to q and fixes everything else."""
    _check_states(n, [p, q])
    images = list(range(n))
    images[p] = q
    return Transformation(tuple(images))


def compose(s: Transformation, t: Transformation) -> Transformation:
    """s*t, i.e. apply s then t."""
    if s.n != t.n:
        raise PreconditionError(f"cannot compose transformations of {s.n} and {t.n} states")
    ti = t.images
    return Transformation(tuple(ti[q] for q in s.images))


def apply_to_set(t: Transformation, states: Iterable[int]) -> frozenset:
    imgs = t.images
    return frozenset(imgs[q] for q in states)


@dataclass(frozen=True)
class Semigroup:
    elements: frozenset
    generators: tuple

    def __len__(self):
        return len(self.elements)

    def __contains__(self, t) -> bool:
        return t in self.elements


def generate_semigroup(generators: Sequence[Transformation], budget: Optional[int] = None) -> Semigroup:
    """All products of one or more generators, found breadth-first.

    The identity is a member only if some product of generators equals it.
    ``budget`` defaults to n^n + 1.
    """
    generators = tuple(generators)
    if not generators:
        return Semigroup(frozenset(), ())
    n = generators[0].n
    if any(g.n != n for g in generators):
        raise PreconditionError("generators act on different state counts")
    if budget is None:
        budget = n**n + 1
    gen_images = [g.images for g in generators]
    seen = set()
    queue = deque()
    for g in gen_images:
        if g not in seen:
            seen.add(g)
            queue.append(g)
    if len(seen) > budget:
        raise BudgetExceeded("semigroup", budget, len(seen))
    while queue:
        s = queue.popleft()
        for g in gen_images:
            # s*g: apply s, then g
            st = tuple(g[q] for q in s)
            if st not in seen:
                if len(seen) >= budget:
                    raise BudgetExceeded("semigroup", budget, len(seen))
                seen.add(st)
                queue.append(st)
    return Semigroup(frozenset(Transformation(s) for s in seen), generators)


def letter_transformations(d) -> list:
    """The transformation each letter of a DFA induces, in alphabet order."""
    return [Transformation(row) for row in d.delta]

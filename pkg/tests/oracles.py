"""Independent oracles.  None of these touch minimize/determinize/the product constructions."""
import itertools
import random

import numpy as np

from sclab.automata import Alphabet, Dfa


def words(names, max_len, min_len=0):
    for k in range(min_len, max_len + 1):
        for w in itertools.product(names, repeat=k):
            yield "".join(w)


def member(d: Dfa, w: str) -> bool:
    """Membership of a word over any alphabet; foreign letters mean rejection."""
    q = d.initial
    names = d.alphabet.names
    for ch in w:
        if ch not in names:
            return False
        q = d.delta[names.index(ch)][q]
    return q in d.finals


def reachable(d: Dfa):
    seen = {d.initial}
    stack = [d.initial]
    while stack:
        q = stack.pop()
        for row in d.delta:
            if row[q] not in seen:
                seen.add(row[q])
                stack.append(row[q])
    return sorted(seen)


def acceptance_matrix(d: Dfa, states, max_len):
    """Rows: all words of length <= max_len (BFS order); columns: ``states``.

    Entry is True iff the word leads the column's state into a final state.
    """
    cur = np.array(states, dtype=np.int64)[None, :]
    finals = np.zeros(d.n, dtype=bool)
    finals[list(d.finals)] = True
    levels = [finals[cur]]
    rows = [np.array(r, dtype=np.int64) for r in d.delta]
    for _ in range(max_len):
        if not rows:
            break
        cur = np.concatenate([r[cur] for r in rows], axis=0)
        levels.append(finals[cur])
    return np.concatenate(levels, axis=0)


def brute_force_state_count(d: Dfa) -> int:
    """Number of classes of reachable states, distinguishing by every word of length <= |R|-1."""
    states = reachable(d)
    mat = acceptance_matrix(d, states, max(len(states) - 1, 0))
    return len({mat[:, j].tobytes() for j in range(len(states))})


def random_dfa(rng: random.Random, max_n=8, letters="abcd", max_k=4, min_k=1) -> Dfa:
    n = rng.randint(1, max_n)
    k = rng.randint(min_k, min(max_k, len(letters)))
    names = sorted(rng.sample(letters, k))
    rows = [[rng.randrange(n) for _ in range(n)] for _ in names]
    finals = {q for q in range(n) if rng.random() < 0.4}
    return Dfa(n, Alphabet.of(names), rows, rng.randrange(n), finals)


# set-theoretic semantics, computed from membership alone


def membership_table(d: Dfa, names, max_len):
    return {w: member(d, w) for w in words(names, max_len)}


def concat_table(t1, t2, max_len, names):
    return {w: any(t1[w[:i]] and t2[w[i:]] for i in range(len(w) + 1)) for w in words(names, max_len)}


def star_table(t, max_len, names):
    out = {}
    for w in words(names, max_len):
        out[w] = w == "" or any(out[w[:i]] and t[w[i:]] for i in range(len(w)))
    return out


def reverse_table(t):
    return {w: t[w[::-1]] for w in t}


def residual_count(mem, names, prefix_len, suffix_len) -> int:
    """Distinct residual signatures {x : wx ∈ L, |x| <= suffix_len} over prefixes |w| <= prefix_len."""
    suffixes = list(words(names, suffix_len))
    sigs = {tuple(mem(w + x) for x in suffixes) for w in words(names, prefix_len)}
    return len(sigs)


def nfa_language(nfa, max_len):
    """word -> accepted, by direct simulation of state sets (no subset construction)."""
    names = nfa.alphabet.names
    start = nfa.closure(nfa.initials)
    out = {"": bool(start & nfa.finals)}
    frontier = [("", start)]
    for _ in range(max_len):
        nxt = []
        for w, states in frontier:
            for x, name in enumerate(names):
                s = nfa.closure({p for q in states for p in nfa.delta[x][q]})
                out[w + name] = bool(s & nfa.finals)
                nxt.append((w + name, s))
        frontier = nxt
    return out


def dfa_language(d, max_len):
    names = d.alphabet.names
    out = {"": d.initial in d.finals}
    frontier = [("", d.initial)]
    for _ in range(max_len):
        nxt = []
        for w, q in frontier:
            for x, name in enumerate(names):
                p = d.delta[x][q]
                out[w + name] = p in d.finals
                nxt.append((w + name, p))
        frontier = nxt
    return out

"""JSON interchange and Graphviz DOT export.

DFA JSON::

    {"alphabet": ["a","b"], "states": 3, "initial": 0, "finals": [2],
     "transitions": {"a": [1,2,0], "b": [0,0,1]}}

``transitions[x][q]`` is the target of ``q`` under ``x``.  NFAs use
``"initials"`` instead of ``"initial"``, lists of targets per state, and an
optional ``"epsilon"`` list.  Either may carry a ``"labels"`` side table.
"""
from __future__ import annotations

import json
from typing import Optional, Sequence

from .automata import Alphabet, Dfa, Nfa
from .errors import FormatError, PreconditionError


def _label_json(label):
    if isinstance(label, tuple):
        return list(label)
    if isinstance(label, (set, frozenset)):
        return sorted(label)
    return label


def dfa_to_dict(d: Dfa, labels: Optional[Sequence] = None) -> dict:
    obj = {
        "alphabet": list(d.alphabet.names),
        "states": d.n,
        "initial": d.initial,
        "finals": sorted(d.finals),
        "transitions": {name: list(row) for name, row in zip(d.alphabet.names, d.delta)},
    }
    if labels is not None:
        obj["labels"] = [_label_json(l) for l in labels]
    return obj


def nfa_to_dict(nfa: Nfa, labels: Optional[Sequence] = None) -> dict:
    obj = {
        "alphabet": list(nfa.alphabet.names),
        "states": nfa.n,
        "initials": sorted(nfa.initials),
        "finals": sorted(nfa.finals),
        "transitions": {
            name: [sorted(t) for t in row] for name, row in zip(nfa.alphabet.names, nfa.delta)
        },
    }
    if nfa.epsilon is not None:
        obj["epsilon"] = [sorted(t) for t in nfa.epsilon]
    if labels is not None:
        obj["labels"] = [_label_json(l) for l in labels]
    return obj


def _require(obj, key, kind):
    if key not in obj:
        raise FormatError(f"missing key {key!r}")
    value = obj[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise FormatError(f"key {key!r} has the wrong type")
    return value


def _int_list(value, what):
    if not isinstance(value, list) or any(not isinstance(v, int) or isinstance(v, bool) for v in value):
        raise FormatError(f"{what} must be a list of integers")
    return value


def _common(obj):
    if not isinstance(obj, dict):
        raise FormatError("automaton JSON must be an object")
    names = _require(obj, "alphabet", list)
    if any(not isinstance(s, str) for s in names):
        raise FormatError("alphabet entries must be strings")
    n = _require(obj, "states", int)
    finals = _int_list(_require(obj, "finals", list), "finals")
    trans = _require(obj, "transitions", dict)
    if set(trans) != set(names):
        raise FormatError("transitions must have exactly one key per alphabet letter")
    for name in names:
        row = trans[name]
        if not isinstance(row, list) or len(row) != n:
            raise FormatError(f"transitions[{name!r}] must list exactly {n} targets")
    return names, n, finals, trans


def dfa_from_dict(obj) -> Dfa:
    names, n, finals, trans = _common(obj)
    initial = _require(obj, "initial", int)
    rows = [_int_list(trans[s], f"transitions[{s!r}]") for s in names]
    try:
        return Dfa(n, Alphabet.of(names), rows, initial, finals)
    except PreconditionError as e:
        raise FormatError(str(e)) from None


def nfa_from_dict(obj) -> Nfa:
    names, n, finals, trans = _common(obj)
    initials = _int_list(_require(obj, "initials", list), "initials")
    rows = []
    for s in names:
        rows.append([_int_list(t, f"transitions[{s!r}]") for t in trans[s]])
    epsilon = None
    if "epsilon" in obj:
        eps = obj["epsilon"]
        if not isinstance(eps, list) or len(eps) != n:
            raise FormatError(f"epsilon must list exactly {n} target lists")
        epsilon = [_int_list(t, "epsilon") for t in eps]
    try:
        return Nfa(n, Alphabet.of(names), rows, initials, finals, epsilon)
    except PreconditionError as e:
        raise FormatError(str(e)) from None


def loads(text: str):
    """Parse a DFA or NFA (NFAs are recognized by their ``"initials"`` key)."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON: {e}") from None
    if isinstance(obj, dict) and "initials" in obj:
        return nfa_from_dict(obj)
    return dfa_from_dict(obj)


def load_dfa(path) -> Dfa:
    with open(path) as f:
        a = loads(f.read())
    if not isinstance(a, Dfa):
        raise FormatError(f"{path}: expected a DFA, found an NFA")
    return a


def dumps(d, labels=None, indent=None) -> str:
    obj = dfa_to_dict(d, labels) if isinstance(d, Dfa) else nfa_to_dict(d, labels)
    return json.dumps(obj, indent=indent, ensure_ascii=False)


def _dot_id(s) -> str:
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(d: Dfa, labels: Optional[Sequence] = None, name: str = "dfa") -> str:
    """DOT text: initial state entered from a point node, finals as double circles."""
    lines = [f"digraph {_dot_id(name)} {{", "  rankdir=LR;", "  __start [shape=point];"]
    for q in range(d.n):
        shape = "doublecircle" if q in d.finals else "circle"
        text = str(q) if labels is None else str(labels[q])
        lines.append(f"  {q} [shape={shape}, label={_dot_id(text)}];")
    lines.append(f"  __start -> {d.initial};")
    edges = {}
    for name_, row in zip(d.alphabet.names, d.delta):
        for q, p in enumerate(row):
            edges.setdefault((q, p), []).append(name_)
    for (q, p), letters in sorted(edges.items()):
        lines.append(f"  {q} -> {p} [label={_dot_id(','.join(letters))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"

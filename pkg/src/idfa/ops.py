"""Operation constructions on partial DFAs accepting finite languages.

Each construction returns the accessible automaton it builds, before any
minimization, with a provenance label per state: a ``(left, right)`` pair
for products, ``(i, P)`` for concatenation and a subset for star and
reversal. ``OMEGA`` stands for an operand's dead state.
"""

from __future__ import annotations

from collections import deque
from typing import Callable, Hashable

from .automata import (
    Dfa,
    Nfa,
    determinize,
    minimize,
    require_finite,
    sort_symbols,
)

OMEGA = "Ω"

OPERATIONS = ("union", "intersection", "complement", "concat", "star", "reversal")


def _explore(start: Hashable, alphabet, step: Callable, is_final: Callable) -> Dfa:
    index = {start: 0}
    labels = [start]
    delta = {}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for a in alphabet:
            nxt = step(cur, a)
            if nxt is None:
                continue
            if nxt not in index:
                index[nxt] = len(labels)
                labels.append(nxt)
                queue.append(nxt)
            delta[index[cur], a] = index[nxt]
    finals = [i for i, s in enumerate(labels) if is_final(s)]
    return Dfa.build(len(labels), alphabet, finals, delta, labels)


def _product(a: Dfa, b: Dfa, keep_one_sided: bool, final_rule) -> Dfa:
    require_finite(a, b)
    alphabet = sort_symbols(a.alphabet + b.alphabet)

    def step(pair, sym):
        i, j = pair
        i2 = a.step(i, sym) if i != OMEGA else None
        j2 = b.step(j, sym) if j != OMEGA else None
        if i2 is None and j2 is None:
            return None
        if not keep_one_sided and (i2 is None or j2 is None):
            return None
        return (OMEGA if i2 is None else i2, OMEGA if j2 is None else j2)

    def is_final(pair):
        i, j = pair
        return final_rule(i in a.finals, j in b.finals)

    return _explore((0, 0), alphabet, step, is_final)


def union(a: Dfa, b: Dfa) -> Dfa:
    """Product automaton for L(a) | L(b); one side may be dead, never both."""
    return _product(a, b, True, lambda x, y: x or y)


def intersection(a: Dfa, b: Dfa) -> Dfa:
    return _product(a, b, False, lambda x, y: x and y)


def complement(a: Dfa) -> Dfa:
    """Complete ``a`` with one sink state and swap final and non-final states."""
    sink = a.n
    delta = dict(a.delta)
    for p in range(a.n + 1):
        for sym in a.alphabet:
            delta.setdefault((p, sym), sink)
    finals = [p for p in range(a.n + 1) if p not in a.finals]
    labels = list(range(a.n)) + [OMEGA]
    return Dfa.build(a.n + 1, a.alphabet, finals, delta, labels)


def concat(a: Dfa, b: Dfa) -> Dfa:
    """Pair-subset construction for L(a) L(b).

    States are ``(i, P)`` with ``i`` a state of ``a`` (or OMEGA) and ``P`` a
    set of states of ``b``; ``0`` re-enters ``P`` whenever ``i`` is final.
    """
    require_finite(a, b)
    alphabet = sort_symbols(a.alphabet + b.alphabet)

    def step(state, sym):
        i, ps = state
        i2 = a.step(i, sym) if i != OMEGA else None
        p2 = {q for p in ps if (q := b.step(p, sym)) is not None}
        if i2 is None:
            i2 = OMEGA
        elif i2 in a.finals:
            p2.add(0)
        if i2 == OMEGA and not p2:
            return None
        return (i2, frozenset(p2))

    start = (0, frozenset({0}) if 0 in a.finals else frozenset())
    return _explore(start, alphabet, step, lambda s: bool(s[1] & b.finals))


def star(a: Dfa) -> Dfa:
    """Subset construction for L(a)*; ``0`` is added back on reaching a final state."""
    require_finite(a)
    start = frozenset({0})

    def step(ps, sym):
        r = frozenset(q for p in ps if (q := a.step(p, sym)) is not None)
        if not r:
            return None
        return r | {0} if r & a.finals else r

    # the initial state is final because of the empty word; no other state
    # can equal {0} unless 0 itself is final
    return _explore(start, a.alphabet, step, lambda s: s == start or bool(s & a.finals))


def reverse_nfa(a: Dfa) -> Nfa:
    delta: dict = {}
    for p, sym, q in a.transitions:
        delta.setdefault((q, sym), set()).add(p)
    return Nfa(
        a.n,
        a.alphabet,
        frozenset(a.finals),
        frozenset({0}),
        {k: frozenset(v) for k, v in delta.items()},
    )


def reversal(a: Dfa) -> Dfa:
    require_finite(a)
    return determinize(reverse_nfa(a))


def apply(name: str, *operands: Dfa, minimal: bool = False) -> Dfa:
    """Run the named operation; with ``minimal`` the result is minimized."""
    fn = {
        "union": union,
        "intersection": intersection,
        "complement": complement,
        "concat": concat,
        "star": star,
        "reversal": reversal,
    }[name]
    out = fn(*operands)
    return minimize(out) if minimal else out

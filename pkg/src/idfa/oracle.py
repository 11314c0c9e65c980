"""Reference implementations used to check the constructions.

Everything here works on explicit word sets and is deliberately naive.
Nothing in this module imports the operation constructions or the bound
formulas.
"""

from __future__ import annotations

from collections import deque
from itertools import product
from typing import Callable, Hashable, Iterable

from .automata import Dfa, FiniteLanguage, Symbol, Word, sort_symbols


def quotient(words: frozenset[Word], sym: Symbol) -> frozenset[Word]:
    return frozenset(w[1:] for w in words if w and w[0] == sym)


def minimal_dfa_from_words(lang: FiniteLanguage) -> Dfa:
    """Minimal partial DFA whose states are the distinct nonempty left quotients."""
    alphabet = sort_symbols(set(lang.alphabet) | {a for w in lang.words for a in w})
    start = frozenset(lang.words)
    if not start:
        return Dfa.empty(alphabet)
    index = {start: 0}
    table = [start]
    delta = {}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for a in alphabet:
            nxt = quotient(cur, a)
            if not nxt:
                continue
            if nxt not in index:
                index[nxt] = len(table)
                table.append(nxt)
                queue.append(nxt)
            delta[index[cur], a] = index[nxt]
    finals = [i for i, q in enumerate(table) if () in q]
    return Dfa.build(len(table), alphabet, finals, delta)


def bounded_words(d: Dfa, max_len: int) -> FiniteLanguage:
    """All words of length at most ``max_len`` accepted by ``d`` (plain walk, no pruning)."""
    found = set()
    layer: list[tuple[int, Word]] = [(0, ())]
    for depth in range(max_len + 1):
        nxt = []
        for p, w in layer:
            if p in d.finals:
                found.add(w)
            if depth < max_len:
                for a in d.alphabet:
                    q = d.delta.get((p, a))
                    if q is not None:
                        nxt.append((q, w + (a,)))
        layer = nxt
    return FiniteLanguage(frozenset(found), d.alphabet)


def all_words(alphabet: Iterable[Symbol], max_len: int) -> Iterable[Word]:
    alphabet = sort_symbols(alphabet)
    for n in range(max_len + 1):
        yield from product(alphabet, repeat=n)


# Set-level operations on word sets.

def union_words(x: frozenset[Word], y: frozenset[Word]) -> frozenset[Word]:
    return x | y


def intersection_words(x: frozenset[Word], y: frozenset[Word]) -> frozenset[Word]:
    return x & y


def concat_words(x: frozenset[Word], y: frozenset[Word]) -> frozenset[Word]:
    return frozenset(u + v for u in x for v in y)


def reverse_words(x: frozenset[Word]) -> frozenset[Word]:
    return frozenset(w[::-1] for w in x)


# Infinite results (star, complement) are checked through "steppers": a
# deterministic description of the set-level language, given as an initial
# state, a step function and an acceptance test, all over word sets.

Stepper = tuple[Hashable, Callable[[Hashable, Symbol], Hashable], Callable[[Hashable], bool]]


def complement_stepper(words: frozenset[Word]) -> Stepper:
    """Words not in ``words``; the state is the current left quotient."""
    return frozenset(words), quotient, lambda q: () not in q


def star_stepper(words: frozenset[Word]) -> Stepper:
    """Words in ``words*``.

    The state is a set ``R`` of pending suffixes, meaning the remaining
    language is the union of ``r . words*`` for ``r`` in ``R``.
    """
    base = frozenset(words)

    def step(pending, sym):
        out = set()
        for r in pending:
            if r:
                if r[0] == sym:
                    out.add(r[1:])
            else:
                out.update(w[1:] for w in base if w and w[0] == sym)
        return frozenset(out)

    return frozenset({()}), step, lambda pending: () in pending


def words_stepper(words: frozenset[Word]) -> Stepper:
    return frozenset(words), quotient, lambda q: () in q


def agrees_up_to(d: Dfa, stepper: Stepper, alphabet: Iterable[Symbol], max_len: int) -> Word | None:
    """Compare ``d`` with a set-level language on every word of length <= max_len.

    Returns a shortest disagreeing word, or None. Pairs (oracle state, DFA
    state) already visited at a smaller depth are not expanded again: both
    sides are deterministic, so their futures were already compared.
    """
    start, step, accepting = stepper
    alphabet = sort_symbols(alphabet)
    seen = {(start, 0)}
    layer: list[tuple[Hashable, int | None, Word]] = [(start, 0, ())]
    for depth in range(max_len + 1):
        nxt = []
        for o, q, w in layer:
            if accepting(o) != (q is not None and q in d.finals):
                return w
            if depth == max_len:
                continue
            for a in alphabet:
                o2 = step(o, a)
                q2 = None if q is None else d.delta.get((q, a))
                if (o2, q2) not in seen:
                    seen.add((o2, q2))
                    nxt.append((o2, q2, w + (a,)))
        layer = nxt
    return None

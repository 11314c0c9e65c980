"""Partial-transition DFAs, NFAs and the generic algorithms on them.

A missing transition means rejection: the dead state is never stored.
Every automaton is immutable and states are integers ``0..n-1`` with
``0`` as the initial state.
"""

from __future__ import annotations

import heapq
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

Symbol = str
Word = tuple[Symbol, ...]

SYMBOL_RE = re.compile(r"^[a-z]+(_[0-9]+)*$")


class AutomatonError(ValueError):
    pass


class InfiniteLanguageError(AutomatonError):
    pass


def symbol_key(sym: Symbol) -> tuple:
    """Sort key: atomic letters first (lexicographic), then indexed family letters."""
    base, *idx = sym.split("_")
    if not idx:
        return (0, base, ())
    return (1, base, tuple(int(i) for i in idx))


def sort_symbols(symbols: Iterable[Symbol]) -> tuple[Symbol, ...]:
    return tuple(sorted(set(symbols), key=symbol_key))


def word(text: str | Sequence[Symbol]) -> Word:
    """Turn ``"ab"`` or ``"a_1_1 b"`` or a sequence of symbols into a word tuple."""
    if isinstance(text, str):
        if " " in text or "_" in text:
            return tuple(text.split())
        return tuple(text)
    return tuple(text)


@dataclass(frozen=True)
class Dfa:
    """Deterministic automaton with a partial transition function.

    ``transitions`` is a sorted tuple of ``(src, symbol, dst)`` triples.
    ``labels`` optionally records where each state came from in a
    construction; it takes no part in equality.
    """

    n: int
    alphabet: tuple[Symbol, ...]
    finals: frozenset[int]
    transitions: tuple[tuple[int, Symbol, int], ...]
    labels: tuple | None = field(default=None, compare=False, repr=False)

    @classmethod
    def build(
        cls,
        n: int,
        alphabet: Iterable[Symbol],
        finals: Iterable[int],
        delta: Mapping[tuple[int, Symbol], int] | Iterable[tuple[int, Symbol, int]],
        labels: Sequence | None = None,
    ) -> "Dfa":
        if isinstance(delta, Mapping):
            triples = [(p, a, q) for (p, a), q in delta.items()]
        else:
            triples = list(delta)
        triples.sort(key=lambda t: (t[0], symbol_key(t[1]), t[2]))
        return cls(
            n,
            sort_symbols(alphabet),
            frozenset(finals),
            tuple(triples),
            None if labels is None else tuple(labels),
        )

    @classmethod
    def empty(cls, alphabet: Iterable[Symbol] = ()) -> "Dfa":
        return cls.build(1, alphabet, (), ())

    @cached_property
    def delta(self) -> dict[tuple[int, Symbol], int]:
        return {(p, a): q for p, a, q in self.transitions}

    @cached_property
    def out(self) -> tuple[tuple[tuple[Symbol, int], ...], ...]:
        """Per-state outgoing transitions in canonical symbol order."""
        rows: list[list[tuple[Symbol, int]]] = [[] for _ in range(self.n)]
        for p, a, q in self.transitions:
            if 0 <= p < self.n:
                rows[p].append((a, q))
        return tuple(tuple(r) for r in rows)

    @property
    def num_transitions(self) -> int:
        return len(self.transitions)

    def step(self, state: int, sym: Symbol) -> int | None:
        return self.delta.get((state, sym))

    def is_complete(self) -> bool:
        return len(self.delta) == self.n * len(self.alphabet)

    def with_alphabet(self, alphabet: Iterable[Symbol]) -> "Dfa":
        return Dfa.build(self.n, set(self.alphabet) | set(alphabet), self.finals, self.transitions, self.labels)


@dataclass(frozen=True)
class Nfa:
    n: int
    alphabet: tuple[Symbol, ...]
    initials: frozenset[int]
    finals: frozenset[int]
    delta: Mapping[tuple[int, Symbol], frozenset[int]]


@dataclass(frozen=True)
class FiniteLanguage:
    words: frozenset[Word]
    alphabet: tuple[Symbol, ...] = ()

    @classmethod
    def of(cls, words: Iterable[str | Sequence[Symbol]], alphabet: Iterable[Symbol] = ()) -> "FiniteLanguage":
        ws = frozenset(word(w) for w in words)
        syms = set(alphabet) | {a for w in ws for a in w}
        return cls(ws, sort_symbols(syms))

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, w) -> bool:
        return word(w) in self.words

    def __iter__(self):
        return iter(sorted(self.words, key=lambda w: (len(w), [symbol_key(a) for a in w])))


def validate(d: Dfa) -> list[str]:
    """Return every invariant violation of ``d``; an empty list means valid."""
    problems = []
    if d.n < 1:
        problems.append("automaton needs at least one state")
    for f in sorted(d.finals):
        if not 0 <= f < d.n:
            problems.append(f"final state {f} out of range")
    alphabet = set(d.alphabet)
    seen: dict[tuple[int, Symbol], int] = {}
    for p, a, q in d.transitions:
        if not 0 <= p < d.n:
            problems.append(f"source {p} out of range")
        if not 0 <= q < d.n:
            problems.append("target out of range")
        if a not in alphabet:
            problems.append(f"unknown symbol {a!r}")
        if (p, a) in seen:
            problems.append(f"nondeterministic on ({p},{a})")
        seen[(p, a)] = q
    return problems


def _reachable(d: Dfa) -> list[int]:
    """States reachable from 0 in BFS order, symbols in canonical order."""
    order = [0]
    seen = {0}
    queue = deque([0])
    while queue:
        p = queue.popleft()
        for _, q in d.out[p]:
            if q not in seen:
                seen.add(q)
                order.append(q)
                queue.append(q)
    return order


def _coreachable(d: Dfa) -> set[int]:
    back: dict[int, list[int]] = {}
    for p, _, q in d.transitions:
        back.setdefault(q, []).append(p)
    seen = set(d.finals)
    stack = list(seen)
    while stack:
        q = stack.pop()
        for p in back.get(q, ()):
            if p not in seen:
                seen.add(p)
                stack.append(p)
    return seen


def _restrict(d: Dfa, keep: set[int]) -> Dfa:
    """Keep only ``keep`` (must contain 0) and renumber in canonical BFS order."""
    order = [0]
    index = {0: 0}
    queue = deque([0])
    while queue:
        p = queue.popleft()
        for _, q in d.out[p]:
            if q in keep and q not in index:
                index[q] = len(order)
                order.append(q)
                queue.append(q)
    delta = [
        (index[p], a, index[q])
        for p, a, q in d.transitions
        if p in index and q in index
    ]
    labels = None if d.labels is None else [d.labels[p] for p in order]
    return Dfa.build(len(order), d.alphabet, (index[f] for f in d.finals if f in index), delta, labels)


def trim(d: Dfa) -> Dfa:
    """Drop states that are unreachable or cannot reach a final state."""
    useful = _coreachable(d)
    if 0 not in useful:
        return Dfa.empty(d.alphabet)
    return _restrict(d, set(_reachable(d)) & useful)


def canonical(d: Dfa) -> Dfa:
    """Renumber the accessible part in canonical BFS order."""
    return _restrict(d, set(_reachable(d)))


def is_acyclic(d: Dfa) -> bool:
    reach = set(_reachable(d))
    color = dict.fromkeys(reach, 0)
    for root in reach:
        if color[root]:
            continue
        color[root] = 1
        stack = [(root, iter(d.out[root]))]
        while stack:
            p, it = stack[-1]
            for _, q in it:
                if color[q] == 1:
                    return False
                if color[q] == 0:
                    color[q] = 1
                    stack.append((q, iter(d.out[q])))
                    break
            else:
                color[p] = 2
                stack.pop()
    return True


def accepts(d: Dfa, w: str | Sequence[Symbol]) -> bool:
    state: int | None = 0
    alphabet = set(d.alphabet)
    for a in word(w):
        if a not in alphabet:
            raise AutomatonError(f"symbol {a!r} not in alphabet")
        state = d.step(state, a)
        if state is None:
            return False
    return state in d.finals


def enumerate_language(d: Dfa) -> FiniteLanguage:
    t = trim(d)
    if not is_acyclic(t):
        raise InfiniteLanguageError("infinite language")
    words: set[Word] = set()
    stack: list[tuple[int, Word]] = [(0, ())]
    while stack:
        p, w = stack.pop()
        if p in t.finals:
            words.add(w)
        for a, q in t.out[p]:
            stack.append((q, w + (a,)))
    return FiniteLanguage(frozenset(words), d.alphabet)


def determinize(nfa: Nfa) -> Dfa:
    """Accessible subset construction; the empty subset is never created."""
    alphabet = sort_symbols(nfa.alphabet)
    start = frozenset(nfa.initials)
    if not start:
        return Dfa.empty(alphabet)
    index = {start: 0}
    subsets = [start]
    delta = {}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for a in alphabet:
            nxt = frozenset(q for p in cur for q in nfa.delta.get((p, a), ()))
            if not nxt:
                continue
            if nxt not in index:
                index[nxt] = len(subsets)
                subsets.append(nxt)
                queue.append(nxt)
            delta[index[cur], a] = index[nxt]
    finals = [i for i, s in enumerate(subsets) if s & nfa.finals]
    return trim(Dfa.build(len(subsets), alphabet, finals, delta, subsets))


def minimize(d: Dfa) -> Dfa:
    """Minimal partial DFA by trimming and Moore-style partition refinement.

    The implicit dead state acts as its own block (``-1``), so cyclic
    automata such as complements are handled too.
    """
    t = trim(d)
    if not t.finals:
        return t
    block = [1 if p in t.finals else 0 for p in range(t.n)]
    nblocks = len(set(block))
    while True:
        sigs: dict[tuple, int] = {}
        new = []
        for p in range(t.n):
            sig = (block[p],) + tuple(
                block[q] if (q := t.step(p, a)) is not None else -1 for a in t.alphabet
            )
            new.append(sigs.setdefault(sig, len(sigs)))
        block = new
        if len(sigs) == nblocks:
            break
        nblocks = len(sigs)
    delta = {(block[p], a): block[q] for p, a, q in t.transitions}
    finals = {block[p] for p in t.finals}
    # block of state 0 is always 0: it is the first signature assigned
    return canonical(Dfa.build(nblocks, t.alphabet, finals, delta))


def is_isomorphic(a: Dfa, b: Dfa) -> bool:
    ca, cb = canonical(a), canonical(b)
    return (ca.n, ca.alphabet, ca.finals, ca.transitions) == (cb.n, cb.alphabet, cb.finals, cb.transitions)


def complete(d: Dfa) -> Dfa:
    """Add one explicit sink state so the transition function is total.

    Already complete automata are returned unchanged.
    """
    if d.is_complete():
        return d
    sink = d.n
    delta = dict(d.delta)
    for p in range(d.n + 1):
        for a in d.alphabet:
            delta.setdefault((p, a), sink)
    labels = None if d.labels is None else d.labels + ("sink",)
    return Dfa.build(d.n + 1, d.alphabet, d.finals, delta, labels)


def complete_state_count(d: Dfa) -> int:
    """State count of the minimal complete DFA for L(d)."""
    m = minimize(d)
    if not m.finals:
        return 1
    return m.n if m.is_complete() else m.n + 1


def topological_order(d: Dfa) -> list[int]:
    """Topological order of an acyclic DFA; ties are broken by smallest state id."""
    indeg = [0] * d.n
    for _, _, q in d.transitions:
        indeg[q] += 1
    heap = [p for p in range(d.n) if indeg[p] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        p = heapq.heappop(heap)
        order.append(p)
        for _, q in d.out[p]:
            indeg[q] -= 1
            if indeg[q] == 0:
                heapq.heappush(heap, q)
    if len(order) != d.n:
        raise InfiniteLanguageError("automaton has a cycle")
    return order


def renumber(d: Dfa, order: Sequence[int]) -> Dfa:
    """Relabel state ``order[i]`` as ``i``; ``order[0]`` must be the initial state."""
    index = {p: i for i, p in enumerate(order)}
    labels = None if d.labels is None else [d.labels[p] for p in order]
    return Dfa.build(
        d.n,
        d.alphabet,
        (index[f] for f in d.finals),
        ((index[p], a, index[q]) for p, a, q in d.transitions),
        labels,
    )


def require_finite(*automata: Dfa) -> None:
    for d in automata:
        if not is_acyclic(trim(d)):
            raise InfiniteLanguageError("operand accepts an infinite language")

"""Refined complexity measures of the minimal DFA of a language.

Per-state quantities are indexed by the state ids of ``MeasureSet.dfa``,
which is the minimal DFA renumbered in topological order when the language
is finite (so that ``f_at`` counts finals strictly before ``i``).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .automata import (
    AutomatonError,
    Dfa,
    FiniteLanguage,
    Symbol,
    canonical,
    is_acyclic,
    minimize,
    renumber,
    topological_order,
)
from .oracle import minimal_dfa_from_words


@dataclass(frozen=True)
class SymbolMeasures:
    itc: int  # number of transitions on this symbol
    s: int  # 1 if the initial state has a transition on it
    a: int  # transitions entering final states
    e: int  # final states with a transition on it
    s_bar: int
    e_bar: int
    t_bar: int  # states without a transition on it

    @classmethod
    def absent(cls, n: int, f: int) -> "SymbolMeasures":
        """Measures of a symbol the automaton never uses."""
        return cls(0, 0, 0, 0, 1, f, n)


@dataclass(frozen=True)
class MeasureSet:
    dfa: Dfa
    m: int
    itc_total: int
    k: int
    per_symbol: dict[Symbol, SymbolMeasures]
    f: int
    f_at: tuple[int, ...]  # f_at[i] = finals among states 0..i-1, for i in 0..m
    t_at: dict[tuple[Symbol, int], int]
    in_at: dict[tuple[Symbol, int], int]
    levels: tuple[int, ...]
    in_initial: int
    pre_dead: int | None
    level_of_automaton: int | None
    finite: bool = field(default=True)

    def sym(self, tau: Symbol) -> SymbolMeasures:
        got = self.per_symbol.get(tau)
        return got if got is not None else SymbolMeasures.absent(self.m, self.f)

    @property
    def s(self) -> int:
        return sum(x.s for x in self.per_symbol.values())

    @property
    def a(self) -> int:
        return sum(x.a for x in self.per_symbol.values())

    def t_bar_at(self, tau: Symbol, i: int) -> int:
        return 1 - self.t_at.get((tau, i), 0)

    def in_symbol(self, tau: Symbol, i: int) -> int:
        return self.in_at.get((tau, i), 0)


def _levels(d: Dfa) -> tuple[int, ...]:
    dist = [-1] * d.n
    dist[0] = 0
    queue = deque([0])
    while queue:
        p = queue.popleft()
        for _, q in d.out[p]:
            if dist[q] < 0:
                dist[q] = dist[p] + 1
                queue.append(q)
    return tuple(dist)


def level(d: Dfa, i: int) -> int:
    """Length of the shortest path from the initial state to ``i``."""
    if not 0 <= i < d.n:
        raise AutomatonError(f"state {i} out of range")
    lv = _levels(d)[i]
    if lv < 0:
        raise AutomatonError(f"state {i} is not accessible")
    return lv


def measure(d: Dfa) -> MeasureSet:
    md = minimize(d)
    finite = is_acyclic(md)
    md = renumber(md, topological_order(md)) if finite else canonical(md)
    n = md.n
    finals = md.finals
    t_at: dict[tuple[Symbol, int], int] = {}
    in_at: dict[tuple[Symbol, int], int] = {}
    for p, a, q in md.transitions:
        t_at[a, p] = 1
        in_at[a, q] = in_at.get((a, q), 0) + 1
    per = {}
    for a in md.alphabet:
        t = sum(t_at.get((a, i), 0) for i in range(n))
        s = t_at.get((a, 0), 0)
        e = sum(t_at.get((a, i), 0) for i in finals)
        per[a] = SymbolMeasures(
            itc=t,
            s=s,
            a=sum(in_at.get((a, i), 0) for i in finals),
            e=e,
            s_bar=1 - s,
            e_bar=len(finals) - e,
            t_bar=n - t,
        )
    f_at = tuple(sum(1 for j in finals if j < i) for i in range(n + 1))
    levels = _levels(md)
    pre_dead = None
    if finite and finals:
        sinks = [p for p in range(n) if not md.out[p] and p in finals]
        pre_dead = sinks[0] if len(sinks) == 1 else None
    return MeasureSet(
        dfa=md,
        m=n,
        itc_total=md.num_transitions,
        k=len(md.alphabet),
        per_symbol=per,
        f=len(finals),
        f_at=f_at,
        t_at=t_at,
        in_at=in_at,
        levels=levels,
        in_initial=sum(1 for _, _, q in md.transitions if q == 0),
        pre_dead=pre_dead,
        level_of_automaton=None if pre_dead is None else levels[pre_dead],
        finite=finite,
    )


def isc(x: Dfa | FiniteLanguage) -> int:
    return _minimal(x).n


def itc(x: Dfa | FiniteLanguage) -> int:
    return _minimal(x).num_transitions


def _minimal(x: Dfa | FiniteLanguage) -> Dfa:
    if isinstance(x, FiniteLanguage):
        return minimal_dfa_from_words(x)
    return minimize(x)

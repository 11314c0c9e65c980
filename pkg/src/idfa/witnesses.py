"""Witness families for each operation, plus a random finite-language DFA sampler."""

from __future__ import annotations

import random

from .automata import Dfa, minimize


class WitnessError(ValueError):
    pass


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise WitnessError(msg)


def union_witness(m: int, n: int) -> tuple[Dfa, Dfa]:
    """Operands whose union needs mn-2 states and 3(mn-n-m)+2 transitions.

    ``a_i_j`` sends A's initial state to ``i`` and B's to ``j``; the pair
    ``(m-1, n-1)`` is left out of the alphabet.
    """
    _need(m >= 2 and n >= 2, "union witness needs m, n >= 2")
    pairs = [(i, j) for i in range(1, m) for j in range(1, n) if (i, j) != (m - 1, n - 1)]
    sigma = ["b", "c"] + [f"a_{i}_{j}" for i, j in pairs]
    da = {(i, "b"): i + 1 for i in range(m - 1)}
    db = {(i, "c"): i + 1 for i in range(n - 1)}
    for i, j in pairs:
        da[0, f"a_{i}_{j}"] = i
        db[0, f"a_{i}_{j}"] = j
    return Dfa.build(m, sigma, [m - 1], da), Dfa.build(n, sigma, [n - 1], db)


def intersection_witness(m: int, n: int) -> tuple[Dfa, Dfa]:
    """``a_i_j`` advances A by ``i`` and B by ``j``; ``a_{m-1}_{n-1}`` jumps straight to the ends."""
    _need(m >= 2 and n >= 2, "intersection witness needs m, n >= 2")
    steps = [(i, j) for i in range(1, m - 1) for j in range(1, n - 1)]
    jump = f"a_{m - 1}_{n - 1}"
    sigma = [f"a_{i}_{j}" for i, j in steps] + [jump]
    da = {(x, f"a_{i}_{j}"): x + i for i, j in steps for x in range(m) if x + i <= m - 1}
    db = {(x, f"a_{i}_{j}"): x + j for i, j in steps for x in range(n) if x + j <= n - 1}
    da[0, jump] = m - 1
    db[0, jump] = n - 1
    return Dfa.build(m, sigma, [m - 1], da), Dfa.build(n, sigma, [n - 1], db)


def complement_witness(m: int) -> Dfa:
    """The single word b^m."""
    _need(m >= 1, "complement witness needs m >= 1")
    return Dfa.build(m + 1, ["b"], [m], {(i, "b"): i + 1 for i in range(m)})


def _chain(states: int, symbols, finals) -> Dfa:
    delta = {(i, s): i + 1 for i in range(states - 1) for s in symbols}
    return Dfa.build(states, symbols, finals, delta)


def concat_witness_case1(m: int, n: int) -> tuple[Dfa, Dfa]:
    """A: every state final, a/b chain. B: b first, then an a/b chain to the only final state."""
    _need(m >= 1 and n >= 2, "concat witness needs m >= 1 and n >= 2")
    a = _chain(m, ["a", "b"], range(m))
    db = {(0, "b"): 1}
    for i in range(1, n - 1):
        db[i, "a"] = i + 1
        db[i, "b"] = i + 1
    return a, Dfa.build(n, ["a", "b"], [n - 1], db)


def concat_witness_case2(m: int, n: int) -> tuple[Dfa, Dfa]:
    """Variable alphabet ``{b, a_1 .. a_{n-2}}``; ``a_j`` advances B by ``j``."""
    _need(m >= 2 and n > m + 1, "concat case 2 witness needs m >= 2 and n > m + 1")
    sigma = ["b"] + [f"a_{j}" for j in range(1, n - 1)]
    a = _chain(m, sigma, range(m))
    db = {(i, "b"): i + 1 for i in range(n - 1)}
    for i in range(1, n - 1):
        for j in range(1, n - 1):
            if 2 <= i + j <= n - 1:
                db[i, f"a_{j}"] = i + j
    for j in range(2, n - 1):
        db[0, f"a_{j}"] = j
    return a, Dfa.build(n, sigma, [n - 1], db)


def star_witness(m: int) -> Dfa:
    """Chain over {a, b, c} with ``b`` also jumping from 0 to the last state.

    Edge labels alternate between {a, b} and {a, b, c} so that the edge
    into the last state always carries {a, b, c}; the first edge is {a, c}
    for even ``m`` and {a} for odd ``m``. Finals are the last two states.
    """
    _need(m >= 4, "star witness needs m >= 4")
    delta = {(0, "b"): m - 1}
    for i in range(m - 1):
        if i == 0:
            labels = ("a", "c") if m % 2 == 0 else ("a",)
        elif (m - 2 - i) % 2 == 0:
            labels = ("a", "b", "c")
        else:
            labels = ("a", "b")
        for s in labels:
            delta[i, s] = i + 1
    return Dfa.build(m, ["a", "b", "c"], [m - 2, m - 1], delta)


def reversal_witness(m: int) -> Dfa:
    """a/b chain, one edge on ``b`` only, then an a/b chain; finals start after the b edge.

    For ``m = 2p-1`` the b edge is ``p-2 -> p-1``; for ``m = 2p`` it is
    ``p-1 -> p``. Either way the automaton has exactly ``m`` states.
    """
    _need(m >= 4, "reversal witness needs m >= 4")
    cut = m // 2 - 1 if m % 2 == 0 else (m + 1) // 2 - 2
    delta = {}
    for i in range(m - 1):
        for s in ("b",) if i == cut else ("a", "b"):
            delta[i, s] = i + 1
    return Dfa.build(m, ["a", "b"], range(cut + 1, m), delta)


def random_acyclic_dfa(
    rng: random.Random,
    max_states: int = 6,
    max_symbols: int = 3,
    density: float = 0.6,
) -> Dfa:
    """Sample a minimal DFA for a nonempty finite language.

    Transitions only go from lower to higher state ids, so the sampled
    table is topologically ordered and the language is finite. Samples
    whose language is empty are drawn again.
    """
    while True:
        d = _sample_acyclic(rng, max_states, max_symbols, density)
        if d.finals:
            return d


def _sample_acyclic(rng: random.Random, max_states: int, max_symbols: int, density: float) -> Dfa:
    n = rng.randint(1, max_states)
    k = rng.randint(1, max_symbols)
    sigma = "abc"[:k]
    delta = {}
    for i in range(n - 1):
        for s in sigma:
            if rng.random() < density:
                delta[i, s] = rng.randint(i + 1, n - 1)
    finals = {n - 1} | {i for i in range(n - 1) if rng.random() < 0.35}
    return minimize(Dfa.build(n, sigma, finals, delta))


WITNESSES = {
    "union": (union_witness, 2),
    "intersection": (intersection_witness, 2),
    "complement": (complement_witness, 1),
    "concat-case1": (concat_witness_case1, 2),
    "concat-case2": (concat_witness_case2, 2),
    "star": (star_witness, 1),
    "reversal": (reversal_witness, 1),
}

"""Upper-bound formulas and witness claim values for every operation.

Bounds come in two flavours: ``*_bounds`` functions evaluate the general
upper bounds on the measures of the operands, and ``*_claim`` functions
give the closed-form values that the witness families are claimed to
reach. Formulas are evaluated as published; discrepancies are left for the
verification harness to report.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, floor
from typing import Callable, Sequence

from .automata import sort_symbols
from .measures import MeasureSet


class BoundError(ValueError):
    pass


@dataclass(frozen=True)
class BoundValue:
    kind: str  # "state" or "transition"
    value: int
    formula_id: str
    inputs: dict = field(default_factory=dict, compare=False)

    def __int__(self) -> int:
        return self.value


def binom(x: int, j: int) -> int:
    """Binomial coefficient that is 0 outside ``0 <= j <= x``."""
    if x < 0 or j < 0 or j > x:
        return 0
    return comb(x, j)


def boxplus(x: int, y: int) -> int:
    return min(x + y, 1)


def _alphabet(*ms: MeasureSet) -> tuple[str, ...]:
    return sort_symbols(a for m in ms for a in m.dfa.alphabet)


def _need_two(ma: MeasureSet, mb: MeasureSet) -> None:
    if ma.m < 2 or mb.m < 2:
        raise BoundError("bound needs both operands with at least 2 states")


def union_bounds(ma: MeasureSet, mb: MeasureSet) -> tuple[BoundValue, BoundValue]:
    _need_two(ma, mb)
    m, n = ma.m, mb.m
    total = 0
    for tau in _alphabet(ma, mb):
        x, y = ma.sym(tau), mb.sym(tau)
        total += boxplus(x.s, y.s) - (x.itc - x.s) * (y.itc - y.s)
    # the undefined i(L) term is read as s(L)
    total += n * (ma.itc_total - ma.s) + m * (mb.itc_total - mb.s)
    inputs = {"m": m, "n": n}
    return (
        BoundValue("state", m * n - 2, "union.states", inputs),
        BoundValue("transition", total, "union.transitions", inputs),
    )


def _inner_nonfinal(ms: MeasureSet, tau: str) -> int:
    """tau-transitions leaving non-initial, non-final states."""
    return sum(ms.t_at.get((tau, i), 0) for i in range(1, ms.m) if i not in ms.dfa.finals)


def intersection_transition_bound_as_stated(ma: MeasureSet, mb: MeasureSet) -> BoundValue:
    """The middle factor written as ``itc_tau - s_tau - a_tau``.

    That factor goes negative when the initial tau-transition enters a final
    state, and the bound then undercounts.
    """
    total = 0
    for tau in _alphabet(ma, mb):
        x, y = ma.sym(tau), mb.sym(tau)
        total += x.s * y.s + (x.itc - x.s - x.a) * (y.itc - y.s - y.a) + x.a * y.a
    return BoundValue("transition", total, "intersection.transitions_as_stated", {"m": ma.m, "n": mb.m})


def intersection_bounds(ma: MeasureSet, mb: MeasureSet) -> tuple[BoundValue, BoundValue]:
    """The transition bound pairs initial, inner non-final and final-entering transitions."""
    _need_two(ma, mb)
    m, n = ma.m, mb.m
    total = 0
    for tau in _alphabet(ma, mb):
        x, y = ma.sym(tau), mb.sym(tau)
        total += x.s * y.s + _inner_nonfinal(ma, tau) * _inner_nonfinal(mb, tau) + x.a * y.a
    inputs = {"m": m, "n": n}
    return (
        BoundValue("state", m * n - 2 * (m + n) + 6, "intersection.states", inputs),
        BoundValue("transition", total, "intersection.transitions", inputs),
    )


def complement_bounds(ma: MeasureSet | int, k: int) -> tuple[BoundValue, BoundValue]:
    m = ma if isinstance(ma, int) else ma.m
    inputs = {"m": m, "k": k}
    return (
        BoundValue("state", m + 1, "complement.states", inputs),
        BoundValue("transition", k * (m + 1), "complement.transitions", inputs),
    )


def _first_sum(m_terms: int, n_choose: int, k: int, f_at: Sequence[int]) -> int:
    return sum(
        min(k**i, sum(binom(n_choose, j) for j in range(f_at[i] + 1)))
        for i in range(m_terms)
    )


def concat_state_bound_complete_old(m: int, n: int, k: int, f_at: Sequence[int], f: int) -> BoundValue:
    """Earlier complete-DFA bound; not an upper bound when m < n."""
    value = _first_sum(m - 1, n - 2, k, f_at) + min(
        k ** (m - 1), sum(binom(n - 2, j) for j in range(f + 1))
    )
    return BoundValue("state", value, "concat.complete_old", {"m": m, "n": n, "k": k, "f": f})


def concat_state_bound_complete(m: int, n: int, k: int, f_at: Sequence[int], f: int) -> BoundValue:
    value = _first_sum(m - 1, n - 2, k, f_at) + sum(binom(n - 2, j) for j in range(f + 1))
    return BoundValue("state", value, "concat.complete", {"m": m, "n": n, "k": k, "f": f})


def concat_state_bound_incomplete(m: int, n: int, k: int, f_at: Sequence[int], f: int) -> BoundValue:
    value = _first_sum(m, n - 1, k, f_at) + sum(binom(n - 1, j) for j in range(f + 1)) - 1
    return BoundValue("state", value, "concat.states", {"m": m, "n": n, "k": k, "f": f})


def concat_transition_bound(ma: MeasureSet, mb: MeasureSet, k: int | None = None) -> BoundValue:
    alphabet = _alphabet(ma, mb)
    k = len(alphabet) if k is None else k
    m, n, f = ma.m, mb.m, ma.f
    total = k * _first_sum(m - 1, n - 1, k, ma.f_at)
    for tau in alphabet:
        y = mb.sym(tau)
        missing = y.t_bar - y.s_bar  # non-initial states of B without tau
        delta = [binom(n - 1, j) - binom(missing, j) for j in range(f + 1)]
        total += min(k ** (m - 1) - y.s_bar, sum(delta[:f])) + sum(delta)
    return BoundValue("transition", total, "concat.transitions", {"m": m, "n": n, "k": k, "f": f})


def concat_transition_bound_corrected(ma: MeasureSet, mb: MeasureSet, k: int | None = None) -> BoundValue:
    """Transition bound with the term for states ``(pre-dead of A, P)`` fixed.

    Those states always contain B's initial state, so when it has a
    ``tau``-transition every one of them has one too; only when it has none
    are subsets without any ``tau``-transition excluded.
    """
    alphabet = _alphabet(ma, mb)
    k = len(alphabet) if k is None else k
    m, n, f = ma.m, mb.m, ma.f
    total = k * _first_sum(m - 1, n - 1, k, ma.f_at)
    for tau in alphabet:
        y = mb.sym(tau)
        missing = y.t_bar - y.s_bar
        delta = [binom(n - 1, j) - binom(missing, j) for j in range(f + 1)]
        with_initial = [binom(n - 1, j) - y.s_bar * binom(missing, j) for j in range(f)]
        total += min(k ** (m - 1) - y.s_bar, sum(with_initial)) + sum(delta)
    return BoundValue("transition", total, "concat.transitions_corrected", {"m": m, "n": n, "k": k, "f": f})


def concat_bounds(
    ma: MeasureSet, mb: MeasureSet, k: int | None = None, corrected: bool = False
) -> tuple[BoundValue, BoundValue]:
    k = len(_alphabet(ma, mb)) if k is None else k
    trans = concat_transition_bound_corrected if corrected else concat_transition_bound
    return (
        concat_state_bound_incomplete(ma.m, mb.m, k, ma.f_at, ma.f),
        trans(ma, mb, k),
    )


def star_bounds(ma: MeasureSet, k: int | None = None) -> tuple[BoundValue, BoundValue]:
    """With a single final state the star needs no more than the operand itself."""
    alphabet = ma.dfa.alphabet
    k = len(alphabet) if k is None else k
    m, f = ma.m, ma.f
    inputs = {"m": m, "k": k, "f": f}
    if f < 2:
        return (
            BoundValue("state", m, "star.states_single_final", inputs),
            BoundValue("transition", ma.itc_total, "star.transitions_single_final", inputs),
        )
    # when every state is final the leading power is 1/2; the real-valued
    # bound is floored since the measured counts are integers
    lead = Fraction(2) ** (m - f - 1)
    states = floor(lead + 2 ** (m - 2) - 1)
    trans = lead * (k + sum(2 ** ma.sym(t).e for t in alphabet))
    for tau in alphabet:
        x = ma.sym(tau)
        n_tau = x.t_bar - x.s_bar - x.e_bar
        trans -= 2**n_tau
        if x.s == 0:
            trans -= 2**n_tau
    return (
        BoundValue("state", states, "star.states", inputs),
        BoundValue("transition", floor(trans), "star.transitions", inputs),
    )


def reversal_level(m: int, k: int) -> int:
    """Smallest ``l`` with ``2**(m-l) <= k**l``."""
    l = 0
    while 2 ** (m - l) > k**l:
        l += 1
    return l


def reversal_bounds(ma: MeasureSet, k: int | None = None) -> tuple[BoundValue, BoundValue, int]:
    alphabet = ma.dfa.alphabet
    k = len(alphabet) if k is None else k
    if k < 2:
        raise BoundError("reversal bound needs an alphabet of size >= 2")
    m = ma.m
    l = reversal_level(m, k)
    states = sum(k**i for i in range(l)) + 2 ** (m - l) - 1
    trans = sum(k**i for i in range(l + 1)) - 1 + k * 2 ** (m - l)
    for tau in alphabet:
        if m % 2:
            trans -= 2 ** (sum(ma.t_bar_at(tau, i) for i in range(l)) + 1)
        else:
            c = 0 if ma.in_symbol(tau, l) > 0 else 1
            trans -= 2 ** (sum(ma.t_bar_at(tau, i) for i in range(l - 1)) + 1) - c
    inputs = {"m": m, "k": k, "l": l}
    return (
        BoundValue("state", states, "reversal.states", inputs),
        BoundValue("transition", trans, "reversal.transitions", inputs),
        l,
    )


# Closed-form values claimed for the witness families.

def union_claim(m: int, n: int) -> tuple[int, int]:
    return m * n - 2, 3 * (m * n - n - m) + 2


def intersection_claim(m: int, n: int) -> tuple[int, int]:
    inner = sum((m - 2 - i) * (n - 2 - i) for i in range(1, min(m, n) - 2))
    return m * n - 2 * (m + n) + 6, (m - 2) * (n - 2) * (2 + inner) + 2


def complement_claim(m: int) -> tuple[int, int]:
    """For an operand of ``m`` states over a one-letter alphabet."""
    return m + 1, m + 1


def concat_case1_claim(m: int, n: int) -> tuple[int, int]:
    return (m - n + 3) * 2 ** (n - 1) - 2, 6 * 2 ** (n - 1) - 8


ExponentRule = Callable[[int], "float"]

STAR_EXPONENT_RULES: dict[str, ExponentRule] = {
    "ceil(m/2)": lambda m: -(-m // 2),
    "floor(m/2)": lambda m: m // 2,
    "(m-2)/2": lambda m: (m - 2) / 2,
    "(m-1)/2": lambda m: (m - 1) / 2,
}


def star_claim(m: int, exponent: float) -> tuple[int, int]:
    """State count and transition count ``9*2^(m-3) - 2^exponent - 2``."""
    return 2 ** (m - 2) + 2 ** (m - 3) - 1, 9 * 2 ** (m - 3) - 2**exponent - 2


def star_claim_as_printed(m: int) -> tuple[int, float]:
    """Transition exponent assigned to odd ``m`` as m/2, even ``m`` as (m-2)/2."""
    return star_claim(m, m / 2 if m % 2 else (m - 2) / 2)


def reversal_claim(m: int) -> tuple[int, int]:
    if m % 2 == 0:
        p = m // 2
        return 2 ** (p + 1) - 2, 2 ** (p + 2) - 7
    p = (m + 1) // 2
    return 3 * 2 ** (p - 1) + 2, 3 * 2**p - 8

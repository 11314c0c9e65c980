"""Grid verification of the bound formulas against measured minimal automata."""

from __future__ import annotations

import random
import time
from itertools import product
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from . import bounds as B
from . import ops, witnesses as W
from .automata import Dfa, complete, complete_state_count, minimize, renumber, sort_symbols, topological_order
from .measures import measure

TIGHT = "TIGHT"
SOUND_NOT_TIGHT = "SOUND_NOT_TIGHT"
VIOLATED = "VIOLATED"

GRID_OPS = (
    "union",
    "intersection",
    "complement",
    "concat-case1",
    "concat-case2",
    "concat-complete",
    "star",
    "reversal",
)
BINARY_GRID_OPS = {"union", "intersection", "concat-case1", "concat-case2", "concat-complete"}

# largest parameter per op that stays at desk scale (about 2**20 states)
MAX_PARAM = {
    "union": 40,
    "intersection": 40,
    "complement": 1000,
    "concat-case1": 16,
    "concat-case2": 14,
    "concat-complete": 16,
    "star": 18,
    "reversal": 30,
}


class ScaleError(ValueError):
    pass


@dataclass(frozen=True)
class BoundReport:
    op: str
    m: int
    n: int | None
    k: int
    state_bound: int | None
    state_claim: float | None
    state_measured: int
    trans_bound: int | None
    trans_claim: float | None
    trans_measured: int | None
    state_verdict: str
    trans_verdict: str
    ms: float | None = None

    @property
    def violated(self) -> bool:
        return VIOLATED in (self.state_verdict, self.trans_verdict)


def verdict(measured: int | None, bound: int | None, claim: float | None) -> str:
    """VIOLATED if measured exceeds the bound; otherwise TIGHT iff measured hits the claim.

    Without a claim value the bound itself is the claim.
    """
    if measured is None:
        return ""
    if bound is not None and measured > bound:
        return VIOLATED
    target = bound if claim is None else claim
    return TIGHT if target is not None and measured == target else SOUND_NOT_TIGHT


def _report(op, m, n, k, sb, sc, res: Dfa | int, tb, tc, t0, state_measured=None) -> BoundReport:
    if isinstance(res, Dfa):
        sm, tm = res.n, res.num_transitions
    else:
        sm, tm = res, None
    if state_measured is not None:
        sm = state_measured
    return BoundReport(
        op, m, n, k,
        sb, sc, sm,
        tb, tc, tm,
        verdict(sm, sb, sc), verdict(tm, tb, tc),
        round((time.perf_counter() - t0) * 1000, 1),
    )


def _b_power(length: int) -> Dfa:
    """Minimal DFA of {b^length}; ``length + 1`` states."""
    if length == 0:
        return Dfa.build(1, ["b"], [0], {})
    return W.complement_witness(length)


@lru_cache(maxsize=None)
def resolve_star_exponent() -> dict[int, tuple[str, ...]]:
    """Which readings of the star transition exponent match the measured witnesses.

    Returns ``{0: names matching at m=4, 1: names matching at m=5}``; the
    key is ``m % 2``.
    """
    out = {}
    for m in (4, 5):
        measured = minimize(ops.star(W.star_witness(m))).num_transitions
        out[m % 2] = tuple(
            name
            for name, rule in B.STAR_EXPONENT_RULES.items()
            if float(rule(m)).is_integer() and B.star_claim(m, int(rule(m)))[1] == measured
        )
    return out


def star_rule_description() -> str:
    rules = resolve_star_exponent()
    return "; ".join(
        f"{'even' if parity == 0 else 'odd'} m: {' = '.join(names) or 'no candidate matches'}"
        for parity, names in sorted(rules.items())
    )


def _star_claim(m: int) -> tuple[int, float]:
    names = resolve_star_exponent()[m % 2]
    if not names:
        return B.star_claim_as_printed(m)
    return B.star_claim(m, int(B.STAR_EXPONENT_RULES[names[0]](m)))


def verify_cell(op: str, m: int, n: int | None = None, corrected: bool = False) -> BoundReport:
    t0 = time.perf_counter()
    if op == "union":
        a, b = W.union_witness(m, n)
        res = minimize(ops.union(a, b))
        sb, tb = B.union_bounds(measure(a), measure(b))
        sc, tc = B.union_claim(m, n)
        k = len(sort_symbols(a.alphabet + b.alphabet))
    elif op == "intersection":
        a, b = W.intersection_witness(m, n)
        res = minimize(ops.intersection(a, b))
        sb, tb = B.intersection_bounds(measure(a), measure(b))
        sc, tc = B.intersection_claim(m, n)
        k = len(sort_symbols(a.alphabet + b.alphabet))
    elif op == "complement":
        a = _b_power(m - 1)
        res = minimize(ops.complement(a))
        sb, tb = B.complement_bounds(measure(a), 1)
        sc, tc = B.complement_claim(m)
        k = 1
    elif op in ("concat-case1", "concat-case2"):
        gen = W.concat_witness_case1 if op == "concat-case1" else W.concat_witness_case2
        a, b = gen(m, n)
        res = minimize(ops.concat(a, b))
        sb, tb = B.concat_bounds(measure(a), measure(b), corrected=corrected)
        k = len(sort_symbols(a.alphabet + b.alphabet))
        if op == "concat-case1":
            sc, tc = B.concat_case1_claim(m, n)
        else:
            # the case-2 witnesses are claimed to reach the general bounds
            sc, tc = sb.value, tb.value
    elif op == "concat-complete":
        return complete_concat_report(m, n, t0)
    elif op == "star":
        a = W.star_witness(m)
        res = minimize(ops.star(a))
        sb, tb = B.star_bounds(measure(a))
        sc, tc = _star_claim(m)
        k = 3
    elif op == "reversal":
        a = W.reversal_witness(m)
        res = minimize(ops.reversal(a))
        sb, tb, _ = B.reversal_bounds(measure(a))
        sc, tc = B.reversal_claim(m)
        k = 2
    else:
        raise ValueError(f"unknown operation {op!r}")
    return _report(op, m, n, k, int(sb), sc, res, int(tb), tc, t0)


def complete_concat_report(m: int, n: int, t0: float | None = None) -> BoundReport:
    """Concatenation of the completed case-1 witnesses, counted as complete DFAs.

    The bound column holds the corrected complete-DFA formula and the claim
    column the earlier one; both are evaluated on the completed operand
    sizes ``m+1`` and ``n+1``.
    """
    t0 = time.perf_counter() if t0 is None else t0
    a, b = W.concat_witness_case1(m, n)
    ca, cb = complete(a), complete(b)
    count = complete_state_count(ops.concat(ca, cb))
    ma = measure(a)
    f_at = list(ma.f_at) + [ma.f]  # the sink is appended last and is not final
    old = B.concat_state_bound_complete_old(m + 1, n + 1, 2, f_at, ma.f).value
    new = B.concat_state_bound_complete(m + 1, n + 1, 2, f_at, ma.f).value
    return _report("concat-complete", m, n, 2, new, old, count, None, None, t0)


def _check_scale(op: str, ms, ns) -> None:
    limit = MAX_PARAM[op]
    if max(ms) > limit or (ns and max(ns) > limit):
        raise ScaleError(f"{op}: parameters above {limit} are out of desk scale")


def _cell_args(op: str, ms, ns):
    for m in ms:
        for n in ns if op in BINARY_GRID_OPS else [None]:
            yield op, m, n


def _valid_cell(op: str, m: int, n: int | None) -> bool:
    if op == "concat-case2":
        return m >= 2 and n > m + 1
    if op == "concat-case1":
        return m >= 1 and n >= 2 and m + 1 >= n
    return True


def _run(args):
    op, m, n, corrected = args
    return verify_cell(op, m, n, corrected)


def verify_grid(op: str, ms, ns=None, corrected: bool = False, jobs: int = 1) -> list[BoundReport]:
    """One report per valid grid cell, in (m, n) order whatever ``jobs`` is."""
    if op not in GRID_OPS:
        raise ValueError(f"unknown operation {op!r}")
    ms, ns = list(ms), list(ns or [])
    if op in BINARY_GRID_OPS and not ns:
        raise ValueError(f"{op} needs an n range")
    _check_scale(op, ms, ns)
    cells = [(o, m, n, corrected) for o, m, n in _cell_args(op, ms, ns) if _valid_cell(o, m, n)]
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run, cells))
    return [_run(c) for c in cells]


def random_reports(seed: int, count: int, corrected: bool = False) -> list[BoundReport]:
    """Soundness sweep on random minimal acyclic DFAs (pairs for binary operations).

    Formulas are skipped outside their domain: two-operand product bounds
    need both operands with at least 2 states, reversal needs at least two
    letters.
    """
    rng = random.Random(seed)
    rows = []
    for _ in range(count):
        a = W.random_acyclic_dfa(rng)
        b = W.random_acyclic_dfa(rng)
        rows.extend(random_case_reports(a, b, corrected))
    return rows


def random_case_reports(a: Dfa, b: Dfa, corrected: bool = False) -> list[BoundReport]:
    ma, mb = measure(a), measure(b)
    kab = len(sort_symbols(a.alphabet + b.alphabet))
    ka = len(a.alphabet)
    rows = []

    def add(op, m, n, k, sb, tb, build):
        t0 = time.perf_counter()
        res = minimize(build())
        rows.append(_report(f"random-{op}", m, n, k, int(sb), None, res, int(tb), None, t0))

    if ma.m >= 2 and mb.m >= 2:
        add("union", ma.m, mb.m, kab, *B.union_bounds(ma, mb), lambda: ops.union(a, b))
        add("intersection", ma.m, mb.m, kab, *B.intersection_bounds(ma, mb), lambda: ops.intersection(a, b))
    add("concat", ma.m, mb.m, kab, *B.concat_bounds(ma, mb, corrected=corrected), lambda: ops.concat(a, b))
    add("complement", ma.m, None, ka, *B.complement_bounds(ma, ka), lambda: ops.complement(a))
    add("star", ma.m, None, ka, *B.star_bounds(ma), lambda: ops.star(a))
    if ka >= 2:
        sb, tb, _ = B.reversal_bounds(ma)
        add("reversal", ma.m, None, ka, sb, tb, lambda: ops.reversal(a))
    return rows


def parse_range(text: str) -> list[int]:
    """``"2..5"`` -> [2, 3, 4, 5]; ``"4"`` -> [4]; ``"2,4,7"`` -> [2, 4, 7]."""
    out: list[int] = []
    for part in text.split(","):
        lo, sep, hi = part.partition("..")
        if sep:
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    if not out:
        raise ValueError(f"empty range {text!r}")
    return out


def _binary_operands_with(states: int) -> list[Dfa]:
    """Every minimal DFA over {a, b} with ``states`` states and forward-only transitions."""
    slots = [(p, s) for p in range(states - 1) for s in "ab"]
    found = {}
    for targets in product(*[[None, *range(p + 1, states)] for p, _ in slots]):
        delta = {slot: q for slot, q in zip(slots, targets) if q is not None}
        for mask in range(1 << (states - 1)):
            finals = {states - 1} | {i for i in range(states - 1) if mask >> i & 1}
            d = minimize(Dfa.build(states, "ab", finals, delta))
            if d.n == states:
                found[d] = None
    return list(found)


def _mutate(rng: random.Random, d: Dfa) -> Dfa:
    """Change one transition or final flag, keeping transitions forward in topological order."""
    d = renumber(d, topological_order(d))
    delta = dict(d.delta)
    finals = set(d.finals)
    if rng.random() < 0.25 and d.n > 1:
        finals ^= {rng.randrange(d.n - 1)}
    else:
        p = rng.randrange(d.n - 1)
        s = rng.choice("ab")
        if (p, s) in delta and rng.random() < 0.3:
            del delta[p, s]
        else:
            delta[p, s] = rng.randint(p + 1, d.n - 1)
    return Dfa.build(d.n, "ab", finals, delta)


def binary_concat_search(
    m: int, n: int, seed: int = 0, restarts: int = 6, steps: int = 100
) -> tuple[int, int, Dfa, Dfa]:
    """Best-effort largest concatenation over the fixed alphabet {a, b}.

    Every minimal ``m``-state left operand is tried against ``n``-state right
    operands improved by seeded hill climbing. Returns ``(largest measured
    state count, largest state bound over the left operands with k = 2,
    A, B)`` where ``(A, B)`` reaches the measured count.
    """
    rng = random.Random(seed)
    best: tuple[int, Dfa, Dfa] | None = None
    worst_bound = 0
    for a in _binary_operands_with(m):
        ma = measure(a)
        worst_bound = max(worst_bound, B.concat_state_bound_incomplete(m, n, 2, ma.f_at, ma.f).value)
        for _ in range(restarts):
            b = W.random_acyclic_dfa(rng, max_states=n, max_symbols=2, density=0.9)
            while b.n != n or len(b.alphabet) != 2:
                b = W.random_acyclic_dfa(rng, max_states=n, max_symbols=2, density=0.9)
            current = minimize(ops.concat(a, b)).n
            for _ in range(steps):
                cand = minimize(_mutate(rng, b))
                if cand.n != n or not cand.finals:
                    continue
                value = minimize(ops.concat(a, cand)).n
                if value >= current:
                    b, current = cand, value
            if best is None or current > best[0]:
                best = (current, a, b)
    return best[0], worst_bound, best[1], best[2]

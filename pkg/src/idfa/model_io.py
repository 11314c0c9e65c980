"""Line-oriented text format for DFAs, and CSV/Markdown writers for reports.

DFA documents look like::

    alphabet: b c a_1_1
    states: 4
    initial: 0
    finals: 2 3
    trans:
    0 b 1
    1 c 2

Lines starting with ``#`` are comments.
"""

from __future__ import annotations

import csv
import io
from typing import Iterable, Sequence

from .automata import SYMBOL_RE, Dfa, sort_symbols


class ParseError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def serialize_dfa(d: Dfa) -> str:
    lines = [
        "alphabet: " + " ".join(d.alphabet),
        f"states: {d.n}",
        "initial: 0",
        "finals: " + " ".join(str(f) for f in sorted(d.finals)),
        "trans:",
    ]
    lines += [f"{p} {a} {q}" for p, a, q in d.transitions]
    return "\n".join(line.rstrip() for line in lines) + "\n"


_HEADERS = ("alphabet", "states", "initial", "finals")


def _ints(lineno: int, fields: Sequence[str]) -> list[int]:
    try:
        return [int(x) for x in fields]
    except ValueError:
        raise ParseError(lineno, f"expected integers, got {' '.join(fields)!r}") from None


def parse_dfa(text: str) -> Dfa:
    header: dict[str, list[str]] = {}
    delta: dict[tuple[int, str], int] = {}
    in_trans = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not in_trans:
            key, sep, rest = line.partition(":")
            key = key.strip()
            if not sep or key not in _HEADERS + ("trans",):
                raise ParseError(lineno, f"unexpected line {line!r}")
            if key == "trans":
                if rest.strip():
                    raise ParseError(lineno, "'trans:' takes no values")
                missing = [h for h in _HEADERS if h not in header]
                if missing:
                    raise ParseError(lineno, f"missing header(s): {', '.join(missing)}")
                in_trans = True
                n = _ints(lineno, header["states"])
                initial = _ints(lineno, header["initial"])
                if len(n) != 1 or n[0] < 1:
                    raise ParseError(lineno, "'states' must be one positive integer")
                if initial != [0]:
                    raise ParseError(lineno, "initial state must be 0")
                n = n[0]
                alphabet = header["alphabet"]
                for sym in alphabet:
                    if not SYMBOL_RE.match(sym):
                        raise ParseError(lineno, f"bad symbol {sym!r}")
                known = set(alphabet)
                finals = _ints(lineno, header["finals"])
                for f in finals:
                    if not 0 <= f < n:
                        raise ParseError(lineno, f"final state {f} out of range")
                continue
            if key in header:
                raise ParseError(lineno, f"duplicate header {key!r}")
            header[key] = rest.split()
            continue
        fields = line.split()
        if len(fields) != 3:
            raise ParseError(lineno, f"expected '<src> <symbol> <dst>', got {line!r}")
        src, sym, dst = fields
        p, q = _ints(lineno, [src, dst])
        if sym not in known:
            raise ParseError(lineno, f"unknown symbol {sym!r}")
        if not (0 <= p < n and 0 <= q < n):
            raise ParseError(lineno, "state out of range")
        if (p, sym) in delta:
            raise ParseError(lineno, f"nondeterministic on ({p},{sym})")
        delta[p, sym] = q
    if not in_trans:
        raise ParseError(len(text.splitlines()) + 1, "missing 'trans:' section")
    return Dfa.build(n, sort_symbols(alphabet), finals, delta)


def read_dfa(path) -> Dfa:
    with open(path, encoding="utf-8") as fh:
        return parse_dfa(fh.read())


def write_dfa(path, d: Dfa) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_dfa(d))


CSV_COLUMNS = (
    "op", "m", "n", "k",
    "state_bound", "state_claim", "state_measured",
    "trans_bound", "trans_claim", "trans_measured",
    "state_verdict", "trans_verdict", "ms",
)


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.1f}" if not value.is_integer() else str(int(value))
    return str(value)


def report_rows(reports: Iterable) -> list[list[str]]:
    return [[_cell(getattr(r, c)) for c in CSV_COLUMNS] for r in reports]


def reports_to_csv(reports: Iterable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    writer.writerows(report_rows(reports))
    return buf.getvalue()


def reports_to_markdown(reports: Iterable) -> str:
    lines = ["| " + " | ".join(CSV_COLUMNS) + " |", "|" + "---|" * len(CSV_COLUMNS)]
    lines += ["| " + " | ".join(row) + " |" for row in report_rows(reports)]
    return "\n".join(lines) + "\n"

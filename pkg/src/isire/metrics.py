"""Preciseness measures: language size, MDL data cost, combinatorial cardinality."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from itertools import product
from typing import Sequence

from .corpus import SampleSet
from .expr import Atom, Concat, Disjunction, Epsilon, Expr, Unary, render, symbols
from .semantics import accepts_all, compile

__all__ = [
    "DatacostUndefined", "CcUnsupported", "MetricsReport",
    "count_words_by_length", "horizon", "language_size", "datacost", "cc",
    "compare", "reports_to_json", "format_table",
]


class DatacostUndefined(ValueError):
    def __init__(self, length: int, message: str):
        super().__init__(message)
        self.length = length


class CcUnsupported(ValueError):
    pass


def count_words_by_length(e: Expr, n: int) -> list:
    """Exact number of distinct words of each length 0..n in L(e)."""
    auto = compile(e)
    finals = auto.finals
    weights = {0: 1}
    counts = []
    for i in range(n + 1):
        counts.append(sum(c for s, c in weights.items() if s in finals))
        if i == n:
            break
        nxt: dict = {}
        for s, c in weights.items():
            for t in auto.delta[s].values():
                nxt[t] = nxt.get(t, 0) + c
        weights = nxt
    return counts


def horizon(e: Expr) -> int:
    """Longest word length counted by the metrics: twice the alphabet, plus one."""
    return 2 * len(symbols(e)) + 1


def language_size(e: Expr) -> int:
    return sum(count_words_by_length(e, horizon(e)))


def _log2_binomial(n: int, k: int) -> float:
    k = min(k, n - k)
    # the direct product keeps full precision even when n is astronomically large
    return math.fsum(math.log2(n - k + j) - math.log2(j) for j in range(1, k + 1))


def datacost(e: Expr, s: SampleSet) -> float:
    """Bits needed to pick the samples out of the words of the same length.

    Sums ``2*log2(i)`` over lengths 1..n and ``log2 C(|L=i|, |S=i|)`` over
    lengths 0..n, with n from :func:`horizon` and distinct sample words.
    Undefined (raises :class:`DatacostUndefined`) when ``e`` rejects a sample.
    """
    n = horizon(e)
    spectrum = count_words_by_length(e, n)
    auto = compile(e)
    per_length = [0] * (n + 1)
    for word in sorted(s.distinct(), key=lambda w: (len(w), w)):
        if not auto.run(word):
            raise DatacostUndefined(
                len(word), f"sample {' '.join(word) or 'eps'!r} of length {len(word)} is not accepted"
            )
        # words longer than the horizon are not counted
        if len(word) <= n:
            per_length[len(word)] += 1
    total = math.fsum(2 * math.log2(i) for i in range(1, n + 1))
    for i, (have, words) in enumerate(zip(per_length, spectrum)):
        if have > words:
            raise DatacostUndefined(i, f"{have} samples but only {words} words of length {i}")
        total += _log2_binomial(words, have)
    return total


# -- combinatorial cardinality ---------------------------------------------------

def _chain_length(e) -> int | None:
    """Number of symbols in an operator-decorated chain, or None if not a chain."""
    if isinstance(e, Unary):
        return _chain_length(e.child) if isinstance(e.child, (Atom, Epsilon)) else None
    if isinstance(e, Atom):
        return 1
    if isinstance(e, Epsilon):
        return 0
    if isinstance(e, Concat):
        total = 0
        for c in e.children:
            n = _chain_length(c)
            if n is None:
                return None
            total += n
        return total
    return None


def _shuffle_operand(e) -> list:
    """Alternatives for one ``&`` operand, as chain lengths."""
    n = _chain_length(e)
    if n is not None:
        return [n]
    if isinstance(e, Unary) and isinstance(e.child, Disjunction):
        e = e.child
    if isinstance(e, Disjunction):
        out = []
        for alt in e.children:
            out.extend(_shuffle_operand(alt))
        return out
    raise CcUnsupported(f"cannot count arrangements of {render(e)!r} inside an interleaving")


def _multinomial(lengths) -> int:
    total = math.factorial(sum(lengths))
    for n in lengths:
        total //= math.factorial(n)
    return total


def cc(e: Expr) -> int:
    """Combinatorial cardinality.

    Unary operators are transparent, disjunction adds, concatenation
    multiplies.  An interleaving of chains counts their merges, which is the
    multinomial of the chain lengths; disjunctive operands contribute one
    term per choice of alternatives.
    """
    if isinstance(e, (Atom, Epsilon)):
        return 1
    if isinstance(e, Unary):
        return cc(e.child)
    if isinstance(e, Disjunction):
        return sum(cc(c) for c in e.children)
    if isinstance(e, Concat):
        return math.prod(cc(c) for c in e.children)
    operands = [_shuffle_operand(c) for c in e.children]
    return sum(_multinomial(choice) for choice in product(*operands))


# -- comparison reports ---------------------------------------------------------

@dataclass
class MetricsReport:
    name: str
    expression: str
    language_size: int | None = None
    datacost: float | None = None
    cc: int | None = None
    covers_samples: bool = False
    rejected: list = field(default_factory=list)
    warnings: list = field(default_factory=list)


def measure(name: str, e: Expr, s: SampleSet) -> MetricsReport:
    row = MetricsReport(name, render(e))
    row.language_size = language_size(e)
    try:
        row.datacost = datacost(e, s)
    except DatacostUndefined as exc:
        row.warnings.append(f"datacost-undefined: {exc}")
    try:
        row.cc = cc(e)
    except CcUnsupported as exc:
        row.warnings.append(f"cc-unsupported: {exc}")
    cov = accepts_all(e, s)
    row.covers_samples = cov.ok
    row.rejected = [" ".join(w) for w in cov.rejected]
    return row


def compare(s: SampleSet, candidates: Sequence) -> list:
    """One report per ``(name, expression)`` candidate, in the given order."""
    return [measure(name, e, s) for name, e in candidates]


def report_to_dict(row: MetricsReport) -> dict:
    d = asdict(row)
    for key in ("language_size", "cc"):
        if d[key] is not None:
            d[key] = str(d[key])
    if d["datacost"] is not None:
        d["datacost"] = round(d["datacost"], 6)
    return d


def reports_to_json(rows) -> list:
    return [report_to_dict(r) for r in rows]


def format_table(rows) -> str:
    """Aligned ``Method | LS | datacost | CC`` table plus a coverage column."""
    header = ("Method", "LS", "datacost", "CC", "covers")
    body = []
    for r in rows:
        body.append((
            r.name,
            "-" if r.language_size is None else str(r.language_size),
            "undefined" if r.datacost is None else f"{r.datacost:.2f}",
            "unsupported" if r.cc is None else str(r.cc),
            "yes" if r.covers_samples else "no",
        ))
    widths = [max(len(row[i]) for row in [header] + body) for i in range(len(header))]
    lines = []
    for k, row in enumerate([header] + body):
        cells = [row[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(row[1:], widths[1:])]
        lines.append(" | ".join(cells).rstrip())
        if k == 0:
            lines.append("-+-".join("-" * w for w in widths))
    return "\n".join(lines)

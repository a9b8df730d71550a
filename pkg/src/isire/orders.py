"""Order relations observed in a sample set, and per-symbol repetition operators."""

from __future__ import annotations

from .corpus import SampleSet

__all__ = ["por", "cs", "ncs", "cnt_oper", "reverse", "sorted_pairs"]


def por(s: SampleSet) -> frozenset:
    """Pairs (x, y), x != y, such that x occurs somewhere before y in one sample."""
    pairs = set()
    for word in s.distinct():
        seen = set()
        for y in word:
            for x in seen:
                if x != y:
                    pairs.add((x, y))
            seen.add(y)
    return frozenset(pairs)


def reverse(pairs) -> frozenset:
    return frozenset((y, x) for x, y in pairs)


def cs(s: SampleSet) -> frozenset:
    """Pairs observed in both orders (the conflicts)."""
    p = por(s)
    return frozenset(q for q in p if (q[1], q[0]) in p)


def ncs(s: SampleSet) -> frozenset:
    """Pairs observed in one order only."""
    p = por(s)
    return frozenset(q for q in p if (q[1], q[0]) not in p)


def cnt_oper(s: SampleSet) -> dict:
    """Map each symbol to ``1``, ``?``, ``*`` or ``+`` from its per-sample counts.

    The minimum runs over all samples, so a symbol missing from any sample
    gets a minimum of zero.

    >>> cnt_oper(SampleSet.from_chars(["aabd", "abcd", "bbcd"]))
    {'a': '*', 'b': '+', 'c': '?', 'd': '1'}
    """
    lo: dict = {}
    hi: dict = {}
    for word in s.samples:
        counts: dict = {}
        for x in word:
            counts[x] = counts.get(x, 0) + 1
        for x in s.alphabet:
            c = counts.get(x, 0)
            lo[x] = min(lo.get(x, c), c)
            hi[x] = max(hi.get(x, c), c)
    ops = {}
    for x in sorted(s.alphabet):
        if lo[x] >= 1:
            ops[x] = "1" if hi[x] == 1 else "+"
        else:
            ops[x] = "?" if hi[x] == 1 else "*"
    return ops


def sorted_pairs(pairs) -> list:
    return [list(p) for p in sorted(pairs)]

"""Membership for regular expressions with interleaving.

Expressions compile bottom-up into epsilon-free automata in the Glushkov
style: a single initial state with no incoming transitions.  That property
survives concatenation, disjunction, the unary operators and the
asynchronous product used for ``&``, so no construction ever needs
epsilon moves.  For single-occurrence expressions whose ``&`` operands use
disjoint symbols the result is already deterministic; anything else goes
through a subset construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .corpus import SampleSet
from .expr import Atom, Concat, Disjunction, Epsilon, Expr, Interleave, Unary

__all__ = ["PositionAutomaton", "Coverage", "compile", "matches", "accepts_all"]


class _Nfa:
    """Mutable construction-time automaton; state 0 is initial."""

    __slots__ = ("trans", "finals")

    def __init__(self, trans, finals):
        self.trans = trans  # list[dict[str, set[int]]]
        self.finals = finals  # set[int]

    @property
    def size(self):
        return len(self.trans)


def _atom(name):
    return _Nfa([{name: {1}}, {}], {1})


def _epsilon():
    return _Nfa([{}], {0})


def _shifted(trans, offset, skip_init):
    """Copy transitions of non-initial states, renumbering state k>0 to k+offset."""
    out = []
    for k, row in enumerate(trans):
        if skip_init and k == 0:
            continue
        out.append({x: {t + offset for t in ts} for x, ts in row.items()})
    return out


def _concat(a, b):
    off = a.size - 1
    trans = [{x: set(ts) for x, ts in row.items()} for row in a.trans]
    trans += _shifted(b.trans, off, skip_init=True)
    b_init = {x: {t + off for t in ts} for x, ts in b.trans[0].items()}
    for f in a.finals:
        for x, ts in b_init.items():
            trans[f].setdefault(x, set()).update(ts)
    finals = {f + off for f in b.finals if f != 0}
    if 0 in b.finals:
        finals |= a.finals
    return _Nfa(trans, finals)


def _union(a, b):
    off_a, off_b = 0, a.size - 1
    trans = [{}]
    trans += _shifted(a.trans, off_a, skip_init=True)
    trans += _shifted(b.trans, off_b, skip_init=True)
    for x, ts in a.trans[0].items():
        trans[0].setdefault(x, set()).update(t + off_a for t in ts)
    for x, ts in b.trans[0].items():
        trans[0].setdefault(x, set()).update(t + off_b for t in ts)
    finals = {f + off_a for f in a.finals if f} | {f + off_b for f in b.finals if f}
    if 0 in a.finals or 0 in b.finals:
        finals.add(0)
    return _Nfa(trans, finals)


def _repeat(a, op):
    trans = [{x: set(ts) for x, ts in row.items()} for row in a.trans]
    finals = set(a.finals)
    if op in ("*", "+"):
        for f in a.finals:
            for x, ts in a.trans[0].items():
                trans[f].setdefault(x, set()).update(ts)
    if op in ("*", "?"):
        finals.add(0)
    return _Nfa(trans, finals)


def _shuffle(a, b):
    """Asynchronous product: each step moves exactly one operand."""
    ids = {(0, 0): 0}
    todo = [(0, 0)]
    trans = [{}]
    finals = set()
    while todo:
        p, q = pair = todo.pop()
        me = ids[pair]
        if p in a.finals and q in b.finals:
            finals.add(me)
        moves = [((t, q), x) for x, ts in a.trans[p].items() for t in ts]
        moves += [((p, t), x) for x, ts in b.trans[q].items() for t in ts]
        for target, x in moves:
            if target not in ids:
                ids[target] = len(trans)
                trans.append({})
                todo.append(target)
            trans[me].setdefault(x, set()).add(ids[target])
    return _Nfa(trans, finals)


def _build(e):
    if isinstance(e, Epsilon):
        return _epsilon()
    if isinstance(e, Atom):
        return _atom(e.name)
    if isinstance(e, Unary):
        return _repeat(_build(e.child), e.op)
    parts = [_build(c) for c in e.children]
    combine = {Concat: _concat, Disjunction: _union, Interleave: _shuffle}[type(e)]
    acc = parts[0]
    for nxt in parts[1:]:
        acc = combine(acc, nxt)
    return acc


@dataclass(frozen=True)
class PositionAutomaton:
    """A deterministic automaton; state 0 is initial.

    ``determinized`` records whether a subset construction was needed.
    """

    delta: tuple  # tuple of dict[str, int]
    finals: frozenset
    determinized: bool = False
    deterministic: bool = True

    @property
    def initial(self) -> int:
        return 0

    @property
    def n_states(self) -> int:
        return len(self.delta)

    def run(self, word: Sequence[str]) -> bool:
        state = 0
        for x in word:
            state = self.delta[state].get(x)
            if state is None:
                return False
        return state in self.finals


def _determinize(nfa):
    start = frozenset([0])
    ids = {start: 0}
    todo = [start]
    delta = [{}]
    finals = set()
    while todo:
        subset = todo.pop()
        me = ids[subset]
        if subset & nfa.finals:
            finals.add(me)
        step = {}
        for s in subset:
            for x, ts in nfa.trans[s].items():
                step.setdefault(x, set()).update(ts)
        for x in sorted(step):
            target = frozenset(step[x])
            if target not in ids:
                ids[target] = len(delta)
                delta.append({})
                todo.append(target)
            delta[me][x] = ids[target]
    return delta, finals


@lru_cache(maxsize=256)
def compile(e: Expr) -> PositionAutomaton:
    nfa = _build(e)
    if all(len(ts) <= 1 for row in nfa.trans for ts in row.values()):
        delta = tuple({x: next(iter(ts)) for x, ts in row.items() if ts} for row in nfa.trans)
        return PositionAutomaton(delta, frozenset(nfa.finals))
    delta, finals = _determinize(nfa)
    return PositionAutomaton(tuple(delta), frozenset(finals), determinized=True)


def matches(e: Expr, w: Sequence[str]) -> bool:
    return compile(e).run(w)


@dataclass
class Coverage:
    ok: bool
    rejected: list

    def __bool__(self):
        return self.ok


def accepts_all(e: Expr, s: SampleSet) -> Coverage:
    """Check every sample; rejected samples are listed once each, in order."""
    auto = compile(e)
    rejected = []
    for word in s.samples:
        if word not in rejected and not auto.run(word):
            rejected.append(word)
    return Coverage(not rejected, rejected)

"""Single-occurrence automata and their generalized (contracted) form.

A node other than ``SRC``/``SNK`` is identified by the frozenset of alphabet
symbols it covers and carries an expression label.  Covers of distinct
nodes never overlap, which is what makes contraction well defined.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .corpus import SampleSet
from .expr import Atom, Expr, interleave, render, unary

__all__ = [
    "SRC", "SNK", "Soa", "LevelAssignment",
    "ContractionError", "CyclicAutomatonError", "MalformedAutomatonError",
    "build_soa", "contract", "level_assignment", "scc_collapse",
    "strongly_connected_components", "to_dot",
]

SRC = "src"
SNK = "snk"


class ContractionError(ValueError):
    pass


class CyclicAutomatonError(ValueError):
    pass


class MalformedAutomatonError(ValueError):
    pass


def _key(node):
    """Sort key: src first, snk last, others by smallest covered symbol."""
    if node == SRC:
        return (0, "")
    if node == SNK:
        return (2, "")
    return (1, min(node), tuple(sorted(node)))


@dataclass(frozen=True, eq=False)
class Soa:
    labels: Mapping  # frozenset cover -> Expr
    edges: frozenset  # of (node, node)

    @property
    def nodes(self) -> list:
        return [SRC] + sorted(self.labels, key=_key) + [SNK]

    def successors(self) -> dict:
        out = {v: set() for v in self.nodes}
        for u, v in self.edges:
            out[u].add(v)
        return out

    def predecessors(self) -> dict:
        out = {v: set() for v in self.nodes}
        for u, v in self.edges:
            out[v].add(u)
        return out

    def name(self, node) -> str:
        if node in (SRC, SNK):
            return node
        return render(self.labels[node])

    def named_edges(self) -> list:
        """Edges as (label text, label text), in a stable order."""
        return [
            (self.name(u), self.name(v))
            for u, v in sorted(self.edges, key=lambda e: (_key(e[0]), _key(e[1])))
        ]

    def __eq__(self, other):
        if not isinstance(other, Soa):
            return NotImplemented
        return dict(self.labels) == dict(other.labels) and self.edges == other.edges


def build_soa(s: SampleSet) -> Soa:
    """2T-INF: one node per symbol, an edge for every adjacent pair."""
    labels = {frozenset([x]): Atom(x) for x in s.alphabet}
    edges = set()
    for word in s.distinct():
        path = [SRC] + [frozenset([x]) for x in word] + [SNK]
        edges.update(zip(path, path[1:]))
    return Soa(labels, frozenset(edges))


def contract(a: Soa, cover, label: Expr) -> Soa:
    """Merge every node whose cover lies inside ``cover`` into one node.

    Edges inside the group (self-loops included) disappear; edges crossing
    the group boundary are redirected to the new node.
    """
    cover = frozenset(cover)
    group = set()
    for node in a.labels:
        if node <= cover:
            group.add(node)
        elif node & cover:
            raise ContractionError(
                f"cover {sorted(cover)} splits node {sorted(node)}"
            )
    if not group or frozenset().union(*group) != cover:
        raise ContractionError(f"cover {sorted(cover)} is not a union of nodes")

    def move(v):
        return cover if v in group else v

    labels = {k: v for k, v in a.labels.items() if k not in group}
    labels[cover] = label
    edges = set()
    for u, v in a.edges:
        u, v = move(u), move(v)
        if u == v == cover:
            continue
        edges.add((u, v))
    return Soa(labels, frozenset(edges))


def strongly_connected_components(a: Soa) -> list:
    """Tarjan's algorithm (iterative); components in a deterministic order."""
    succ = {v: sorted(ws, key=_key) for v, ws in a.successors().items()}
    index, low, on_stack = {}, {}, set()
    stack, comps = [], []
    counter = 0
    for root in a.nodes:
        if root in index:
            continue
        work = [(root, iter(succ[root]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ[w])))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp, key=_key))
    return sorted(comps, key=lambda c: _key(c[0]))


def scc_collapse(a: Soa, ops: Mapping, collapsed: list | None = None) -> Soa:
    """Contract every cycle so that the automaton becomes acyclic.

    A strongly connected group of nodes becomes one node labeled by the
    interleaving of the member labels; a lone node with a self-loop just
    loses the loop.  Bare symbol labels are decorated with ``ops`` on the
    way.  Each group of two or more nodes is reported through ``collapsed``
    as the sorted list of symbols it covers.
    """
    loops = {u for u, v in a.edges if u == v}
    for comp in strongly_connected_components(a):
        if len(comp) == 1 and comp[0] not in loops:
            continue
        if SRC in comp or SNK in comp:
            raise MalformedAutomatonError("src or snk lies on a cycle")
        parts = []
        for node in comp:
            label = a.labels[node]
            if isinstance(label, Atom) and label.name in ops:
                label = unary(label, ops[label.name])
            parts.append(label)
        cover = frozenset().union(*comp)
        a = contract(a, cover, interleave(*parts))
        if len(comp) > 1 and collapsed is not None:
            collapsed.append(sorted(cover))
    return a


@dataclass(frozen=True)
class LevelAssignment:
    levels: Mapping  # node -> int
    skip_levels: frozenset

    def at(self, level: int) -> list:
        return sorted((v for v, n in self.levels.items() if n == level), key=_key)


def level_assignment(a: Soa) -> LevelAssignment:
    """Longest-path level of every node from src, plus the skip levels.

    A level is skipped when some edge jumps from below it to above it and
    at least one node lives on it.
    """
    preds = a.predecessors()
    succ = a.successors()
    indeg = {v: len(ps - {v}) for v, ps in preds.items()}
    if any(v in preds[v] for v in preds):
        raise CyclicAutomatonError("automaton has a self-loop")
    ready = [v for v in a.nodes if indeg[v] == 0]
    order = []
    while ready:
        v = ready.pop()
        order.append(v)
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    if len(order) != len(indeg):
        raise CyclicAutomatonError("automaton has a cycle; collapse it first")
    level = {}
    for v in order:
        level[v] = max((level[u] + 1 for u in preds[v] if u in level), default=0)
    populated = set(level.values())
    skips = set()
    for u, w in a.edges:
        skips.update(n for n in range(level[u] + 1, level[w]) if n in populated)
    return LevelAssignment(level, frozenset(skips))


def to_dot(a: Soa, name: str = "soa") -> str:
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    ids = {v: f"n{i}" for i, v in enumerate(a.nodes)}
    for v in a.nodes:
        text = a.name(v).replace("\\", "\\\\").replace('"', '\\"')
        shape = "box" if v in (SRC, SNK) else "ellipse"
        lines.append(f'  {ids[v]} [label="{text}", shape={shape}];')
    for u, v in sorted(a.edges, key=lambda e: (_key(e[0]), _key(e[1]))):
        lines.append(f"  {ids[u]} -> {ids[v]};")
    lines.append("}")
    return "\n".join(lines)

"""Conflict graph, its components, independent-set layering and ordering.

Every choice point (component order, vertex tie-breaks, topological order)
resolves to the lexicographically smallest symbol, so results are
reproducible across runs and platforms.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "ConflictGraph", "GraphConsistencyError",
    "build_conflict_graph", "connected_components", "extract_mis_layers",
    "maximal_independent_set", "filter_pairs", "topo_order",
]


class GraphConsistencyError(ValueError):
    pass


@dataclass(frozen=True)
class ConflictGraph:
    vertices: frozenset
    edges: frozenset  # of 2-element frozensets

    def __post_init__(self):
        for e in self.edges:
            if len(e) != 2:
                raise GraphConsistencyError(f"bad edge {sorted(e)}")
            if not e <= self.vertices:
                raise GraphConsistencyError(f"edge {sorted(e)} leaves the vertex set")

    def neighbors(self) -> dict:
        adj = {v: set() for v in self.vertices}
        for e in self.edges:
            x, y = tuple(e)
            adj[x].add(y)
            adj[y].add(x)
        return adj

    def induced(self, keep) -> "ConflictGraph":
        keep = frozenset(keep)
        return ConflictGraph(keep, frozenset(e for e in self.edges if e <= keep))

    def sorted_edges(self) -> list:
        return sorted(sorted(e) for e in self.edges)


def build_conflict_graph(alphabet, cs_pairs) -> ConflictGraph:
    alphabet = frozenset(alphabet)
    edges = set()
    for x, y in cs_pairs:
        if x not in alphabet or y not in alphabet:
            raise GraphConsistencyError(f"pair ({x}, {y}) uses a symbol outside the alphabet")
        if x != y:
            edges.add(frozenset((x, y)))
    return ConflictGraph(alphabet, frozenset(edges))


def connected_components(g: ConflictGraph) -> list:
    """Maximal connected subgraphs, ordered by their smallest vertex."""
    adj = g.neighbors()
    seen = set()
    comps = []
    for start in sorted(g.vertices):
        if start in seen:
            continue
        members = {start}
        todo = [start]
        while todo:
            v = todo.pop()
            for w in adj[v]:
                if w not in members:
                    members.add(w)
                    todo.append(w)
        seen |= members
        comps.append(g.induced(members))
    return comps


def maximal_independent_set(g: ConflictGraph) -> frozenset:
    """Greedy minimum-degree maximal independent set.

    Repeatedly take the vertex of least degree in what is left (ties go to
    the smallest name), then delete it together with its neighbours.
    """
    adj = {v: set(ws) for v, ws in g.neighbors().items()}
    chosen = set()
    while adj:
        v = min(adj, key=lambda x: (len(adj[x]), x))
        chosen.add(v)
        gone = {v} | adj[v]
        for u in gone:
            adj.pop(u, None)
        for ws in adj.values():
            ws -= gone
    return frozenset(chosen)


def extract_mis_layers(g: ConflictGraph) -> list:
    """Peel independent sets off ``g`` until no vertex is left."""
    layers = []
    while g.vertices:
        mis = maximal_independent_set(g)
        layers.append(mis)
        g = g.induced(g.vertices - mis)
    return layers


def filter_pairs(mis, pairs) -> frozenset:
    """The pairs whose both ends lie in ``mis``."""
    mis = frozenset(mis)
    return frozenset((x, y) for x, y in pairs if x in mis and y in mis)


def topo_order(vertices, arcs, broken: list | None = None) -> list:
    """Kahn's algorithm, always emitting the smallest ready vertex.

    A cycle does not stop the sort: when nothing is ready, the smallest
    remaining vertex is emitted anyway, its pending incoming arcs are
    dropped, and the vertex is appended to ``broken`` when a list is given.
    """
    remaining = set(vertices)
    preds = {v: set() for v in remaining}
    succs = {v: set() for v in remaining}
    for x, y in arcs:
        if x in remaining and y in remaining and x != y:
            preds[y].add(x)
            succs[x].add(y)
    order = []
    while remaining:
        ready = [v for v in remaining if not preds[v]]
        if ready:
            v = min(ready)
        else:
            v = min(remaining)
            if broken is not None:
                broken.append(v)
        order.append(v)
        remaining.discard(v)
        for w in succs[v]:
            preds[w].discard(v)
        for u in preds[v]:
            succs[u].discard(v)
        preds[v].clear()
    return order

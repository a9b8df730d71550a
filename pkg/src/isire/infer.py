"""Learning an ISIRE from positive samples.

The pipeline: repetition operators per symbol, order conflicts between
symbols, one interleaving subexpression per connected group of conflicting
symbols, then a single-occurrence automaton whose symbol nodes are
contracted into those subexpressions.  Reading the contracted automaton
level by level gives the concatenation of factors; factors on skipped or
crowded levels become optional.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import graphs, orders, soa
from .corpus import SampleSet
from .expr import EPS, Atom, Expr, append_optional, chain, concat, interleave, render, unary

__all__ = ["InferenceOutcome", "g2subre", "infer_isire", "baseline_interleave_all"]


@dataclass
class InferenceOutcome:
    expression: Expr
    warnings: list = field(default_factory=list)
    trace: dict | None = None

    @property
    def text(self) -> str:
        return render(self.expression)


def g2subre(component: graphs.ConflictGraph, ncs_pairs, ops, broken: list | None = None,
            trace: dict | None = None) -> Expr:
    """Subexpression for one connected component of the conflict graph.

    Each independent-set layer becomes one chain, ordered along the
    one-way pairs inside the layer; the chains are interleaved.
    """
    layers = graphs.extract_mis_layers(component)
    chains = []
    for layer in layers:
        order = graphs.topo_order(layer, graphs.filter_pairs(layer, ncs_pairs), broken)
        chains.append(order)
    if trace is not None:
        trace["layers"] = [sorted(layer) for layer in layers]
        trace["chains"] = chains
    return interleave(*(chain(c, ops) for c in chains))


def infer_isire(s: SampleSet, explain: bool = False) -> InferenceOutcome:
    if len(s) == 0:
        raise ValueError("cannot infer from an empty sample set")
    ops = orders.cnt_oper(s)
    por = orders.por(s)
    cs_pairs = frozenset(p for p in por if (p[1], p[0]) in por)
    ncs_pairs = por - cs_pairs
    g = graphs.build_conflict_graph(s.alphabet, cs_pairs)
    warnings = []
    trace = None
    if explain:
        trace = {
            "alphabet": sorted(s.alphabet),
            "operators": ops,
            "por": orders.sorted_pairs(por),
            "cs": orders.sorted_pairs(cs_pairs),
            "ncs": orders.sorted_pairs(ncs_pairs),
            "conflict_edges": g.sorted_edges(),
            "components": [],
        }

    subexprs = []
    for comp in graphs.connected_components(g):
        broken = []
        info = {} if explain else None
        sub = g2subre(comp, ncs_pairs, ops, broken, info)
        subexprs.append((comp.vertices, sub))
        for v in broken:
            warnings.append(
                f"cycle-broken: one-way orders among {{{', '.join(sorted(comp.vertices))}}} "
                f"form a cycle; {v} placed first"
            )
        if explain:
            info.update(vertices=sorted(comp.vertices), edges=comp.sorted_edges(),
                        subexpression=render(sub))
            trace["components"].append(info)

    a = soa.build_soa(s)
    if explain:
        trace["soa"] = a.named_edges()
        trace["soa_dot"] = soa.to_dot(a)
    for cover, sub in subexprs:
        a = soa.contract(a, cover, sub)
    if explain:
        trace["contracted"] = a.named_edges()
    collapsed = []
    a = soa.scc_collapse(a, ops, collapsed)
    for group in collapsed:
        warnings.append(f"scc-collapsed: {{{', '.join(group)}}} merged into one interleaving")
    levels = soa.level_assignment(a)

    factors = []
    for i in range(1, levels.levels[soa.SNK]):
        resident = levels.at(i)
        optional = i in levels.skip_levels or len(resident) > 1
        for node in resident:
            label = a.labels[node]
            factors.append(append_optional(label) if optional else label)
    result = concat(*factors) if factors else EPS

    if explain:
        trace["generalized_soa"] = a.named_edges()
        trace["generalized_soa_dot"] = soa.to_dot(a, "generalized")
        trace["levels"] = {a.name(v): n for v, n in
                           sorted(levels.levels.items(), key=lambda kv: (kv[1], soa._key(kv[0])))}
        trace["skip_levels"] = sorted(levels.skip_levels)
        trace["result"] = render(result)
    return InferenceOutcome(result, warnings, trace)


def baseline_interleave_all(s: SampleSet) -> Expr:
    """Every symbol, decorated with its repetition operator, interleaved."""
    if len(s) == 0:
        raise ValueError("cannot infer from an empty sample set")
    ops = orders.cnt_oper(s)
    return interleave(*(unary(Atom(x), ops[x]) for x in sorted(s.alphabet)))

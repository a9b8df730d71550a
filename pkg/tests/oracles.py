"""Slow, obviously-correct reference implementations used only by the tests.

Nothing here touches the automata in ``isire.semantics``: membership is
decided straight from the recursive language equations, and shuffles are
expanded by their defining recursion.
"""

from functools import lru_cache
from itertools import combinations, product

from isire.expr import Atom, Concat, Disjunction, Epsilon, Interleave, Unary


def shuffles(u, v):
    """All interleavings of tuples u and v: u&eps = {u}; au'&bv' = a(u'&v) | b(u&v')."""
    if not u:
        return {v}
    if not v:
        return {u}
    return {(u[0],) + w for w in shuffles(u[1:], v)} | {(v[0],) + w for w in shuffles(u, v[1:])}


def _binary(kind, children):
    node = children[0]
    for c in children[1:]:
        node = (kind, node, c)
    return node


def _lower(e):
    """Re-express the AST with binary nodes and ? / + spelled via | and *."""
    if isinstance(e, Epsilon):
        return ("eps",)
    if isinstance(e, Atom):
        return ("sym", e.name)
    if isinstance(e, Unary):
        c = _lower(e.child)
        if e.op == "*":
            return ("star", c)
        if e.op == "?":
            return ("or", c, ("eps",))
        return ("cat", c, ("star", c))
    kind = {Concat: "cat", Interleave: "shuf", Disjunction: "or"}[type(e)]
    return _binary(kind, [_lower(c) for c in e.children])


@lru_cache(maxsize=None)
def _member(node, w):
    kind = node[0]
    if kind == "eps":
        return w == ()
    if kind == "sym":
        return w == (node[1],)
    if kind == "or":
        return _member(node[1], w) or _member(node[2], w)
    if kind == "cat":
        return any(_member(node[1], w[:i]) and _member(node[2], w[i:]) for i in range(len(w) + 1))
    if kind == "star":
        if w == ():
            return True
        return any(_member(node[1], w[:i]) and _member(node, w[i:]) for i in range(1, len(w) + 1))
    # shuf: split the positions of w into two subsequences
    n = len(w)
    for k in range(n + 1):
        for left in combinations(range(n), k):
            chosen = set(left)
            u = tuple(w[i] for i in range(n) if i in chosen)
            v = tuple(w[i] for i in range(n) if i not in chosen)
            if _member(node[1], u) and _member(node[2], v):
                return True
    return False


def naive_matches(e, w):
    return _member(_lower(e), tuple(w))


def words_upto(alphabet, n):
    for k in range(n + 1):
        yield from product(sorted(alphabet), repeat=k)


def naive_spectrum(e, alphabet, n):
    counts = [0] * (n + 1)
    for w in words_upto(alphabet, n):
        if naive_matches(e, w):
            counts[len(w)] += 1
    return counts


def language_upto(e, alphabet, n):
    return {w for w in words_upto(alphabet, n) if naive_matches(e, w)}


def independent_sets(vertices, edges):
    vs = sorted(vertices)
    out = []
    for k in range(len(vs) + 1):
        for combo in combinations(vs, k):
            if all(frozenset(p) not in edges for p in combinations(combo, 2)):
                out.append(frozenset(combo))
    return out


def longest_paths(nodes, edges, src):
    """Longest path length from src to each node, by enumerating every path."""
    succ = {v: [w for u, w in edges if u == v] for v in nodes}
    best = {src: 0}
    stack = [(src, 0)]
    while stack:
        v, d = stack.pop()
        for w in succ[v]:
            if d + 1 > best.get(w, -1):
                best[w] = d + 1
            stack.append((w, d + 1))
    return best

"""Regular expressions with interleaving: AST, text syntax, shape checks.

Concrete syntax (loosest to tightest binding)::

    e1 | e2      disjunction
    e1 & e2      interleaving (shuffle)
    e1 e2        concatenation (juxtaposition)
    e? e* e+     postfix unary operators
    ( e )        grouping
    eps          the empty word

Symbols are runs of printable characters other than whitespace and
``()&|?*+``.  When all symbols of an expression are single characters the
printer juxtaposes them (``a&bc``); reading such text back needs the
alphabet, see :func:`parse_expr`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, Union

__all__ = [
    "Expr", "Epsilon", "Atom", "Unary", "Concat", "Interleave", "Disjunction",
    "EPS", "UNARY_OPS", "RESERVED",
    "unary", "concat", "interleave", "disjunction",
    "ExprSyntaxError", "parse_expr", "render", "symbols", "atoms",
    "IsireShapeReport", "classify_shape", "append_optional", "strip_operators",
]

RESERVED = frozenset("()&|?*+")
UNARY_OPS = ("1", "?", "*", "+")
EPS_KEYWORD = "eps"


@dataclass(frozen=True)
class Epsilon:
    def __repr__(self):
        return "Epsilon()"


@dataclass(frozen=True)
class Atom:
    name: str

    def __repr__(self):
        return f"Atom({self.name!r})"


@dataclass(frozen=True)
class Unary:
    child: "Expr"
    op: str

    def __post_init__(self):
        if self.op not in ("?", "*", "+"):
            raise ValueError(f"bad unary operator {self.op!r}")


@dataclass(frozen=True)
class _Nary:
    children: tuple

    def __post_init__(self):
        children = tuple(self.children)
        object.__setattr__(self, "children", children)
        if len(children) < 2:
            raise ValueError(f"{type(self).__name__} needs at least two children")
        if any(type(c) is type(self) for c in children):
            raise ValueError(f"{type(self).__name__} must be flattened")

    def __repr__(self):
        return f"{type(self).__name__}[{', '.join(map(repr, self.children))}]"


class Concat(_Nary):
    pass


class Interleave(_Nary):
    pass


class Disjunction(_Nary):
    pass


Expr = Union[Epsilon, Atom, Unary, Concat, Interleave, Disjunction]
EPS = Epsilon()


# -- smart constructors -----------------------------------------------------

def unary(child: Expr, op: str) -> Expr:
    """Decorate ``child`` with ``op``; operator ``"1"`` means no decoration."""
    if op == "1":
        return child
    return Unary(child, op)


def _flatten(kind, items, drop_eps):
    out = []
    for item in items:
        if isinstance(item, kind):
            out.extend(item.children)
        elif drop_eps and isinstance(item, Epsilon):
            continue
        else:
            out.append(item)
    return out


def concat(*items: Expr) -> Expr:
    out = _flatten(Concat, items, drop_eps=True)
    if not out:
        return EPS
    return out[0] if len(out) == 1 else Concat(tuple(out))


def interleave(*items: Expr) -> Expr:
    out = _flatten(Interleave, items, drop_eps=True)
    if not out:
        return EPS
    return out[0] if len(out) == 1 else Interleave(tuple(out))


def disjunction(*items: Expr) -> Expr:
    out = _flatten(Disjunction, items, drop_eps=False)
    if not out:
        raise ValueError("empty disjunction")
    return out[0] if len(out) == 1 else Disjunction(tuple(out))


# -- traversal ----------------------------------------------------------------

def atoms(e: Expr) -> Iterator[str]:
    """Yield symbol names left to right, with repetitions."""
    if isinstance(e, Atom):
        yield e.name
    elif isinstance(e, Unary):
        yield from atoms(e.child)
    elif isinstance(e, _Nary):
        for c in e.children:
            yield from atoms(c)


def symbols(e: Expr) -> frozenset:
    return frozenset(atoms(e))


def strip_operators(e: Expr) -> Expr:
    """Drop every unary operator (used by the CC brute-force checks)."""
    if isinstance(e, Unary):
        return strip_operators(e.child)
    if isinstance(e, _Nary):
        build = {Concat: concat, Interleave: interleave, Disjunction: disjunction}[type(e)]
        return build(*(strip_operators(c) for c in e.children))
    return e


# -- parsing --------------------------------------------------------------------

class ExprSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TOKEN = re.compile(r"\s*(?:([()&|?*+])|([^\s()&|?*+]+))")


def _tokenize(text):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            # only trailing whitespace can fail to match
            break
        if m.group(1):
            tokens.append((m.group(1), None, m.start(1)))
        else:
            tokens.append(("word", m.group(2), m.start(2)))
        pos = m.end()
    return tokens


def _segment(word, alphabet):
    """Split ``word`` into symbols of ``alphabet``; None when impossible."""
    n = len(word)
    # best[i]: segmentation of word[i:] using the fewest pieces
    best = [None] * (n + 1)
    best[n] = []
    for i in range(n - 1, -1, -1):
        for j in range(n, i, -1):
            piece = word[i:j]
            if piece in alphabet and best[j] is not None:
                cand = [piece] + best[j]
                if best[i] is None or len(cand) < len(best[i]):
                    best[i] = cand
    return best[0]


class _Parser:
    def __init__(self, text, alphabet):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.alphabet = alphabet

    def peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def where(self):
        if self.i < len(self.tokens):
            return self.tokens[self.i][2]
        return len(self.text)

    def parse(self):
        if not self.tokens:
            raise ExprSyntaxError("empty expression", 0)
        e = self.disj()
        if self.i != len(self.tokens):
            tok = self.tokens[self.i]
            what = "unbalanced ')'" if tok[0] == ")" else f"unexpected {tok[0]!r}"
            raise ExprSyntaxError(what, tok[2])
        return e

    def disj(self):
        parts = [self.inter()]
        while self.peek() == "|":
            self.i += 1
            parts.append(self.inter())
        return disjunction(*parts)

    def inter(self):
        parts = [self.conc()]
        while self.peek() == "&":
            self.i += 1
            parts.append(self.conc())
        return interleave(*parts)

    def conc(self):
        parts = []
        while self.peek() in ("word", "("):
            parts.extend(self.postfix())
        if not parts:
            tok = self.peek()
            if tok is None:
                raise ExprSyntaxError("dangling operator", self.where())
            raise ExprSyntaxError(f"unexpected {tok!r}", self.where())
        return concat(*parts)

    def postfix(self):
        items = self.primary()
        while self.peek() in ("?", "*", "+"):
            items[-1] = Unary(items[-1], self.peek())
            self.i += 1
        return items

    def primary(self):
        kind, value, pos = self.tokens[self.i]
        self.i += 1
        if kind == "(":
            if self.peek() == ")":
                raise ExprSyntaxError("empty group", pos)
            e = self.disj()
            if self.peek() != ")":
                raise ExprSyntaxError("unbalanced '('", pos)
            self.i += 1
            return [e]
        if value == EPS_KEYWORD:
            return [EPS]
        if self.alphabet is None or value in self.alphabet:
            return [Atom(value)]
        pieces = _segment(value, self.alphabet)
        if pieces is None:
            return [Atom(value)]
        return [Atom(p) for p in pieces]


def parse_expr(text: str, alphabet: Iterable[str] | None = None) -> Expr:
    """Parse expression text into a flattened AST.

    Without ``alphabet`` every maximal run of symbol characters is one
    symbol.  With ``alphabet``, runs that are not themselves alphabet
    symbols are split into alphabet symbols when possible, so
    ``parse_expr("a*de&b*c+f?", "abcdef")`` reads ``de`` as ``d e``.
    A string alphabet is taken as a set of characters.
    """
    alpha = None if alphabet is None else frozenset(alphabet)
    return _Parser(text, alpha).parse()


# -- rendering ------------------------------------------------------------------

_PREC = {Disjunction: 0, Interleave: 1, Concat: 2}


def _prec(e):
    return _PREC.get(type(e), 3)


def _render(e, compact):
    if isinstance(e, Epsilon):
        return EPS_KEYWORD
    if isinstance(e, Atom):
        return e.name
    if isinstance(e, Unary):
        inner = _render(e.child, compact)
        if _prec(e.child) < 3:
            inner = f"({inner})"
        return inner + e.op
    if isinstance(e, Concat):
        sep = "" if compact else " "
        return sep.join(
            f"({_render(c, compact)})" if _prec(c) <= 2 else _render(c, compact)
            for c in e.children
        )
    op = "&" if isinstance(e, Interleave) else "|"
    mine = _prec(e)
    return op.join(
        f"({_render(c, compact)})" if _prec(c) <= mine else _render(c, compact)
        for c in e.children
    )


def render(e: Expr) -> str:
    """Canonical text with minimal parentheses; children are never reordered."""
    names = symbols(e)
    if names and all(len(n) == 1 for n in names):
        text = _render(e, compact=True)
        # juxtaposition can glue symbols into the eps keyword; fall back then
        if parse_expr(text, names) == e:
            return text
    return _render(e, compact=False)


# -- shape classification -------------------------------------------------------

@dataclass
class IsireShapeReport:
    is_single_occurrence: bool
    is_isire: bool
    is_sire: bool
    violations: list = field(default_factory=list)


def _is_factor(e):
    """A symbol, optionally decorated, or eps."""
    if isinstance(e, Unary):
        e = e.child
    return isinstance(e, (Atom, Epsilon))


def _is_chain(e):
    if isinstance(e, Concat):
        return all(_is_factor(c) for c in e.children)
    return _is_factor(e)


def _is_group(e):
    """An interleaving of chains, possibly made optional as a whole."""
    if isinstance(e, Unary) and e.op == "?" and isinstance(e.child, Interleave):
        e = e.child
    return isinstance(e, Interleave) and all(_is_chain(c) for c in e.children)


def classify_shape(e: Expr) -> IsireShapeReport:
    violations = []
    seen, repeated = set(), set()
    for name in atoms(e):
        (repeated if name in seen else seen).add(name)
    single = not repeated
    if repeated:
        violations.append("symbols occur more than once: " + ", ".join(sorted(repeated)))

    grammar_ok = True
    if isinstance(e, Concat):
        parts = e.children
    else:
        parts = (e,)
    for part in parts:
        if _is_factor(part) or _is_group(part):
            continue
        grammar_ok = False
        if isinstance(part, Disjunction) or any(isinstance(x, Disjunction) for x in _walk(part)):
            violations.append(f"disjunction is not allowed: {render(part)}")
        else:
            violations.append(f"not a chain or an interleaving of chains: {render(part)}")

    is_isire = single and grammar_ok
    flat = _is_chain(e) or (isinstance(e, Interleave) and _is_group(e))
    is_sire = is_isire and flat
    if is_isire and not flat:
        violations.append("interleaving occurs below the outermost level")
    return IsireShapeReport(single, is_isire, is_sire, violations)


def _walk(e):
    yield e
    if isinstance(e, Unary):
        yield from _walk(e.child)
    elif isinstance(e, _Nary):
        for c in e.children:
            yield from _walk(c)


# -- optionality ----------------------------------------------------------------

def append_optional(e: Expr) -> Expr:
    """``e?`` with the trivial rewrites (E*)? = E*, (E+)? = E*, (E?)? = E?, eps? = eps."""
    if isinstance(e, Epsilon):
        return e
    if isinstance(e, Unary):
        if e.op in ("*", "?"):
            return e
        return Unary(e.child, "*")
    return Unary(e, "?")


def chain(names: Sequence[str], ops) -> Expr:
    """Concatenate ``names`` each decorated with ``ops[name]``."""
    return concat(*(unary(Atom(n), ops[n]) for n in names))

"""
How general is an expression?
=============================

Three numbers compare candidate expressions for the same samples:

* language size - distinct words up to length 2|alphabet|+1,
* datacost - bits to encode the samples given the expression,
* combinatorial cardinality (CC) - distinct orderings the interleavings allow.

Smaller means less over-generalization.  Run with
``python3 demos/02_comparing_expressions.py``.
"""

from isire import SampleSet, compare, format_table, parse_expr
from isire.metrics import cc, count_words_by_length

samples = SampleSet.from_chars(["aabcde", "acdcfe", "dbbcfe", "adbcef"])

# Expression text: & interleaves, juxtaposition concatenates, | chooses.
# With an alphabet, juxtaposed single letters are split into symbols.
candidates = [
    ("interleave all", parse_expr("a*&b*&c+&d&e&f?", samples.alphabet)),
    ("chains only", parse_expr("a*de&b*c+f?", samples.alphabet)),
    ("learned", parse_expr("a*(b*c+&d)(e&f?)", samples.alphabet)),
]
print(format_table(compare(samples, candidates)))

# Language size is a sum over a word-count spectrum computed by dynamic
# programming on a deterministic automaton:
print("words per length:", count_words_by_length(candidates[2][1], 6))

# CC only looks at the chains being interleaved; repetition operators do
# not matter.  Multi-letter symbol names are written with explicit names:
for text in [
    "a1&a2+&a3&a4+&a5&a6*&a7*&a8&a9&a10*",
    "(a10*|a17?|a6?)&(a5*|a3?|a7?)&(a2*|a1*)&a14*&a15*",
    "a2+ a14 (a19*&a13? a20?&a17+ a16? a11?&a21* a10*&a12* a9? a15? a7*)",
]:
    print(f"CC = {cc(parse_expr(text)):>12}  for  {text}")

# An expression that rejects a sample has no datacost; the row says so.
bad = compare(samples, [("too narrow", parse_expr("a*b*c+", samples.alphabet))])[0]
print("too narrow:", bad.datacost, bad.warnings)

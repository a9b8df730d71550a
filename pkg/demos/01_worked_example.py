"""
Learning an ISIRE step by step
==============================

Four element contents are enough to watch every stage of the learner:
repetition operators, order conflicts, interleaving subexpressions, and
the single-occurrence automaton that stitches them into one expression.

Run with ``python3 demos/01_worked_example.py``.
"""

import json

from isire import SampleSet, infer_isire
from isire.orders import cnt_oper

# Each string is one sample; every character is one symbol.
samples = SampleSet.from_chars(["aabcde", "acdcfe", "dbbcfe", "adbcef"])

# How often does each symbol occur per sample?  Never-missing symbols get
# 1 or +, sometimes-missing ones get ? or *.
print("operators:", cnt_oper(samples))

# The learner records every intermediate artifact when asked to explain.
outcome = infer_isire(samples, explain=True)
trace = outcome.trace

# Two symbols that appear in both orders somewhere conflict: they must be
# joined by interleaving rather than by concatenation.
print("conflicting pairs:", trace["conflict_edges"])

# Each connected group of conflicting symbols becomes one subexpression:
# layers of mutually independent symbols form chains, the chains interleave.
for comp in trace["components"]:
    print(f"  group {comp['vertices']}: layers {comp['layers']} -> {comp['subexpression']}")

# The automaton over single symbols is then contracted group by group.
print("contracted automaton edges:", trace["contracted"])

# Longest-path levels order the factors; a level that some path jumps over
# is a skip level, and the factor there becomes optional (a* already is).
print("levels:", json.dumps(trace["levels"]))
print("skip levels:", trace["skip_levels"])

print("result:", outcome.text)

# Graphviz sources of both automata are part of the trace, too.
with open("worked_generalized_soa.dot", "w") as fh:
    fh.write(trace["generalized_soa_dot"])
print("wrote worked_generalized_soa.dot")

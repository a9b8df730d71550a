import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from isire.corpus import SampleSet
from isire.expr import atoms, classify_shape, parse_expr, render, symbols
from isire.graphs import ConflictGraph
from isire.infer import baseline_interleave_all, g2subre, infer_isire
from isire.metrics import language_size
from isire.orders import cnt_oper, ncs
from isire.semantics import accepts_all, compile

from oracles import words_upto
from strategies import sample_sets, structured_sample_set


def edges(*pairs):
    return frozenset(frozenset(p) for p in pairs)


def test_g2subre_worked_components(worked):
    n, ops = ncs(worked), cnt_oper(worked)
    assert render(g2subre(ConflictGraph(frozenset("bcd"), edges("bd", "dc")), n, ops)) == "b*c+&d"
    assert render(g2subre(ConflictGraph(frozenset("a"), frozenset()), n, {"a": "*"})) == "a*"
    assert render(g2subre(ConflictGraph(frozenset("ef"), edges("ef")), n, {"e": "1", "f": "?"})) == "e&f?"


def test_g2subre_reports_broken_cycles():
    broken = []
    g = ConflictGraph(frozenset("abcd"), edges("ad", "bd", "cd"))
    out = g2subre(g, {("a", "b"), ("b", "c"), ("c", "a")}, dict.fromkeys("abcd", "1"), broken)
    assert render(out) == "abc&d"
    assert broken == ["a"]


def test_infer_worked_example(worked):
    outcome = infer_isire(worked)
    assert outcome.text == "a*(b*c+&d)(e&f?)"
    assert outcome.warnings == []
    assert outcome.trace is None


def test_infer_trace(worked):
    trace = infer_isire(worked, explain=True).trace
    assert trace["conflict_edges"] == [["b", "d"], ["c", "d"], ["e", "f"]]
    assert [c["subexpression"] for c in trace["components"]] == ["a*", "b*c+&d", "e&f?"]
    assert trace["components"][1]["layers"] == [["b", "c"], ["d"]]
    assert trace["levels"] == {"src": 0, "a*": 1, "b*c+&d": 2, "e&f?": 3, "snk": 4}
    assert trace["skip_levels"] == [1]
    assert trace["result"] == "a*(b*c+&d)(e&f?)"


def test_infer_small():
    assert infer_isire(SampleSet.from_chars(["a"])).text == "a"
    out = infer_isire(SampleSet.from_chars(["ab", "ba"]))
    assert out.text == "a&b"
    assert {w for w in words_upto("ab", 3) if compile(out.expression).run(w)} == {tuple("ab"), tuple("ba")}


def test_infer_empty_sample_makes_everything_optional():
    out = infer_isire(SampleSet.from_chars(["ab", ""]))
    assert out.text == "a?b?"
    assert accepts_all(out.expression, SampleSet.from_chars(["ab", ""])).ok
    assert infer_isire(SampleSet.from_chars([""])).text == "eps"


def test_infer_three_cycle_collapses_with_warning():
    out = infer_isire(SampleSet.from_chars(["ab", "bc", "ca"]))
    assert out.text == "a?&b?&c?"
    assert out.warnings == ["scc-collapsed: {a, b, c} merged into one interleaving"]


def test_infer_rejects_empty_set():
    with pytest.raises(ValueError):
        infer_isire(SampleSet([]))
    with pytest.raises(ValueError):
        baseline_interleave_all(SampleSet([]))


def test_baseline_examples(worked):
    assert render(baseline_interleave_all(worked)) == "a*&b*&c+&d&e&f?"
    assert render(baseline_interleave_all(SampleSet.from_chars(["a"]))) == "a"
    assert render(baseline_interleave_all(SampleSet.from_chars(["ab", "ba"]))) == "a&b"


def test_generalization_ordering(worked):
    ours = language_size(infer_isire(worked).expression)
    conminer = language_size(parse_expr("a*de&b*c+f?", "abcdef"))
    baseline = language_size(baseline_interleave_all(worked))
    assert ours < conminer < baseline


@settings(max_examples=200, deadline=None)
@given(sample_sets())
def test_inference_properties(s):
    out = infer_isire(s)
    assert sorted(atoms(out.expression)) == sorted(s.alphabet)
    assert symbols(out.expression) == set(s.alphabet)
    assert not compile(out.expression).determinized
    if not out.warnings:
        assert accepts_all(out.expression, s).ok
        shape = classify_shape(out.expression)
        assert shape.is_isire and shape.is_single_occurrence, shape.violations


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_structured_samples_are_covered(seed):
    s = structured_sample_set(random.Random(seed))
    out = infer_isire(s)
    if not out.warnings:
        assert accepts_all(out.expression, s).ok


@st.composite
def mandatory_sires(draw):
    """A SIRE over distinct symbols, all mandatory: one chain, or an interleaving of chains."""
    names = draw(st.permutations("abcdef"))[:draw(st.integers(1, 6))]
    cuts = sorted(draw(st.sets(st.integers(1, max(1, len(names) - 1)), max_size=3)))
    chains, prev = [], 0
    for c in cuts + [len(names)]:
        if c > prev:
            chains.append(names[prev:c])
            prev = c
    return chains


@settings(max_examples=100, deadline=None)
@given(mandatory_sires(), st.randoms(use_true_random=False))
def test_sire_generated_samples_infer_isire(chains, rnd):
    words = []
    for _ in range(rnd.randint(1, 8)):
        streams = [list(c) for c in chains]
        word = []
        while any(streams):
            word.append(rnd.choice([x for x in streams if x]).pop(0))
        words.append("".join(word))
    s = SampleSet.from_chars(words)
    out = infer_isire(s)
    assert accepts_all(out.expression, s).ok or out.warnings
    if not out.warnings:
        assert classify_shape(out.expression).is_isire


def test_inference_is_deterministic(worked):
    shuffled = SampleSet(list(reversed(worked.samples)))
    assert infer_isire(shuffled).text == infer_isire(worked).text
    assert infer_isire(worked, explain=True).trace == infer_isire(worked, explain=True).trace

import random

from hypothesis import strategies as st

from isire.corpus import SampleSet
from isire.expr import EPS, Atom, Unary, concat, disjunction, interleave


def exprs(names, max_leaves=6):
    """Arbitrary (not necessarily single-occurrence) expressions over ``names``."""
    leaf = st.one_of(st.sampled_from([Atom(n) for n in names]), st.just(EPS))

    def extend(inner):
        return st.one_of(
            st.builds(Unary, inner, st.sampled_from("?*+")),
            st.lists(inner, min_size=2, max_size=3).map(lambda xs: concat(*xs)),
            st.lists(inner, min_size=2, max_size=3).map(lambda xs: interleave(*xs)),
            st.lists(inner, min_size=2, max_size=3).map(lambda xs: disjunction(*xs)),
        )

    return st.recursive(leaf, extend, max_leaves=max_leaves)


def sample_sets(alphabet="abcdef", max_samples=8, max_len=8, allow_empty_word=True):
    word = st.text(alphabet=alphabet, min_size=0 if allow_empty_word else 1, max_size=max_len)
    return st.lists(word, min_size=1, max_size=max_samples).map(SampleSet.from_chars)


def random_sample_set(rng: random.Random, max_alphabet=8, max_samples=20, max_len=12):
    """Seeded generator used by the acceptance run (alphabet <= 8, <= 20 samples, length <= 12)."""
    k = rng.randint(1, max_alphabet)
    alphabet = "abcdefgh"[:k]
    n = rng.randint(1, max_samples)
    words = []
    for _ in range(n):
        length = rng.randint(0, max_len)
        words.append("".join(rng.choice(alphabet) for _ in range(length)))
    return SampleSet.from_chars(words)


def structured_sample_set(rng: random.Random, max_alphabet=8, max_samples=20, max_len=12):
    """Samples drawn from a random ISIRE so that order constraints actually show up."""
    k = rng.randint(1, max_alphabet)
    names = list("abcdefgh"[:k])
    rng.shuffle(names)
    ops = {n: rng.choice("1?*+") for n in names}
    groups = []
    i = 0
    while i < len(names):
        size = rng.randint(1, 3)
        block = names[i:i + size]
        i += size
        chains = []
        j = 0
        while j < len(block):
            m = rng.randint(1, 2)
            chains.append(block[j:j + m])
            j += m
        groups.append(chains)
    words = []
    for _ in range(rng.randint(1, max_samples)):
        word = []
        for chains in groups:
            streams = []
            for ch in chains:
                seq = []
                for n in ch:
                    lo, hi = {"1": (1, 1), "?": (0, 1), "*": (0, 3), "+": (1, 3)}[ops[n]]
                    seq += [n] * rng.randint(lo, hi)
                streams.append(seq)
            while any(streams):
                live = [s for s in streams if s]
                pick = rng.choice(live)
                word.append(pick.pop(0))
        words.append("".join(word[:max_len]))
    return SampleSet.from_chars(words)


def sample_word(e, rng: random.Random, max_repeat=2) -> tuple:
    """One random word of L(e); starred and plus factors repeat at most ``max_repeat + 1`` times."""
    from isire.expr import Atom, Concat, Disjunction, Interleave, Unary

    if isinstance(e, Atom):
        return (e.name,)
    if isinstance(e, Unary):
        lo, hi = {"?": (0, 1), "*": (0, max_repeat), "+": (1, max_repeat + 1)}[e.op]
        return sum((sample_word(e.child, rng, max_repeat) for _ in range(rng.randint(lo, hi))), ())
    if isinstance(e, Concat):
        return sum((sample_word(c, rng, max_repeat) for c in e.children), ())
    if isinstance(e, Disjunction):
        return sample_word(rng.choice(e.children), rng, max_repeat)
    if isinstance(e, Interleave):
        streams = [list(sample_word(c, rng, max_repeat)) for c in e.children]
        word = []
        while any(streams):
            word.append(rng.choice([s for s in streams if s]).pop(0))
        return tuple(word)
    return ()


def random_expr(rng: random.Random, names, leaves=5):
    """Seeded counterpart of :func:`exprs` for the acceptance run."""
    if leaves <= 1:
        return rng.choice([Atom(n) for n in names] + [EPS])
    kind = rng.choice("u,&|")
    if kind == "u":
        return Unary(random_expr(rng, names, leaves - 1), rng.choice("?*+"))
    k = rng.randint(2, min(3, leaves))
    parts = [random_expr(rng, names, max(1, (leaves - 1) // k)) for _ in range(k)]
    return {",": concat, "&": interleave, "|": disjunction}[kind](*parts)

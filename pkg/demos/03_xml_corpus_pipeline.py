"""
From an XML corpus to a content model
=====================================

The child-tag sequences of every ``<www>`` element are the samples.  We
extract them, learn an expression, and compare it against a schema that
merely interleaves every tag.  The same steps are available from the shell::

    python3 -m isire extract -x corpus.xml -e www -o www.txt
    python3 -m isire infer -s www.txt
    python3 -m isire compare -s www.txt --candidate learned=... --candidate all=...

Run with ``python3 demos/03_xml_corpus_pipeline.py``.
"""

from isire import compare, extract_xml_sequences, format_table, infer_isire
from isire.infer import baseline_interleave_all
from isire.semantics import accepts_all

corpus = """<?xml version="1.0"?>
<dblp>
  <www key="1"><author/><author/><title/><url/></www>
  <www key="2"><editor/><title/><url/><note/></www>
  <www key="3"><author/><title/><note/><url/></www>
  <www key="4"><title/><url/></www>
  <article key="5"><author/><title/><journal/></article>
  <www key="6"><author/><editor/><title/><url/><url/></www>
</dblp>
"""

# Only the direct children of <www> count; <article> is ignored.
samples = extract_xml_sequences(corpus, "www")
for word in samples:
    print(" ".join(word))

# Tag names are multi-letter symbols, so expressions render with spaces.
outcome = infer_isire(samples)
print("\nlearned:", outcome.text)
print("accepts every sample:", accepts_all(outcome.expression, samples).ok)

rows = compare(samples, [
    ("learned", outcome.expression),
    ("interleave all", baseline_interleave_all(samples)),
])
print()
print(format_table(rows))

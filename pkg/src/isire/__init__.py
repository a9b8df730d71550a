"""Learning restricted regular expressions with interleaving from positive samples."""

from .corpus import SampleSet, extract_xml_sequences, parse_samples, read_samples, render_samples
from .expr import classify_shape, parse_expr, render
from .infer import InferenceOutcome, baseline_interleave_all, infer_isire
from .metrics import cc, compare, count_words_by_length, datacost, format_table, language_size
from .semantics import accepts_all, compile, matches

__version__ = "0.1.0"

__all__ = [
    "SampleSet", "parse_samples", "render_samples", "read_samples", "extract_xml_sequences",
    "parse_expr", "render", "classify_shape",
    "infer_isire", "baseline_interleave_all", "InferenceOutcome",
    "compile", "matches", "accepts_all",
    "count_words_by_length", "language_size", "datacost", "cc", "compare", "format_table",
]

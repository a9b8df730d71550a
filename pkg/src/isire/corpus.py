"""Sample sets: the line-based sample file format and XML child sequences."""

from __future__ import annotations

import xml.parsers.expat
from dataclasses import dataclass, field
from typing import Iterable

from .expr import RESERVED

__all__ = [
    "SampleSet", "SampleFormatError", "XmlFormatError",
    "check_symbol", "parse_samples", "render_samples", "read_samples",
    "extract_xml_sequences",
]


class SampleFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class XmlFormatError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def check_symbol(name: str) -> str:
    if not name:
        raise ValueError("empty symbol")
    bad = sorted({c for c in name if c in RESERVED or c.isspace()})
    if bad:
        raise ValueError(f"symbol {name!r} contains reserved characters {''.join(bad)!r}")
    return name


@dataclass(frozen=True)
class SampleSet:
    """An ordered multiset of words; each word is a tuple of symbol names."""

    samples: tuple = ()
    alphabet: frozenset = field(init=False, compare=False)

    def __post_init__(self):
        samples = tuple(tuple(s) for s in self.samples)
        for word in samples:
            for name in word:
                check_symbol(name)
        object.__setattr__(self, "samples", samples)
        object.__setattr__(self, "alphabet", frozenset(n for w in samples for n in w))

    @classmethod
    def from_chars(cls, words: Iterable[str]) -> "SampleSet":
        """Build from plain strings, one symbol per character."""
        return cls(tuple(tuple(w) for w in words))

    def __len__(self):
        return len(self.samples)

    def __iter__(self):
        return iter(self.samples)

    def distinct(self) -> frozenset:
        return frozenset(self.samples)


def parse_samples(text: str) -> SampleSet:
    """Read the sample file format: one word per line, blank line = empty word.

    A single trailing line break terminates the last line rather than
    starting a new empty sample.
    """
    text = text.replace("\r\n", "\n")
    if text.endswith("\n"):
        text = text[:-1]
    samples = []
    for lineno, line in enumerate(text.split("\n"), start=1):
        tokens = line.split()
        for tok in tokens:
            try:
                check_symbol(tok)
            except ValueError as exc:
                raise SampleFormatError(str(exc), lineno) from None
        samples.append(tuple(tokens))
    return SampleSet(tuple(samples))


def render_samples(s: SampleSet) -> str:
    return "".join(" ".join(w) + "\n" for w in s.samples)


def read_samples(path) -> SampleSet:
    with open(path, encoding="utf-8", newline="") as fh:
        return parse_samples(fh.read())


def extract_xml_sequences(document: bytes | str, parent: str) -> SampleSet:
    """Child-element tag sequences of every ``parent`` element.

    Samples come out in the document order of the parent start tags.  Only
    direct children count; text, attributes and deeper descendants are
    ignored.  Tag names keep any namespace prefix verbatim.
    """
    if isinstance(document, str):
        document = document.encode("utf-8")
    parser = xml.parsers.expat.ParserCreate()
    found: list[list[str]] = []
    stack: list[list[str] | None] = []

    def start(tag, attrs):
        if stack and stack[-1] is not None:
            stack[-1].append(tag)
        if tag == parent:
            children: list[str] = []
            found.append(children)
            stack.append(children)
        else:
            stack.append(None)

    def end(tag):
        stack.pop()

    parser.StartElementHandler = start
    parser.EndElementHandler = end
    try:
        parser.Parse(document, True)
    except xml.parsers.expat.ExpatError as exc:
        raise XmlFormatError(
            xml.parsers.expat.ErrorString(exc.code), parser.ErrorByteIndex
        ) from None
    return SampleSet(tuple(tuple(c) for c in found))

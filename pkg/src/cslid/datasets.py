"""Dataset readers and the sentence-level relabeling rule.

Token-tagged corpora are collapsed to sentence level: the gold set is the
distinct language tags present among the tokens, sentences with two or more
become code-switched, with exactly one monolingual, and sentences with none
(only named entities, emoji, and the like) are discarded. Per-source tag
inventories differ, so each source gets a small JSON config mapping its raw
tags into the label scheme.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import FormatError

FORMATS = ("token-tsv", "labeled-lines", "utterance-json")
LABEL_PREFIX = "__label__"


@dataclass(frozen=True)
class TokenTaggedSentence:
    tokens: tuple[tuple[str, str], ...]  # (surface, raw tag)

    def __post_init__(self):
        if not self.tokens:
            raise ValueError("empty token sequence")


@dataclass(frozen=True)
class Example:
    text: str
    gold: frozenset[str]

    def __post_init__(self):
        if not self.gold:
            raise ValueError("example with empty gold set")


@dataclass(frozen=True)
class DatasetConfig:
    """How to read one source: its format and raw-tag mapping.

    tag_map values: a tag string (that raw tag marks that language), a list
    of tags (e.g. an utterance-level "mixed" meaning two languages), or
    null/None (not a language tag). Raw tags absent from the map are
    treated as non-language and counted.
    """

    format: str = "token-tsv"
    tag_map: dict[str, object] = field(default_factory=dict)
    text_field: str = "text"
    labels_field: str = "labels"
    name: str = ""

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}")

    def map_tag(self, raw: str) -> tuple[str, ...] | None:
        """Mapped language tags for a raw tag; None if non-language."""
        v = self.tag_map.get(raw)
        if v is None:
            return None
        if isinstance(v, str):
            return (v,)
        return tuple(v)


def load_config(path: str) -> DatasetConfig:
    with open(path, encoding="utf-8") as f:
        try:
            raw = json.load(f)
        except json.JSONDecodeError as e:
            raise FormatError(f"{path}: bad JSON ({e})")
    known = {"format", "tag_map", "text_field", "labels_field", "name"}
    bad = set(raw) - known
    if bad:
        raise FormatError(f"{path}: unknown config keys {sorted(bad)}")
    return DatasetConfig(**raw)


@dataclass
class ReadReport:
    n_records: int = 0
    n_examples: int = 0
    n_discarded: int = 0       # records whose gold set came out empty
    n_malformed: int = 0       # structurally broken records that were kept out
    first_malformed_line: int | None = None
    unknown_tags: dict[str, int] = field(default_factory=dict)

    def note_malformed(self, lineno: int) -> None:
        self.n_malformed += 1
        if self.first_malformed_line is None:
            self.first_malformed_line = lineno

    def note_unknown(self, tag: str) -> None:
        self.unknown_tags[tag] = self.unknown_tags.get(tag, 0) + 1

    def summary(self) -> str:
        parts = [f"records {self.n_records}", f"examples {self.n_examples}",
                 f"discarded {self.n_discarded}",
                 f"malformed {self.n_malformed}"]
        if self.unknown_tags:
            total = sum(self.unknown_tags.values())
            parts.append(f"unknown-tag tokens {total} "
                         f"({len(self.unknown_tags)} distinct)")
        return ", ".join(parts)


def to_sentence_level(sent: TokenTaggedSentence, config: DatasetConfig,
                      report: ReadReport | None = None) -> Example | None:
    """Apply the relabeling rule; None means the sentence is discarded."""
    gold = set()
    for _, raw_tag in sent.tokens:
        if raw_tag not in config.tag_map:
            if report is not None:
                report.note_unknown(raw_tag)
            continue
        mapped = config.map_tag(raw_tag)
        if mapped is not None:
            gold.update(mapped)
    if not gold:
        return None
    text = " ".join(surface for surface, _ in sent.tokens)
    return Example(text, frozenset(gold))


def cs_proportion(examples: Iterable[Example]) -> float:
    """Fraction of examples carrying two or more gold labels."""
    n = cs = 0
    for ex in examples:
        n += 1
        cs += len(ex.gold) >= 2
    if n == 0:
        from .errors import EmptyDataset
        raise EmptyDataset("no examples")
    return cs / n


def parse_labeled_line(line: str) -> tuple[str, frozenset[str]] | None:
    """Split a ``__label__x __label__y text...`` line; None if no labels."""
    tokens = line.split()
    labels = set()
    i = 0
    while i < len(tokens) and tokens[i].startswith(LABEL_PREFIX):
        tag = tokens[i][len(LABEL_PREFIX):]
        if tag:
            labels.add(tag)
        i += 1
    if not labels:
        return None
    return " ".join(tokens[i:]), frozenset(labels)


def format_labeled_line(text: str, gold: frozenset[str]) -> str:
    prefix = " ".join(f"{LABEL_PREFIX}{t}" for t in sorted(gold))
    return f"{prefix} {text}" if text else prefix


def _iter_token_tsv(lines: Iterable[str]) -> Iterator[tuple[int, TokenTaggedSentence]]:
    tokens: list[tuple[str, str]] = []
    start = 1
    lineno = 0
    for lineno, line in enumerate(lines, start=1):
        line = line.rstrip("\n")
        if not line.strip():
            if tokens:
                yield start, TokenTaggedSentence(tuple(tokens))
                tokens = []
            start = lineno + 1
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0]:
            raise FormatError(
                f"expected token<TAB>tag on line {lineno}, got {line!r}")
        tokens.append((parts[0], parts[1]))
    if tokens:
        yield start, TokenTaggedSentence(tuple(tokens))


def read_dataset(lines: Iterable[str], config: DatasetConfig,
                 report: ReadReport | None = None) -> Iterator[Example]:
    """Stream Examples out of a source, applying the relabeling rule.

    Structural damage (a token line without a tab, unparseable JSON) raises
    FormatError with the line number. Records that are well-formed but
    yield no examples (no labels, empty gold) are counted in *report*, not
    silently dropped.
    """
    if report is None:
        report = ReadReport()
    if config.format == "token-tsv":
        for _, sent in _iter_token_tsv(lines):
            report.n_records += 1
            ex = to_sentence_level(sent, config, report)
            if ex is None:
                report.n_discarded += 1
            else:
                report.n_examples += 1
                yield ex
    elif config.format == "labeled-lines":
        for lineno, line in enumerate(lines, start=1):
            line = line.rstrip("\n")
            if not line.strip():
                continue
            report.n_records += 1
            parsed = parse_labeled_line(line)
            if parsed is None:
                report.note_malformed(lineno)
                continue
            text, gold = parsed
            report.n_examples += 1
            yield Example(text, gold)
    else:  # utterance-json
        yield from _read_utterance_json(lines, config, report)


def _read_utterance_json(lines: Iterable[str], config: DatasetConfig,
                         report: ReadReport) -> Iterator[Example]:
    """JSON Lines (or a single JSON array) with configured field names."""
    buffered = iter(lines)
    first = next(buffered, None)
    if first is None:
        return
    records: Iterable[tuple[int, object]]
    if first.lstrip().startswith("["):
        text = first + "\n".join(buffered)
        try:
            arr = json.loads(text)
        except json.JSONDecodeError as e:
            raise FormatError(f"bad JSON array: {e}")
        if not isinstance(arr, list):
            raise FormatError("top-level JSON is not an array")
        records = enumerate(arr, start=1)
    else:
        def gen():
            for lineno, line in enumerate([first, *buffered], start=1):
                if not line.strip():
                    continue
                try:
                    yield lineno, json.loads(line)
                except json.JSONDecodeError as e:
                    raise FormatError(f"bad JSON on line {lineno}: {e}")
        records = gen()

    for lineno, rec in records:
        report.n_records += 1
        if not isinstance(rec, dict) or config.text_field not in rec \
                or config.labels_field not in rec:
            report.note_malformed(lineno)
            continue
        raw_labels = rec[config.labels_field]
        if isinstance(raw_labels, str):
            raw_labels = [raw_labels]
        gold = set()
        for raw in raw_labels:
            raw = str(raw)
            if raw not in config.tag_map:
                report.note_unknown(raw)
                continue
            mapped = config.map_tag(raw)
            if mapped is not None:
                gold.update(mapped)
        if not gold:
            report.n_discarded += 1
            continue
        report.n_examples += 1
        yield Example(str(rec[config.text_field]), frozenset(gold))


def read_dataset_file(path: str, config: DatasetConfig,
                      report: ReadReport | None = None) -> Iterator[Example]:
    with open(path, encoding="utf-8") as f:
        yield from read_dataset(f, config, report)

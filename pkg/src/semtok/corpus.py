"""Corpus ingestion: normalization, word splitting and word-frequency tables."""

from __future__ import annotations

import gzip
import re
import sys
import unicodedata
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Iterator, Mapping, Sequence, Union

PathLike = Union[str, Path]


class CorpusDecodeError(ValueError):
    """Input bytes are not valid UTF-8."""

    def __init__(self, source: str, offset: int, reason: str):
        super().__init__(f"{source}: invalid UTF-8 at byte offset {offset}: {reason}")
        self.source = source
        self.offset = offset


class CorpusIOError(OSError):
    pass


@dataclass(frozen=True)
class NormalizationConfig:
    lowercase: bool = True
    unicode_form: str = "NFKC"
    strip_control: bool = True

    def __post_init__(self):
        if self.unicode_form not in ("NFC", "NFKC"):
            raise ValueError(f"unicode_form must be NFC or NFKC, got {self.unicode_form!r}")


_CONTROL = {cp: " " for cp in range(sys.maxunicode + 1)
            if cp < 0xA0 and unicodedata.category(chr(cp)) == "Cc"}


def _normalize_once(text: str, config: NormalizationConfig) -> str:
    if config.strip_control:
        text = text.translate(_CONTROL)
    if not text.isascii():
        text = unicodedata.normalize(config.unicode_form, text)
    if config.lowercase:
        text = text.lower()
    return text


def normalize_text(text: str, config: NormalizationConfig = NormalizationConfig()) -> str:
    """Apply control stripping, Unicode normalization and lowercasing.

    Lowercasing can leave a string that is no longer in normal form (and
    normalization can reintroduce capitals), so the passes repeat until the
    text stops changing. This makes the function idempotent.
    """
    out = _normalize_once(text, config)
    for _ in range(4):
        if out.isascii():
            break
        nxt = _normalize_once(out, config)
        if nxt == out:
            break
        out = nxt
    return out


@lru_cache(maxsize=1)
def _word_pattern() -> re.Pattern:
    ranges = []
    start = prev = None
    for cp in range(sys.maxunicode + 1):
        if unicodedata.category(chr(cp))[0] in "PS":
            if prev is not None and cp == prev + 1:
                prev = cp
                continue
            if start is not None:
                ranges.append((start, prev))
            start = prev = cp
    ranges.append((start, prev))
    cls = "".join(
        re.escape(chr(a)) if a == b else f"{re.escape(chr(a))}-{re.escape(chr(b))}"
        for a, b in ranges
    )
    return re.compile(f"[{cls}]|[^\\s{cls}]+")


def split_words(text: str) -> list[str]:
    """Split on whitespace; each punctuation or symbol character is its own word.

    >>> split_words("don't stop.")
    ['don', "'", 't', 'stop', '.']
    """
    return _word_pattern().findall(text)


@dataclass(frozen=True)
class WordFrequencyTable:
    entries: Mapping[str, int] = field(default_factory=dict)
    total: int = 0

    def __post_init__(self):
        total = 0
        for word, count in self.entries.items():
            if count < 1:
                raise ValueError(f"non-positive count for {word!r}")
            if not word or any(ch.isspace() for ch in word):
                raise ValueError(f"invalid word {word!r}")
            total += count
        if total != self.total:
            raise ValueError(f"total {self.total} != sum of counts {total}")

    @classmethod
    def from_counter(cls, counts: Mapping[str, int]) -> "WordFrequencyTable":
        entries = {w: c for w, c in counts.items() if c > 0}
        return cls(entries, sum(entries.values()))

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, word: str) -> int:
        return self.entries[word]

    def __contains__(self, word: str) -> bool:
        return word in self.entries

    def merge(self, other: "WordFrequencyTable") -> "WordFrequencyTable":
        counts = Counter(self.entries)
        counts.update(other.entries)
        return WordFrequencyTable.from_counter(counts)

    def most_common(self) -> list[tuple[str, int]]:
        """Entries by descending count, ties broken lexicographically."""
        return sorted(self.entries.items(), key=lambda kv: (-kv[1], kv[0]))

    def to_tsv(self) -> str:
        return "".join(f"{w}\t{c}\n" for w, c in self.most_common())

    @classmethod
    def from_tsv(cls, text: str) -> "WordFrequencyTable":
        counts = {}
        for lineno, line in enumerate(text.splitlines(), 1):
            word, _, count = line.partition("\t")
            try:
                counts[word] = int(count)
            except ValueError:
                raise ValueError(f"line {lineno}: bad count {count!r}") from None
        return cls.from_counter(counts)


def count_words(lines: Iterable[str], config: NormalizationConfig = NormalizationConfig()) -> Counter:
    counts: Counter = Counter()
    for line in lines:
        counts.update(split_words(normalize_text(line, config)))
    return counts


def build_frequency_table(corpus: Iterable[str],
                          config: NormalizationConfig = NormalizationConfig()) -> WordFrequencyTable:
    """Count normalized words over an iterable of documents (lines)."""
    return WordFrequencyTable.from_counter(count_words(corpus, config))


def iter_corpus_files(paths: Sequence[PathLike]) -> list[Path]:
    """Expand files and directory trees into a sorted list of files."""
    files = []
    for p in map(Path, paths):
        if p.is_dir():
            files.extend(sorted(f for f in p.rglob("*") if f.is_file()))
        elif p.is_file():
            files.append(p)
        else:
            raise CorpusIOError(f"{p}: no such file or directory")
    return files


def read_lines(path: PathLike) -> Iterator[str]:
    """Yield the lines of a UTF-8 (optionally gzipped) text file.

    Decode failures raise CorpusDecodeError with the byte offset in the
    uncompressed stream.
    """
    path = Path(path)
    opener = gzip.open if path.suffix == ".gz" else open
    offset = 0
    try:
        with opener(path, "rb") as fh:
            for raw in fh:
                try:
                    line = raw.decode("utf-8")
                except UnicodeDecodeError as exc:
                    raise CorpusDecodeError(str(path), offset + exc.start, exc.reason) from None
                offset += len(raw)
                yield line.rstrip("\r\n")
    except OSError as exc:
        raise CorpusIOError(f"{path}: {exc.strerror or exc}") from exc


def read_corpus(paths: Sequence[PathLike]) -> Iterator[str]:
    for f in iter_corpus_files(paths):
        yield from read_lines(f)


def _count_file(args) -> Counter:
    path, config = args
    return count_words(read_lines(path), config)


def build_frequency_table_from_files(paths: Sequence[PathLike],
                                     config: NormalizationConfig = NormalizationConfig(),
                                     workers: int = 1) -> WordFrequencyTable:
    """Count words across files, optionally one process per file shard.

    Merging is a Counter sum, so the result does not depend on worker count
    or completion order.
    """
    files = iter_corpus_files(paths)
    total: Counter = Counter()
    if workers > 1 and len(files) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_count_file, [(f, config) for f in files]):
                total.update(part)
    else:
        for f in files:
            total.update(_count_file((f, config)))
    return WordFrequencyTable.from_counter(total)

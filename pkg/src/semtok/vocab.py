"""Two-segment vocabulary model, model-file serialization and BERT export."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

CONTINUATION = "##"
UNK = "[UNK]"
DEFAULT_SPECIALS = ("[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]")
FORMAT_HEADER = "#semtok\t1"


class Kind(enum.Enum):
    INITIAL = "I"
    CONTINUATION = "C"


class Segment(enum.Enum):
    SPECIAL = "S"
    SEMANTIC = "M"
    RESIDUAL = "R"


class ModelFormatError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def kind_of(token: str) -> Kind:
    return Kind.CONTINUATION if token.startswith(CONTINUATION) else Kind.INITIAL


def _clean_score(score: float) -> float:
    # fixed 6-decimal precision keeps serialization round-trips exact; +0.0 drops -0.0
    return round(float(score), 6) + 0.0


@dataclass(frozen=True)
class VocabEntry:
    token: str
    kind: Kind
    segment: Segment
    score: float
    id: int

    def __post_init__(self):
        if not self.token or any(c in self.token for c in "\t\n\r"):
            raise ValueError(f"invalid token {self.token!r}")
        if self.kind is not kind_of(self.token):
            raise ValueError(f"{self.token!r}: kind {self.kind.name} does not match marker")
        if self.kind is Kind.CONTINUATION and len(self.token) == len(CONTINUATION):
            raise ValueError("continuation token with empty payload")
        if not math.isfinite(self.score):
            raise ValueError(f"{self.token!r}: non-finite score")
        if self.segment is Segment.SPECIAL:
            if self.score != 0:
                raise ValueError(f"special {self.token!r} must have score 0")
        elif self.score > 0:
            raise ValueError(f"{self.token!r}: score must be <= 0")

    @property
    def payload(self) -> str:
        """Token text without the continuation marker."""
        return self.token[len(CONTINUATION):] if self.kind is Kind.CONTINUATION else self.token


class Vocabulary:
    """Immutable ordered token set: specials, then semantic, then residual.

    Build through :meth:`from_segments` or :func:`deserialize_model`.
    """

    def __init__(self, entries: Sequence[VocabEntry]):
        self.entries: tuple[VocabEntry, ...] = tuple(entries)
        self.index: dict[str, int] = {}
        seen_regular = False
        for i, e in enumerate(self.entries):
            if e.id != i:
                raise ValueError(f"ids must be dense: entry {i} has id {e.id}")
            if e.token in self.index:
                raise ValueError(f"duplicate token {e.token!r}")
            if e.segment is Segment.SPECIAL:
                if seen_regular:
                    raise ValueError(f"special {e.token!r} after regular tokens")
            else:
                seen_regular = True
            self.index[e.token] = i
        self.specials = tuple(e.token for e in self.entries if e.segment is Segment.SPECIAL)
        n_regular = len(self.entries) - len(self.specials)
        n_semantic = sum(e.segment is Segment.SEMANTIC for e in self.entries)
        self.f = n_semantic / n_regular if n_regular else 0.0
        self.unk_id = self.index.get(UNK)
        self.max_token_chars = max((len(e.payload) for e in self.entries), default=0)

    @classmethod
    def from_segments(cls, specials: Iterable[str],
                      semantic: Iterable[tuple[str, float]] = (),
                      residual: Iterable[tuple[str, float]] = ()) -> "Vocabulary":
        """Assemble a vocabulary from (token, score) pairs per segment."""
        entries = []
        for tok in specials:
            entries.append(VocabEntry(tok, Kind.INITIAL, Segment.SPECIAL, 0.0, len(entries)))
        for segment, items in ((Segment.SEMANTIC, semantic), (Segment.RESIDUAL, residual)):
            for tok, score in items:
                entries.append(VocabEntry(tok, kind_of(tok), segment, _clean_score(score), len(entries)))
        return cls(entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, token: str) -> bool:
        return token in self.index

    def __eq__(self, other) -> bool:
        return isinstance(other, Vocabulary) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"Vocabulary(size={len(self)}, f={self.f:.6f})"

    def lookup(self, token: str) -> Optional[int]:
        return self.index.get(token)

    def token(self, id_: int) -> str:
        if not 0 <= id_ < len(self.entries):
            raise IndexError(f"token id {id_} out of range [0, {len(self.entries)})")
        return self.entries[id_].token

    def segment_sizes(self) -> dict[Segment, int]:
        sizes = {s: 0 for s in Segment}
        for e in self.entries:
            sizes[e.segment] += 1
        return sizes


def lookup(vocab: Vocabulary, token: str) -> Optional[int]:
    return vocab.lookup(token)


def serialize_model(vocab: Vocabulary) -> bytes:
    lines = [FORMAT_HEADER, f"#f\t{vocab.f:.6f}"]
    for e in vocab.entries:
        lines.append(f"{e.token}\t{e.score:.6f}\t{e.kind.value}\t{e.segment.value}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def deserialize_model(data: bytes) -> Vocabulary:
    """Parse a model file, checking every vocabulary invariant.

    Errors carry the 1-based line number of the offending line.
    """
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ModelFormatError(f"invalid UTF-8 at byte {exc.start}") from None
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ModelFormatError("missing header", 1)
    if lines[0] != FORMAT_HEADER:
        raise ModelFormatError(f"bad header {lines[0]!r}, expected {FORMAT_HEADER!r}", 1)
    if len(lines) < 2 or not lines[1].startswith("#f\t"):
        raise ModelFormatError("missing '#f' line", 2)
    try:
        declared_f = float(lines[1][3:])
    except ValueError:
        raise ModelFormatError(f"bad fraction {lines[1][3:]!r}", 2) from None

    kinds = {k.value: k for k in Kind}
    segments = {s.value: s for s in Segment}
    entries = []
    seen: dict[str, int] = {}
    for lineno, line in enumerate(lines[2:], 3):
        parts = line.split("\t")
        if len(parts) != 4:
            raise ModelFormatError(f"expected 4 tab-separated fields, got {len(parts)}", lineno)
        tok, score_s, kind_s, seg_s = parts
        if tok in seen:
            raise ModelFormatError(f"duplicate token {tok!r} (first on line {seen[tok]})", lineno)
        seen[tok] = lineno
        try:
            score = float(score_s)
        except ValueError:
            raise ModelFormatError(f"bad score {score_s!r}", lineno) from None
        if kind_s not in kinds or seg_s not in segments:
            raise ModelFormatError(f"bad kind/segment {kind_s!r}/{seg_s!r}", lineno)
        try:
            entries.append(VocabEntry(tok, kinds[kind_s], segments[seg_s], score, len(entries)))
        except ValueError as exc:
            raise ModelFormatError(str(exc), lineno) from None
    try:
        vocab = Vocabulary(entries)
    except ValueError as exc:
        raise ModelFormatError(str(exc)) from None
    if f"{vocab.f:.6f}" != f"{declared_f:.6f}":
        raise ModelFormatError(f"declared f {declared_f:.6f} != realized {vocab.f:.6f}", 2)
    return vocab


def export_bert_vocab(vocab: Vocabulary) -> bytes:
    return "".join(e.token + "\n" for e in vocab.entries).encode("utf-8")

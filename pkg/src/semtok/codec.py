"""Greedy longest-match-first (WordPiece-style) encoder and decoder."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .corpus import NormalizationConfig, normalize_text, split_words
from .vocab import CONTINUATION, UNK, Kind, Vocabulary

MAX_WORD_CHARS = 100


@dataclass(frozen=True)
class Encoding:
    ids: tuple[int, ...] = ()
    pieces: tuple[str, ...] = ()
    unk_positions: tuple[int, ...] = field(default=())

    def __len__(self) -> int:
        return len(self.ids)


def encode_word(word: str, vocab: Vocabulary, max_word_chars: int = MAX_WORD_CHARS) -> list[str]:
    """Segment one word by repeatedly taking the longest vocabulary match.

    The first piece is an initial token; later pieces are ``##`` tokens.
    There is no backtracking: if some position has no match, or the word is
    longer than ``max_word_chars``, the whole word becomes ``[UNK]``.
    """
    n = len(word)
    if n > max_word_chars:
        return [UNK]
    index = vocab.index
    longest = vocab.max_token_chars
    pieces = []
    start = 0
    while start < n:
        end = min(n, start + longest)
        prefix = CONTINUATION if start else ""
        while end > start:
            cand = prefix + word[start:end]
            if cand in index:
                pieces.append(cand)
                break
            end -= 1
        else:
            return [UNK]
        start = end
    return pieces


class Encoder:
    """Reusable encoder with a per-word memo; safe to share read-only vocabularies.

    The memo only ever maps a word to its (deterministic) encoding, so sharing
    it between threads cannot change results.
    """

    def __init__(self, vocab: Vocabulary, norm: NormalizationConfig = NormalizationConfig(),
                 max_word_chars: int = MAX_WORD_CHARS, cache_size: int = 1 << 18):
        if vocab.unk_id is None:
            raise ValueError(f"vocabulary has no {UNK} token")
        self.vocab = vocab
        self.norm = norm
        self.max_word_chars = max_word_chars
        self.cache_size = cache_size
        self._cache: dict[str, tuple[tuple[int, ...], tuple[str, ...]]] = {}

    def word(self, word: str) -> tuple[tuple[int, ...], tuple[str, ...]]:
        hit = self._cache.get(word)
        if hit is None:
            pieces = tuple(encode_word(word, self.vocab, self.max_word_chars))
            hit = (tuple(self.vocab.index[p] for p in pieces), pieces)
            if len(self._cache) < self.cache_size:
                self._cache[word] = hit
        return hit

    def encode(self, text: str) -> Encoding:
        ids: list[int] = []
        pieces: list[str] = []
        for w in split_words(normalize_text(text, self.norm)):
            wi, wp = self.word(w)
            ids.extend(wi)
            pieces.extend(wp)
        unk = self.vocab.unk_id
        return Encoding(tuple(ids), tuple(pieces), tuple(i for i, x in enumerate(ids) if x == unk))


def encode_text(text: str, vocab: Vocabulary,
                norm: NormalizationConfig = NormalizationConfig()) -> Encoding:
    """Normalize, split into words and encode each word; no specials are added."""
    return Encoder(vocab, norm).encode(text)


def decode(ids: Sequence[int], vocab: Vocabulary) -> str:
    """Join pieces back into space-separated words.

    Continuation pieces attach to the previous word with the marker stripped;
    every other piece (including ``[UNK]``) starts a new word.
    """
    words: list[str] = []
    for i in ids:
        e = vocab.entries[_check_id(i, vocab)]
        if e.kind is Kind.CONTINUATION and words:
            words[-1] += e.payload
        else:
            words.append(e.payload)
    return " ".join(words)


def decode_pieces(pieces: Sequence[str], vocab: Vocabulary) -> str:
    ids = []
    for p in pieces:
        i = vocab.lookup(p)
        if i is None:
            raise KeyError(f"piece {p!r} is not in the vocabulary")
        ids.append(i)
    return decode(ids, vocab)


def _check_id(i: int, vocab: Vocabulary) -> int:
    if not isinstance(i, int) or not 0 <= i < len(vocab):
        raise IndexError(f"token id {i!r} out of range [0, {len(vocab)})")
    return i

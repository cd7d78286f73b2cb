"""Semantic vocabulary trainer.

The vocabulary is split into a semantic segment, filled with Porter 2 stems,
``##`` suffixes and unstemmable words in corpus-frequency order, and a
residual segment filled by BPE over the words the semantic segment cannot
encode. ``semantic_fraction`` sets the share of the non-special budget given
to the first segment.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import bpe
from .codec import encode_word
from .corpus import NormalizationConfig, WordFrequencyTable, build_frequency_table
from .stemmer import split_stem_suffix
from .vocab import CONTINUATION, DEFAULT_SPECIALS, UNK, Vocabulary


@dataclass(frozen=True)
class TrainerConfig:
    vocab_size: int = 8192
    semantic_fraction: float = 0.9
    min_frequency: int = 2
    min_stem_length: int = 2
    character_coverage: float = 0.9999
    specials: tuple[str, ...] = DEFAULT_SPECIALS
    normalization: NormalizationConfig = field(default_factory=NormalizationConfig)

    def __post_init__(self):
        if self.vocab_size <= len(self.specials):
            raise bpe.ConfigError(f"vocab_size {self.vocab_size} must exceed {len(self.specials)} specials")
        if not 0 < self.semantic_fraction <= 1:
            raise bpe.ConfigError(f"semantic_fraction must be in (0, 1], got {self.semantic_fraction}")
        if self.min_frequency < 1:
            raise bpe.ConfigError("min_frequency must be >= 1")
        if self.min_stem_length < 1:
            raise bpe.ConfigError("min_stem_length must be >= 1")
        if not 0 < self.character_coverage <= 1:
            raise bpe.ConfigError(f"character_coverage must be in (0, 1], got {self.character_coverage}")
        if UNK not in self.specials:
            raise bpe.ConfigError(f"specials must include {UNK}")
        if len(set(self.specials)) != len(self.specials):
            raise bpe.ConfigError("duplicate special tokens")

    @property
    def semantic_capacity(self) -> int:
        # round half up; Python's round() would send 0.5 to the even side
        return int(math.floor(self.semantic_fraction * (self.vocab_size - len(self.specials)) + 0.5))


@dataclass
class CandidateStats:
    token: str
    occurrence_mass: int


def populate_semantic_segment(freq: WordFrequencyTable, config: TrainerConfig) -> list[CandidateStats]:
    """Fill the semantic segment from words in descending frequency.

    A stemmable word contributes its stem and ``##suffix``; any other word is
    added whole. Each credited token gets the word's count. Once capacity is
    reached no new tokens are admitted, but tokens already present keep
    accumulating mass until the table is exhausted. Returned in insertion order.
    """
    capacity = config.semantic_capacity
    found: dict[str, CandidateStats] = {}
    for word, count in freq.most_common():
        if count < config.min_frequency:
            break
        split = split_stem_suffix(word, config.min_stem_length)
        parts = [word] if split is None else [split.stem, CONTINUATION + split.suffix]
        for tok in parts:
            cand = found.get(tok)
            if cand is not None:
                cand.occurrence_mass += count
            elif len(found) < capacity:
                found[tok] = CandidateStats(tok, count)
    return list(found.values())


def residual_words(freq: WordFrequencyTable, semantic: Sequence[str],
                   specials: Sequence[str] = DEFAULT_SPECIALS) -> dict[str, int]:
    """Words that the semantic tokens alone cannot encode (greedy result is [UNK])."""
    v1 = Vocabulary.from_segments(specials, [(t, 0.0) for t in semantic])
    return {w: c for w, c in freq.entries.items() if encode_word(w, v1) == [UNK]}


def train_bpe_residual(freq: WordFrequencyTable, v1: Sequence[CandidateStats],
                       config: TrainerConfig) -> list[CandidateStats]:
    """Fill the residual segment: covering alphabet first, then BPE merges.

    Merges are learned only over :func:`residual_words`. Tokens already in the
    semantic segment are skipped without consuming budget.
    """
    if config.semantic_fraction >= 1:
        return []
    budget = config.vocab_size - len(config.specials) - len(v1)
    if budget <= 0:
        return []
    taken = set(config.specials) | {c.token for c in v1}
    out: list[CandidateStats] = []
    alpha = bpe.alphabet(freq.entries, config.character_coverage)
    for tok, mass in alpha:
        if len(out) >= budget:
            return out
        if tok not in taken:
            taken.add(tok)
            out.append(CandidateStats(tok, mass))
    residual = residual_words(freq, [c.token for c in v1], config.specials)
    result = bpe.learn_merges(residual, budget - len(out), [t for t, _ in alpha], existing=taken)
    out.extend(CandidateStats(t, m) for t, m in result.tokens)
    return out


def compute_scores(candidates: Iterable) -> list[float]:
    """Log relative occurrence mass, ``ln(mass / total mass)``.

    Accepts CandidateStats or (token, mass) pairs.
    """
    masses = [c.occurrence_mass if isinstance(c, CandidateStats) else c[1] for c in candidates]
    total = math.fsum(masses)
    if not masses:
        return []
    if total <= 0:
        raise ValueError("total occurrence mass must be positive")
    return [math.log(m / total) for m in masses]


@dataclass(frozen=True)
class TrainingSummary:
    vocab_size: int
    specials: int
    semantic: int
    residual: int
    realized_f: float
    residual_words: int

    def render(self) -> str:
        return (f"vocab_size: {self.vocab_size}\n"
                f"specials: {self.specials}\n"
                f"semantic_tokens: {self.semantic}\n"
                f"residual_tokens: {self.residual}\n"
                f"realized_f: {self.realized_f:.6f}\n"
                f"residual_words: {self.residual_words}\n")


def train_from_table(freq: WordFrequencyTable, config: TrainerConfig) -> tuple[Vocabulary, TrainingSummary]:
    if not freq.entries:
        raise ValueError("cannot train on an empty corpus")
    v1 = populate_semantic_segment(freq, config)
    v1.sort(key=lambda c: (-c.occurrence_mass, c.token))
    v2 = train_bpe_residual(freq, v1, config)
    scores = compute_scores(v1 + v2)
    vocab = Vocabulary.from_segments(
        config.specials,
        semantic=[(c.token, s) for c, s in zip(v1, scores)],
        residual=[(c.token, s) for c, s in zip(v2, scores[len(v1):])],
    )
    n_residual_words = (len(residual_words(freq, [c.token for c in v1], config.specials))
                        if config.semantic_fraction < 1 else 0)
    summary = TrainingSummary(len(vocab), len(config.specials), len(v1), len(v2), vocab.f, n_residual_words)
    return vocab, summary


def train(corpus: Iterable[str], config: TrainerConfig) -> Vocabulary:
    """Train a semantic vocabulary from an iterable of documents."""
    return train_from_table(build_frequency_table(corpus, config.normalization), config)[0]

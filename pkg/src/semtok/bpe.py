"""Frequency-merge BPE over ``##``-marked word pieces.

Used directly as the comparison baseline and by the semantic trainer to fill
the residual segment. Merges never cross word boundaries.
"""

from __future__ import annotations

import heapq
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Mapping, Optional, Sequence

from .corpus import WordFrequencyTable
from .vocab import CONTINUATION, UNK, Vocabulary

if TYPE_CHECKING:
    from .trainer import TrainerConfig


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class MergeRule:
    left: str
    right: str
    rank: int

    @property
    def token(self) -> str:
        return self.left + self.right[len(CONTINUATION):]


@dataclass(frozen=True)
class BpeResult:
    """Learned merges plus the new tokens they introduced, with pair counts."""
    merges: tuple[MergeRule, ...]
    tokens: tuple[tuple[str, int], ...]


def char_pieces(word: str) -> list[str]:
    return [word[0]] + [CONTINUATION + c for c in word[1:]] if word else []


def character_forms(freq: Mapping[str, int]) -> Counter:
    """Occurrence mass of each single-character piece (initial and ``##`` forms)."""
    mass: Counter = Counter()
    for word, count in freq.items():
        for piece in char_pieces(word):
            mass[piece] += count
    return mass


def alphabet(freq: Mapping[str, int], character_coverage: float) -> list[tuple[str, int]]:
    """Most frequent character pieces covering ``character_coverage`` of the mass.

    Ordered by descending mass, ties lexicographic.
    """
    mass = character_forms(freq)
    total = sum(mass.values())
    chosen = []
    covered = 0
    for piece, m in sorted(mass.items(), key=lambda kv: (-kv[1], kv[0])):
        if covered >= character_coverage * total:
            break
        chosen.append((piece, m))
        covered += m
    return chosen


def learn_merges(words: Mapping[str, int], budget: int,
                 known: Iterable[str], existing: Iterable[str] = ()) -> BpeResult:
    """Greedily merge the most frequent adjacent piece pair until ``budget`` new tokens.

    ``known`` is the starting alphabet; pieces outside it never take part in a
    pair. Merges whose result is already in ``existing`` (or was produced
    earlier) are still applied but do not consume budget. Ties on pair count go
    to the lexicographically smallest (left, right).
    """
    known = set(known)
    taken = set(existing) | known
    seqs = [char_pieces(w) for w in sorted(words)]
    counts = [words[w] for w in sorted(words)]

    pair_count: dict[tuple[str, str], int] = defaultdict(int)
    where: dict[tuple[str, str], set[int]] = defaultdict(set)

    def pairs(seq):
        for a, b in zip(seq, seq[1:]):
            if a in known and b in known:
                yield a, b

    for i, seq in enumerate(seqs):
        for p in pairs(seq):
            pair_count[p] += counts[i]
            where[p].add(i)
    heap = [(-c, a, b) for (a, b), c in pair_count.items()]
    heapq.heapify(heap)

    merges: list[MergeRule] = []
    new_tokens: list[tuple[str, int]] = []
    while len(new_tokens) < budget and heap:
        negc, a, b = heapq.heappop(heap)
        if pair_count.get((a, b), 0) != -negc or negc == 0:
            continue
        rule = MergeRule(a, b, len(merges))
        merged = rule.token
        merges.append(rule)
        known.add(merged)
        if merged not in taken:
            taken.add(merged)
            new_tokens.append((merged, -negc))

        touched: dict[tuple[str, str], int] = {}
        for i in sorted(where.pop((a, b), ())):
            seq = seqs[i]
            for p in pairs(seq):
                pair_count[p] -= counts[i]
                touched[p] = pair_count[p]
            out = []
            j = 0
            while j < len(seq):
                if j + 1 < len(seq) and seq[j] == a and seq[j + 1] == b:
                    out.append(merged)
                    j += 2
                else:
                    out.append(seq[j])
                    j += 1
            seqs[i] = out
            for p in pairs(out):
                pair_count[p] += counts[i]
                where[p].add(i)
                touched[p] = pair_count[p]
        pair_count.pop((a, b), None)
        for p, c in touched.items():
            if p == (a, b):
                continue
            if c > 0:
                heapq.heappush(heap, (-c, p[0], p[1]))
            else:
                pair_count.pop(p, None)
                where.pop(p, None)
    return BpeResult(tuple(merges), tuple(new_tokens))


def apply_merges(word: str, rules: Sequence[MergeRule],
                 alphabet: Optional[Iterable[str]] = None) -> list[str]:
    """Encode a word by replaying merges, lowest rank first.

    With an ``alphabet``, a word containing a character piece outside it
    becomes ``[UNK]``.
    """
    seq = char_pieces(word)
    if alphabet is not None:
        allowed = set(alphabet)
        if any(p not in allowed for p in seq):
            return [UNK]
    ranks = {(r.left, r.right): r.rank for r in rules}
    while len(seq) > 1:
        best = min(((ranks[p], p) for p in zip(seq, seq[1:]) if p in ranks), default=None)
        if best is None:
            break
        a, b = best[1]
        merged = a + b[len(CONTINUATION):]
        out = []
        j = 0
        while j < len(seq):
            if j + 1 < len(seq) and seq[j] == a and seq[j + 1] == b:
                out.append(merged)
                j += 2
            else:
                out.append(seq[j])
                j += 1
        seq = out
    return seq


def train_bpe(freq: WordFrequencyTable, vocab_size: int,
              config: Optional["TrainerConfig"] = None) -> Vocabulary:
    """Baseline vocabulary: specials, covering alphabet, then BPE merges.

    All non-special tokens land in the residual segment. Raises ConfigError
    when ``vocab_size`` cannot hold the specials plus the alphabet.
    """
    from .trainer import TrainerConfig, compute_scores

    config = config or TrainerConfig(vocab_size=vocab_size)
    specials = list(config.specials)
    alpha = [(t, m) for t, m in alphabet(freq.entries, config.character_coverage) if t not in specials]
    room = vocab_size - len(specials) - len(alpha)
    if room < 0:
        raise ConfigError(
            f"vocab_size {vocab_size} < {len(specials)} specials + {len(alpha)} alphabet tokens")
    result = learn_merges(freq.entries, room, [t for t, _ in alpha], existing=specials)
    tokens = alpha + list(result.tokens)
    scores = compute_scores(tokens)
    return Vocabulary.from_segments(specials, residual=zip([t for t, _ in tokens], scores))

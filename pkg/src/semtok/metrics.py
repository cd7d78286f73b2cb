"""Vocabulary efficiency metrics: wordform coverage, pieces per word, UNK rates."""

from __future__ import annotations

import math
from dataclasses import dataclass, fields
from typing import Callable, Optional, Sequence

from .codec import MAX_WORD_CHARS, encode_word
from .corpus import WordFrequencyTable
from .stemmer import split_stem_suffix
from .vocab import UNK, Vocabulary


@dataclass(frozen=True)
class EfficiencyReport:
    wordforms_le2: int
    avg_pieces: float
    cov: float
    unk_word_rate: float
    occurrence_unk_rate: float
    stem_usage_rate: float
    # occurrence-weighted variants of avg/cov, reported alongside
    occ_avg_pieces: float = 0.0
    occ_cov: float = 0.0
    distinct_words: int = 0

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def _encodings(vocab: Vocabulary, freq: WordFrequencyTable) -> dict[str, list[str]]:
    return {w: encode_word(w, vocab, MAX_WORD_CHARS) for w in sorted(freq.entries)}


def _is_unk(pieces: Sequence[str]) -> bool:
    return UNK in pieces


def wordform_coverage(vocab: Vocabulary, freq: WordFrequencyTable, max_pieces: int = 2) -> int:
    """Distinct words encoded in at most ``max_pieces`` pieces, none of them UNK."""
    if max_pieces < 1:
        raise ValueError("max_pieces must be >= 1")
    n = 0
    for w in freq.entries:
        pieces = encode_word(w, vocab)
        if len(pieces) <= max_pieces and not _is_unk(pieces):
            n += 1
    return n


def mean_and_cov(values: Sequence[float], weights: Optional[Sequence[float]] = None) -> tuple[float, float]:
    """Mean and coefficient of variation in percent (population std / mean)."""
    if not values:
        raise ValueError("no values")
    if weights is None:
        weights = [1] * len(values)
    total = math.fsum(weights)
    mean = math.fsum(v * w for v, w in zip(values, weights)) / total
    var = math.fsum(w * (v - mean) ** 2 for v, w in zip(values, weights)) / total
    return mean, (math.sqrt(var) / mean * 100.0 if mean else 0.0)


def subword_stats(vocab: Vocabulary, freq: WordFrequencyTable) -> tuple[float, float]:
    """(average pieces per distinct word, CoV %). UNK words count as one piece."""
    if not freq.entries:
        raise ValueError("empty frequency table")
    return mean_and_cov([len(encode_word(w, vocab)) for w in freq.entries])


def unk_rates(vocab: Vocabulary, freq: WordFrequencyTable) -> tuple[float, float]:
    """(fraction of distinct words that are UNK, occurrence-weighted UNK fraction)."""
    if not freq.entries:
        return 0.0, 0.0
    unk_words = unk_occ = 0
    for w, c in freq.entries.items():
        if _is_unk(encode_word(w, vocab)):
            unk_words += 1
            unk_occ += c
    return unk_words / len(freq.entries), unk_occ / freq.total


def stem_usage_rate(vocab: Vocabulary, freq: WordFrequencyTable, min_stem_length: int = 2) -> float:
    """Share of stemmable words whose encoding starts with their own stem."""
    stemmable = used = 0
    for w in freq.entries:
        split = split_stem_suffix(w, min_stem_length)
        if split is None:
            continue
        stemmable += 1
        if encode_word(w, vocab)[0] == split.stem:
            used += 1
    return used / stemmable if stemmable else 0.0


def efficiency_report(vocab: Vocabulary, freq: WordFrequencyTable, max_pieces: int = 2) -> EfficiencyReport:
    if not freq.entries:
        raise ValueError("empty frequency table")
    enc = _encodings(vocab, freq)
    words = list(enc)
    lengths = [len(enc[w]) for w in words]
    unk = [_is_unk(enc[w]) for w in words]
    counts = [freq.entries[w] for w in words]
    avg, cov = mean_and_cov(lengths)
    occ_avg, occ_cov = mean_and_cov(lengths, counts)
    covered = sum(1 for n, u in zip(lengths, unk) if n <= max_pieces and not u)
    stemmable = used = 0
    for w in words:
        split = split_stem_suffix(w)
        if split is not None:
            stemmable += 1
            used += enc[w][0] == split.stem
    return EfficiencyReport(
        wordforms_le2=covered,
        avg_pieces=avg,
        cov=cov,
        unk_word_rate=sum(unk) / len(words),
        occurrence_unk_rate=sum(c for c, u in zip(counts, unk) if u) / freq.total,
        stem_usage_rate=used / stemmable if stemmable else 0.0,
        occ_avg_pieces=occ_avg,
        occ_cov=occ_cov,
        distinct_words=len(words),
    )


def _fmt(value) -> str:
    return str(value) if isinstance(value, int) else f"{value:.6f}"


def render_report_tsv(report: EfficiencyReport) -> str:
    return "".join(f"{k}\t{_fmt(v)}\n" for k, v in report.as_dict().items())


def render_report_text(report: EfficiencyReport) -> str:
    d = report.as_dict()
    width = max(map(len, d))
    return "".join(f"{k:<{width}}  {_fmt(v)}\n" for k, v in d.items())


@dataclass(frozen=True)
class Comparison:
    a: EfficiencyReport
    b: EfficiencyReport

    @property
    def deltas(self) -> dict:
        da, db = self.a.as_dict(), self.b.as_dict()
        return {k: da[k] - db[k] for k in da}

    def render_tsv(self, names: tuple[str, str] = ("A", "B")) -> str:
        da, db, dd = self.a.as_dict(), self.b.as_dict(), self.deltas
        rows = [f"metric\t{names[0]}\t{names[1]}\tdelta"]
        rows += [f"{k}\t{_fmt(da[k])}\t{_fmt(db[k])}\t{_fmt(dd[k])}" for k in da]
        return "\n".join(rows) + "\n"

    def render_text(self, names: tuple[str, str] = ("A", "B")) -> str:
        table = [line.split("\t") for line in self.render_tsv(names).splitlines()]
        widths = [max(len(r[i]) for r in table) for i in range(4)]
        return "".join(
            "  ".join(c.ljust(w) if i == 0 else c.rjust(w) for i, (c, w) in enumerate(zip(r, widths))).rstrip() + "\n"
            for r in table)


def compare_vocabularies(vocab_a: Vocabulary, vocab_b: Vocabulary, freq: WordFrequencyTable,
                         max_pieces: int = 2) -> Comparison:
    """Side-by-side reports; deltas are A minus B."""
    return Comparison(efficiency_report(vocab_a, freq, max_pieces),
                      efficiency_report(vocab_b, freq, max_pieces))


@dataclass(frozen=True)
class SweepRow:
    fraction: float
    realized_f: float
    size: int
    report: EfficiencyReport


@dataclass(frozen=True)
class SweepReport:
    rows: tuple[SweepRow, ...]

    @property
    def unk_monotone(self) -> bool:
        """True when the occurrence UNK rate never falls as f grows."""
        rates = [r.report.occurrence_unk_rate for r in sorted(self.rows, key=lambda r: r.fraction)]
        return all(a <= b for a, b in zip(rates, rates[1:]))

    def render_tsv(self) -> str:
        out = ["f\trealized_f\tsize\twordforms_le2\tavg_pieces\tcov\tunk_word_rate"
               "\toccurrence_unk_rate\tstem_usage_rate"]
        for r in sorted(self.rows, key=lambda r: r.fraction):
            p = r.report
            out.append("\t".join([f"{r.fraction:.2f}", f"{r.realized_f:.6f}", str(r.size),
                                  str(p.wordforms_le2), f"{p.avg_pieces:.6f}", f"{p.cov:.6f}",
                                  f"{p.unk_word_rate:.6f}", f"{p.occurrence_unk_rate:.6f}",
                                  f"{p.stem_usage_rate:.6f}"]))
        out.append(f"# occurrence_unk_rate monotone non-decreasing in f: {'yes' if self.unk_monotone else 'no'}")
        return "\n".join(out) + "\n"


def sweep_semantic_fraction(freq: WordFrequencyTable, train: Callable[[float], Vocabulary],
                            fractions: Sequence[float] = (0.80, 0.85, 0.90, 0.95, 1.00),
                            max_pieces: int = 2) -> SweepReport:
    """Train one vocabulary per fraction via ``train(f)`` and report each."""
    rows = []
    for f in fractions:
        vocab = train(f)
        rows.append(SweepRow(f, vocab.f, len(vocab), efficiency_report(vocab, freq, max_pieces)))
    return SweepReport(tuple(rows))

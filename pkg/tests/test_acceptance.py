"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line (printed in the terminal summary) before
asserting, so a full run lists the status of all ten criteria.
"""

import random
import time

import pytest

from oracles import greedy_oracle, oracle_normalize, oracle_split
from semtok.bpe import train_bpe
from semtok.codec import Encoder, decode, encode_word
from semtok.corpus import build_frequency_table, build_frequency_table_from_files, normalize_text, split_words
from semtok.metrics import efficiency_report, sweep_semantic_fraction, wordform_coverage
from semtok.stemmer import stem
from semtok.trainer import TrainerConfig, train_from_table
from semtok.vocab import Vocabulary, serialize_model

from conftest import CONDITION_FORMS, DATA, MINICORPUS

RESULTS: list[str] = []

VOCAB_SIZE = 8192
FRACTION = 0.9
COVERAGE_GAIN = 1.30
AVG_PIECES_SLACK = 0.1
MAX_OCC_UNK = 0.001
MIN_WORDS_PER_SEC = 100_000


def record(n, ok, detail):
    RESULTS.append(f"{'PASS' if ok else 'FAIL'}  criterion {n:>2}: {detail}")
    assert ok, detail


@pytest.fixture(scope="module")
def head_to_head():
    t0 = time.perf_counter()
    freq = build_frequency_table_from_files([MINICORPUS])
    sem = train_from_table(freq, TrainerConfig(vocab_size=VOCAB_SIZE, semantic_fraction=FRACTION))[0]
    base = train_bpe(freq, VOCAB_SIZE)
    cov_sem, cov_base = wordform_coverage(sem, freq), wordform_coverage(base, freq)
    elapsed = time.perf_counter() - t0
    return freq, sem, base, cov_sem, cov_base, elapsed


def test_c01_stemmer_conformance():
    t0 = time.perf_counter()
    total = bad = 0
    with open(DATA / "snowball_english.tsv", encoding="utf-8") as fh:
        for line in fh:
            word, want = line.rstrip("\n").split("\t")
            total += 1
            bad += stem(word) != want
    elapsed = time.perf_counter() - t0
    record(1, bad == 0 and total > 20_000 and elapsed < 5.0,
           f"stemmer {total - bad}/{total} reference pairs in {elapsed:.2f}s (need all, < 5s)")


def test_c02_encoder_oracle():
    rnd = random.Random(20240601)
    n = 2000
    mismatches = 0
    for _ in range(n):
        alpha = "abcd"[: rnd.randint(2, 4)]
        tokens = set()
        for _ in range(rnd.randint(0, 40)):
            p = "".join(rnd.choice(alpha) for _ in range(rnd.randint(1, 4)))
            tokens.add("##" + p if rnd.random() < 0.5 else p)
        tokens = sorted(tokens)
        word = "".join(rnd.choice(alpha) for _ in range(rnd.randint(1, 12)))
        vocab = Vocabulary.from_segments(["[UNK]"], [(t, -1.0) for t in tokens])
        mismatches += encode_word(word, vocab) != greedy_oracle(word, tokens)
    record(2, mismatches == 0, f"encode_word vs exhaustive greedy oracle: {mismatches} mismatches in {n} instances")


def test_c03_roundtrip(mini_lines, semantic_8k):
    enc = Encoder(semantic_8k)
    rnd = random.Random(11)
    order = list(range(len(mini_lines)))
    rnd.shuffle(order)
    checked = ok = 0
    for i in order:
        e = enc.encode(mini_lines[i])
        if e.unk_positions or not e.ids:
            continue
        checked += 1
        ok += decode(e.ids, semantic_8k) == " ".join(oracle_split(oracle_normalize(mini_lines[i])))
        if checked == 10_000:
            break
    record(3, checked == 10_000 and ok == checked, f"round-trip {ok}/{checked} UNK-free corpus lines")


def test_c04_determinism(tmp_path, mini_lines):
    cfg = TrainerConfig(vocab_size=VOCAB_SIZE, semantic_fraction=FRACTION)
    runs = [serialize_model(train_from_table(build_frequency_table_from_files([MINICORPUS]), cfg)[0])
            for _ in range(2)]
    shuffled = mini_lines[:]
    random.Random(5).shuffle(shuffled)
    permuted = serialize_model(train_from_table(build_frequency_table(shuffled), cfg)[0])
    same = runs[0] == runs[1]
    record(4, same and permuted == runs[0],
           f"two runs identical: {same}; permuted documents identical: {permuted == runs[0]}")


def test_c05_coverage_direction(head_to_head):
    _, _, _, cov_sem, cov_base, elapsed = head_to_head
    ratio = cov_sem / cov_base
    record(5, ratio >= COVERAGE_GAIN and elapsed < 300,
           f"wordforms <=2 pieces: semantic {cov_sem} vs BPE {cov_base}, ratio {ratio:.3f} "
           f"(need >= {COVERAGE_GAIN}), {elapsed:.1f}s (need < 300s)")


def test_c06_cost_direction(head_to_head):
    freq, sem, base, *_ = head_to_head
    a, b = efficiency_report(sem, freq).avg_pieces, efficiency_report(base, freq).avg_pieces
    record(6, a <= b + AVG_PIECES_SLACK,
           f"avg pieces/word: semantic {a:.4f} vs BPE {b:.4f} (need <= BPE + {AVG_PIECES_SLACK})")


def test_c07_unk_objective(mini_freq, semantic_8k):
    rate = efficiency_report(semantic_8k, mini_freq).occurrence_unk_rate
    record(7, rate < MAX_OCC_UNK, f"occurrence-weighted UNK rate {rate:.2e} (need < {MAX_OCC_UNK})")


def test_c08_fraction_sweep(mini_freq):
    def train(f):
        return train_from_table(mini_freq, TrainerConfig(vocab_size=VOCAB_SIZE, semantic_fraction=f))[0]

    report = sweep_semantic_fraction(mini_freq, train)
    print(report.render_tsv())
    rates = {r.fraction: r.report.occurrence_unk_rate for r in report.rows}
    done = sorted(rates) == [0.80, 0.85, 0.90, 0.95, 1.00]
    record(8, done and rates[1.0] > rates[0.9],
           f"sweep over {len(rates)} fractions, UNK monotone: {report.unk_monotone}; "
           f"UNK f=1.00 {rates[1.0]:.2e} vs f=0.90 {rates[0.9]:.2e} (need strictly higher)")


def test_c09_condition_forms(condition_vocab):
    wrong = [w for w, want in CONDITION_FORMS.items() if encode_word(w, condition_vocab) != want]
    record(9, not wrong, f"{len(CONDITION_FORMS) - len(wrong)}/{len(CONDITION_FORMS)} wordforms of 'condition'")


def test_c10_throughput(mini_lines, semantic_8k):
    enc = Encoder(semantic_8k)
    lines = mini_lines[:50_000]
    words = sum(len(split_words(normalize_text(line))) for line in lines)
    t0 = time.perf_counter()
    for line in lines:
        enc.encode(line)
    elapsed = time.perf_counter() - t0
    rate = words / elapsed
    record(10, rate >= MIN_WORDS_PER_SEC, f"{rate:,.0f} words/s over {words} words (need >= {MIN_WORDS_PER_SEC:,})")

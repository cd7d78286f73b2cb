"""Regenerate golden files under tests/data/.

* sample_freq.tsv       -- word counts of sample.txt from the independent
                           counting oracle in tests/oracles.py
* sample_v64.model      -- semantic model, vocab_size=64, f=0.9 on sample.txt
* sample_v64.vocab.txt  -- its BERT export
* minicorpus_bpe4096.model -- BPE baseline on the full mini-corpus

Golden files are reviewed by hand when regenerated; tests compare bytes.
"""

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))

from oracles import oracle_count  # noqa: E402

from semtok.bpe import train_bpe  # noqa: E402
from semtok.corpus import WordFrequencyTable, build_frequency_table_from_files  # noqa: E402
from semtok.trainer import TrainerConfig, train  # noqa: E402
from semtok.vocab import export_bert_vocab, serialize_model  # noqa: E402

DATA = ROOT / "tests" / "data"


def main() -> None:
    lines = (DATA / "sample.txt").read_text(encoding="utf-8").splitlines()
    counts = oracle_count(lines)
    (DATA / "sample_freq.tsv").write_text(WordFrequencyTable.from_counter(counts).to_tsv(), encoding="utf-8")

    vocab = train(lines, TrainerConfig(vocab_size=64, semantic_fraction=0.9))
    (DATA / "sample_v64.model").write_bytes(serialize_model(vocab))
    (DATA / "sample_v64.vocab.txt").write_bytes(export_bert_vocab(vocab))

    freq = build_frequency_table_from_files([ROOT / "data" / "minicorpus.txt.gz"])
    (DATA / "minicorpus_bpe4096.model").write_bytes(serialize_model(train_bpe(freq, 4096)))
    print("golden fixtures written to", DATA)


if __name__ == "__main__":
    main()

"""Semantic vocabulary vs same-size BPE baseline on the mini-corpus.

Prints the side-by-side efficiency report for each vocabulary size given
(default 8192) and writes TSVs to results/ when --out is set.

    python3 scripts/compare_baseline.py --sizes 4096,8192,16384 --out results
"""

import argparse
import time
from pathlib import Path

from semtok.bpe import train_bpe
from semtok.corpus import build_frequency_table_from_files
from semtok.metrics import compare_vocabularies
from semtok.trainer import TrainerConfig, train_from_table

ROOT = Path(__file__).resolve().parent.parent


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--input", default=str(ROOT / "data" / "minicorpus.txt.gz"))
    ap.add_argument("--sizes", default="8192")
    ap.add_argument("--semantic-fraction", type=float, default=0.9)
    ap.add_argument("--out", type=Path, default=None)
    args = ap.parse_args()

    t0 = time.perf_counter()
    freq = build_frequency_table_from_files([args.input])
    print(f"{len(freq)} distinct words, {freq.total} occurrences ({time.perf_counter() - t0:.1f}s)\n")
    for size in map(int, args.sizes.split(",")):
        sem = train_from_table(freq, TrainerConfig(vocab_size=size, semantic_fraction=args.semantic_fraction))[0]
        base = train_bpe(freq, size)
        comp = compare_vocabularies(sem, base, freq)
        a, b = comp.a.wordforms_le2, comp.b.wordforms_le2
        print(f"|V| = {size}   coverage ratio semantic/bpe = {a / b:.3f}")
        print(comp.render_text(("semantic", "bpe")))
        if args.out:
            args.out.mkdir(parents=True, exist_ok=True)
            (args.out / f"compare_{size}.tsv").write_text(comp.render_tsv(("semantic", "bpe")))


if __name__ == "__main__":
    main()

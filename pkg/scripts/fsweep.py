"""Sweep the semantic fraction f at a fixed vocabulary size.

    python3 scripts/fsweep.py --vocab-size 8192 --fractions 0.8,0.85,0.9,0.95,1.0
"""

import argparse
from pathlib import Path

from semtok.corpus import build_frequency_table_from_files
from semtok.metrics import sweep_semantic_fraction
from semtok.trainer import TrainerConfig, train_from_table

ROOT = Path(__file__).resolve().parent.parent


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--input", default=str(ROOT / "data" / "minicorpus.txt.gz"))
    ap.add_argument("--vocab-size", type=int, default=8192)
    ap.add_argument("--fractions", default="0.80,0.85,0.90,0.95,1.00")
    ap.add_argument("--out", type=Path, default=None)
    args = ap.parse_args()

    freq = build_frequency_table_from_files([args.input])
    fractions = [float(f) for f in args.fractions.split(",")]
    report = sweep_semantic_fraction(
        freq, lambda f: train_from_table(freq, TrainerConfig(vocab_size=args.vocab_size, semantic_fraction=f))[0],
        fractions)
    text = report.render_tsv()
    print(text, end="")
    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(text)


if __name__ == "__main__":
    main()

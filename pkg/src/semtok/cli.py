"""Command-line interface: ``semtok {train,train-bpe,encode,decode,analyze,compare}``.

Exit status is 0 on success, 1 on usage errors and 2 on runtime errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence, TextIO

from .bpe import ConfigError, train_bpe
from .codec import Encoder, decode_pieces
from .corpus import (CorpusIOError, NormalizationConfig, build_frequency_table_from_files,
                     read_corpus)
from .metrics import compare_vocabularies, efficiency_report, render_report_text
from .trainer import TrainerConfig, train_from_table
from .vocab import ModelFormatError, Vocabulary, deserialize_model, export_bert_vocab, serialize_model


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _bool(text: str) -> bool:
    low = text.lower()
    if low in ("true", "1", "yes"):
        return True
    if low in ("false", "0", "no"):
        return False
    raise argparse.ArgumentTypeError(f"expected true/false, got {text!r}")


def _paths(text: str) -> list[str]:
    return [p for p in text.split(",") if p]


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="semtok", description="Semantic subword tokenizer")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, required=True)

    def norm_flags(p):
        p.add_argument("--lowercase", type=_bool, default=True, metavar="BOOL")

    train = sub.add_parser("train", help="train a semantic vocabulary")
    train_bpe_p = sub.add_parser("train-bpe", help="train a plain BPE baseline vocabulary")
    for p in (train, train_bpe_p):
        p.add_argument("--input", type=_paths, required=True, metavar="PATH[,PATH...]")
        p.add_argument("--model-prefix", required=True)
        p.add_argument("--vocab-size", type=int, required=True)
        p.add_argument("--character-coverage", type=float, default=0.9999)
        norm_flags(p)
    train.add_argument("--semantic-fraction", type=float, default=0.9)
    train.add_argument("--min-frequency", type=int, default=2)
    train.add_argument("--min-stem-length", type=int, default=2)

    enc = sub.add_parser("encode", help="encode lines of text to pieces or ids")
    enc.add_argument("--model", required=True, type=Path)
    enc.add_argument("--input", type=_paths, default=None, metavar="PATH[,PATH...]")
    enc.add_argument("--output-ids", action="store_true")
    norm_flags(enc)

    dec = sub.add_parser("decode", help="decode lines of space-separated pieces")
    dec.add_argument("--model", required=True, type=Path)
    dec.add_argument("--input", type=_paths, default=None, metavar="PATH[,PATH...]")

    ana = sub.add_parser("analyze", help="efficiency report of a model over a corpus")
    ana.add_argument("--model", required=True, type=Path)
    ana.add_argument("--input", type=_paths, required=True, metavar="PATH[,PATH...]")
    ana.add_argument("--max-pieces", type=int, default=2)
    norm_flags(ana)

    cmp_ = sub.add_parser("compare", help="compare a model against a baseline model")
    cmp_.add_argument("--model", required=True, type=Path)
    cmp_.add_argument("--baseline", required=True, type=Path)
    cmp_.add_argument("--input", type=_paths, required=True, metavar="PATH[,PATH...]")
    cmp_.add_argument("--max-pieces", type=int, default=2)
    norm_flags(cmp_)
    return parser


def _load(path: Path) -> Vocabulary:
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise CorpusIOError(f"{path}: {exc.strerror or exc}") from exc
    try:
        return deserialize_model(data)
    except ModelFormatError as exc:
        raise ModelFormatError(f"{path}: {exc}") from None


def _lines(paths: Optional[list[str]], stdin: TextIO):
    if not paths:
        for line in stdin:
            yield line.rstrip("\r\n")
        return
    yield from read_corpus(paths)


def _write_model(vocab: Vocabulary, prefix: str) -> None:
    Path(prefix).parent.mkdir(parents=True, exist_ok=True)
    Path(f"{prefix}.model").write_bytes(serialize_model(vocab))
    Path(f"{prefix}.vocab.txt").write_bytes(export_bert_vocab(vocab))


def _run(args, stdin: TextIO, stdout: TextIO) -> None:
    norm = NormalizationConfig(lowercase=getattr(args, "lowercase", True))
    if args.command == "train":
        config = TrainerConfig(
            vocab_size=args.vocab_size,
            semantic_fraction=args.semantic_fraction,
            min_frequency=args.min_frequency,
            min_stem_length=args.min_stem_length,
            character_coverage=args.character_coverage,
            normalization=norm,
        )
        freq = build_frequency_table_from_files(args.input, norm)
        vocab, summary = train_from_table(freq, config)
        _write_model(vocab, args.model_prefix)
        stdout.write(summary.render())
    elif args.command == "train-bpe":
        config = TrainerConfig(vocab_size=args.vocab_size,
                               character_coverage=args.character_coverage, normalization=norm)
        freq = build_frequency_table_from_files(args.input, norm)
        vocab = train_bpe(freq, args.vocab_size, config)
        _write_model(vocab, args.model_prefix)
        stdout.write(f"vocab_size: {len(vocab)}\n")
    elif args.command == "encode":
        encoder = Encoder(_load(args.model), norm)
        for line in _lines(args.input, stdin):
            enc = encoder.encode(line)
            out = enc.ids if args.output_ids else enc.pieces
            stdout.write(" ".join(map(str, out)) + "\n")
    elif args.command == "decode":
        vocab = _load(args.model)
        for line in _lines(args.input, stdin):
            stdout.write(decode_pieces(line.split(), vocab) + "\n")
    elif args.command == "analyze":
        vocab = _load(args.model)
        freq = build_frequency_table_from_files(args.input, norm)
        stdout.write(render_report_text(efficiency_report(vocab, freq, args.max_pieces)))
    elif args.command == "compare":
        vocab, base = _load(args.model), _load(args.baseline)
        freq = build_frequency_table_from_files(args.input, norm)
        report = compare_vocabularies(vocab, base, freq, args.max_pieces)
        stdout.write(report.render_text(("model", "baseline")))


def main(argv: Optional[Sequence[str]] = None, stdin: TextIO = None,
         stdout: TextIO = None, stderr: TextIO = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        stderr.write(f"{exc}\n")
        return 1
    try:
        _run(args, stdin, stdout)
    except ConfigError as exc:
        stderr.write(f"semtok {args.command}: {exc}\n")
        return 1
    except (ValueError, OSError, KeyError, IndexError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        stderr.write(f"semtok {args.command}: {msg}\n")
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())

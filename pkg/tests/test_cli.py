import io

import pytest

from semtok.cli import main
from semtok.vocab import deserialize_model

from conftest import DATA


def run(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), io.StringIO(stdin), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def model(tmp_path):
    prefix = tmp_path / "m" / "sample"
    code, out, _ = run("train", "--input", str(DATA / "sample.txt"), "--model-prefix", str(prefix),
                       "--vocab-size", "64", "--semantic-fraction", "0.9")
    assert code == 0
    assert "semantic_tokens: 53" in out
    return prefix


def test_train_writes_golden_artifacts(model):
    assert model.with_suffix(".model").read_bytes() == (DATA / "sample_v64.model").read_bytes()
    vocab_txt = model.parent / "sample.vocab.txt"
    assert vocab_txt.read_bytes() == (DATA / "sample_v64.vocab.txt").read_bytes()


def test_encode_decode_roundtrip(model):
    path = str(model) + ".model"
    code, out, _ = run("encode", "--model", path, stdin="And THE\nand\n")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2 and lines[1] == "and"
    code, back, _ = run("decode", "--model", path, stdin=out)
    assert code == 0 and back.splitlines() == ["and the", "and"]
    code, ids, _ = run("encode", "--model", path, "--output-ids", stdin="and\n")
    vocab = deserialize_model((DATA / "sample_v64.model").read_bytes())
    assert ids.strip() == str(vocab.index["and"])


def test_encode_reads_files(model, tmp_path):
    src = tmp_path / "in.txt"
    src.write_text("And God\n", encoding="utf-8")
    code, out, _ = run("encode", "--model", str(model) + ".model", "--input", str(src))
    assert code == 0 and out.startswith("and ")


def test_analyze_and_compare(model, tmp_path):
    path = str(model) + ".model"
    code, out, _ = run("analyze", "--model", path, "--input", str(DATA / "sample.txt"))
    assert code == 0 and out.startswith("wordforms_le2")
    bpe = tmp_path / "bpe"
    code, _, _ = run("train-bpe", "--input", str(DATA / "sample.txt"), "--model-prefix", str(bpe),
                     "--vocab-size", "200")
    assert code == 0
    code, out, _ = run("compare", "--model", path, "--baseline", str(bpe) + ".model",
                       "--input", str(DATA / "sample.txt"))
    assert code == 0
    assert out.splitlines()[0].split() == ["metric", "model", "baseline", "delta"]


def test_deterministic_runs(tmp_path):
    blobs = []
    for name in ("a", "b"):
        prefix = tmp_path / name
        assert run("train", "--input", str(DATA / "sample.txt"), "--model-prefix", str(prefix),
                   "--vocab-size", "120")[0] == 0
        blobs.append((tmp_path / f"{name}.model").read_bytes())
    assert blobs[0] == blobs[1]


@pytest.mark.parametrize("argv", [
    [],
    ["train", "--input", "x"],
    ["train", "--input", "x", "--model-prefix", "p", "--vocab-size", "ten"],
    ["encode", "--model", "m", "--lowercase", "maybe"],
    ["frobnicate"],
])
def test_usage_errors(argv):
    code, _, err = run(*argv)
    assert code == 1 and err


def test_config_error_exit_one(tmp_path):
    code, _, err = run("train", "--input", str(DATA / "sample.txt"), "--model-prefix", str(tmp_path / "p"),
                       "--vocab-size", "64", "--semantic-fraction", "1.5")
    assert code == 1 and "semantic_fraction" in err


def test_runtime_errors_exit_two(tmp_path, model):
    code, _, err = run("encode", "--model", str(tmp_path / "missing.model"), stdin="a\n")
    assert code == 2 and "missing.model" in err
    bad = tmp_path / "bad.model"
    bad.write_text("nope\n")
    code, _, err = run("encode", "--model", str(bad), stdin="a\n")
    assert code == 2 and "line 1" in err
    code, _, err = run("decode", "--model", str(model) + ".model", stdin="notapiece\n")
    assert code == 2 and "notapiece" in err
    code, _, _ = run("train", "--input", str(tmp_path / "none.txt"), "--model-prefix", str(tmp_path / "p"),
                     "--vocab-size", "64")
    assert code == 2
